#pragma once

#include <cstdint>
#include <vector>

#include "zdens/arith.hpp"

namespace zdens {

/// Real coefficients of a Dirichlet polynomial sum_n c_n n^{-s}; values[n] is
/// the coefficient of n^{-s}, values[0] unused.
struct DirichletCoeffs {
    std::vector<double> values;

    std::size_t top_index() const { return values.empty() ? 0 : values.size() - 1; }
};

/// Exact coefficients of (sum_{1<m<=T} m^{-s}) (sum_{n<=X} mu(n) n^{-s}) by
/// brute-force pair enumeration; c_k for k <= X*T.  Requires X*T <= 1e7 and
/// X <= tables.limit.
DirichletCoeffs mollifier_product_coeffs(std::uint64_t X, std::uint64_t T,
                                         const ArithTables& tables);

/// Montgomery-Vaughan right side sum_n |u_n|^2 (T/2 + 2 pi m0 (n+1)) with
/// u_n = c_n n^{-sigma}.
double mv_rhs(const DirichletCoeffs& coeffs, double sigma, double T);

/// Exact mean square Integral_{T/2}^{T} |sum_n u_n n^{it}|^2 dt by closed-form
/// pairwise integration.  Requires top index <= 1e5 (O(N^2)).
double exact_mean_square(const DirichletCoeffs& coeffs, double sigma, double T);
double exact_mean_square_serial(const DirichletCoeffs& coeffs, double sigma,
                                double T);

/// Mean-value lemma right side
///   2 pi m0 K(sigma,T) (XT)^{2-2 sigma} ln^2(XT)
///   + 1.36 (0.5 + 2 pi m0 / T) C(sigma,X0) T X^{1-2 sigma} ln^3 X.
/// Requires sigma in [0.6, 2/3], X >= X0 >= 433, T > 0.
double lemma_meanv_rhs(double sigma, double T, double X, double X0);

/// Second/fourth moment bounds for zeta on the critical line over [T, 2T].
/// Require T >= 14.1347.
double second_moment_bound(double T);
double fourth_moment_bound(double T);

/// Composite-Simpson estimate of Integral_T^{2T} |zeta(1/2+it)|^k dt.
/// k in {2,4}, 100 <= T <= 5000, 0 < step <= 0.1.  Deterministic node set.
double empirical_moment(int k, double T, double step);
double empirical_moment_serial(int k, double T, double step);

} // namespace zdens
