#pragma once

#include <complex>
#include <cstdint>

#include "zdens/arith.hpp"

namespace zdens {

/// Point s = sigma + i t in the critical strip neighbourhood.
struct ComplexPoint {
    double sigma = 0.0;
    double t = 0.0;
};

using ComplexValue = std::complex<double>;

/// Euler-Maclaurin evaluation of zeta(s) with a rigorous truncation bound.
/// Requires sigma >= 0.4, 0 <= t <= 1e5, abs_err >= 1e-12; the returned value
/// is within abs_err of zeta(s).  s = 1 throws DomainError (pole).
ComplexValue zeta_reference(ComplexPoint s, double abs_err);

/// Truncated Dirichlet sum sum_{1 <= n <= t} n^{-s} of the approximate
/// functional equation.  Requires t >= 14.1347 and sigma >= 1/2.
ComplexValue afe_main_sum(ComplexPoint s);

/// AFE remainder bound 1.755 t^{-sigma} under the same validity floor.
double afe_remainder_bound(double sigma, double t);

/// Mollifier M_X(s) = sum_{n <= X} mu(n) n^{-s}.  X <= tables.limit.
ComplexValue mollifier(ComplexPoint s, std::uint64_t X, const ArithTables& tables);

/// f_X(s) = zeta(s) M_X(s) - 1.
ComplexValue mollified_f(ComplexPoint s, std::uint64_t X, const ArithTables& tables,
                         double abs_err);

/// h_X(s) = 1 - f_X(s)^2 = zeta M_X (2 - zeta M_X); zeros of zeta are zeros of h_X.
ComplexValue mollified_h(ComplexPoint s, std::uint64_t X, const ArithTables& tables,
                         double abs_err);

} // namespace zdens
