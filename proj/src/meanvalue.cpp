#include "zdens/meanvalue.hpp"

#include <cmath>

#include <fmt/core.h>

#include "zdens/constants.hpp"
#include "zdens/errors.hpp"
#include "zdens/parallel.hpp"
#include "zdens/zeta.hpp"

namespace zdens {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr std::uint64_t kMaxProduct = 10'000'000;
constexpr std::size_t kMaxPairwise = 100'000;

double cube(double x) { return x * x * x; }
} // namespace

DirichletCoeffs mollifier_product_coeffs(std::uint64_t X, std::uint64_t T,
                                         const ArithTables& tables) {
    if (X * T > kMaxProduct)
        throw CapacityError(fmt::format(
            "mollifier_product_coeffs: X*T = {} exceeds {}", X * T, kMaxProduct));
    if (X > tables.limit)
        throw CapacityError("mollifier_product_coeffs: X exceeds sieve limit");
    DirichletCoeffs c;
    c.values.assign(X * T + 1, 0.0);
    for (std::uint64_t m = 2; m <= T; ++m)
        for (std::uint64_t n = 1; n <= X; ++n) {
            const int mu = tables.mu[n];
            if (mu != 0) c.values[m * n] += mu;
        }
    return c;
}

double mv_rhs(const DirichletCoeffs& coeffs, double sigma, double T) {
    if (T <= 0.0) throw DomainError("mv_rhs: T > 0 required");
    const double two_pi_m0 = 2.0 * kPi * mv_m0();
    KahanSum s;
    for (std::size_t n = 1; n < coeffs.values.size(); ++n) {
        const double c = coeffs.values[n];
        if (c == 0.0) continue;
        const double u = c * std::exp(-sigma * std::log(static_cast<double>(n)));
        s.add(u * u * (0.5 * T + two_pi_m0 * (static_cast<double>(n) + 1.0)));
    }
    return s.value();
}

namespace {

struct SparseCoeffs {
    std::vector<double> u;       // c_n n^{-sigma}
    std::vector<double> ln_n;
    std::vector<double> sin_T, cos_T, sin_H, cos_H; // rotations at T and T/2
};

SparseCoeffs make_sparse(const DirichletCoeffs& coeffs, double sigma, double T) {
    SparseCoeffs s;
    for (std::size_t n = 1; n < coeffs.values.size(); ++n) {
        const double c = coeffs.values[n];
        if (c == 0.0) continue;
        const double ln = std::log(static_cast<double>(n));
        s.u.push_back(c * std::exp(-sigma * ln));
        s.ln_n.push_back(ln);
        s.sin_T.push_back(std::sin(T * ln));
        s.cos_T.push_back(std::cos(T * ln));
        s.sin_H.push_back(std::sin(0.5 * T * ln));
        s.cos_H.push_back(std::cos(0.5 * T * ln));
    }
    return s;
}

double mean_square_impl(const DirichletCoeffs& coeffs, double sigma, double T,
                        bool parallel) {
    if (coeffs.top_index() > kMaxPairwise)
        throw CapacityError(fmt::format(
            "exact_mean_square: top index {} exceeds {}", coeffs.top_index(),
            kMaxPairwise));
    if (T <= 0.0) throw DomainError("exact_mean_square: T > 0 required");

    const SparseCoeffs s = make_sparse(coeffs, sigma, T);
    const std::size_t n = s.u.size();

    KahanSum diag;
    for (std::size_t i = 0; i < n; ++i) diag.add(s.u[i] * s.u[i]);

    // off-diagonal 2 sum_{i<j} u_i u_j (sin(T L) - sin(T L / 2)) / L,
    // L = ln_j - ln_i, with the sines expanded from precomputed rotations
    const auto blocks = make_blocks(0, n, 128);
    std::vector<double> partial(blocks.size(), 0.0);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks.size()); ++b) {
        KahanSum acc;
        for (std::size_t i = blocks[b].begin; i < blocks[b].end; ++i) {
            const double ui = s.u[i], li = s.ln_n[i];
            const double sTi = s.sin_T[i], cTi = s.cos_T[i];
            const double sHi = s.sin_H[i], cHi = s.cos_H[i];
            for (std::size_t j = i + 1; j < n; ++j) {
                const double L = s.ln_n[j] - li;
                const double sin_full = s.sin_T[j] * cTi - s.cos_T[j] * sTi;
                const double sin_half = s.sin_H[j] * cHi - s.cos_H[j] * sHi;
                acc.add(ui * s.u[j] * (sin_full - sin_half) / L);
            }
        }
        partial[b] = acc.value();
    }
    KahanSum off;
    for (double p : partial) off.add(p);
    return 0.5 * T * diag.value() + 2.0 * off.value();
}

} // namespace

double exact_mean_square(const DirichletCoeffs& coeffs, double sigma, double T) {
    return mean_square_impl(coeffs, sigma, T, true);
}

double exact_mean_square_serial(const DirichletCoeffs& coeffs, double sigma,
                                double T) {
    if (coeffs.top_index() > kMaxPairwise)
        throw CapacityError("exact_mean_square_serial: coefficient vector too long");
    if (T <= 0.0) throw DomainError("exact_mean_square_serial: T > 0 required");
    // direct evaluation of the closed-form pairwise integrals, no rotation trick
    std::vector<std::size_t> idx;
    std::vector<double> u, ln_n;
    for (std::size_t n = 1; n < coeffs.values.size(); ++n)
        if (coeffs.values[n] != 0.0) {
            idx.push_back(n);
            const double ln = std::log(static_cast<double>(n));
            ln_n.push_back(ln);
            u.push_back(coeffs.values[n] * std::exp(-sigma * ln));
        }
    KahanSum total;
    for (std::size_t i = 0; i < u.size(); ++i) {
        total.add(0.5 * T * u[i] * u[i]);
        for (std::size_t j = i + 1; j < u.size(); ++j) {
            const double L = ln_n[j] - ln_n[i];
            total.add(2.0 * u[i] * u[j] * (std::sin(T * L) - std::sin(0.5 * T * L)) / L);
        }
    }
    return total.value();
}

double lemma_meanv_rhs(double sigma, double T, double X, double X0) {
    if (sigma < 0.6 || sigma > 2.0 / 3.0 + 1e-12)
        throw DomainError("lemma_meanv_rhs: sigma in [0.6, 2/3] required");
    if (X0 < 433.0 || X < X0)
        throw DomainError("lemma_meanv_rhs: X >= X0 >= 433 required");
    if (T <= 0.0) throw DomainError("lemma_meanv_rhs: T > 0 required");
    const double two_pi_m0 = 2.0 * kPi * mv_m0();
    const double k = k_coeff(sigma, ExtReal::from_double(T));
    const double xt = X * T;
    const double lxt = std::log(xt);
    const double lx = std::log(X);
    return two_pi_m0 * k * std::pow(xt, 2.0 - 2.0 * sigma) * lxt * lxt
         + 1.36 * (0.5 + two_pi_m0 / T) * c_sigma(sigma, X0) * T
               * std::pow(X, 1.0 - 2.0 * sigma) * cube(lx);
}

double second_moment_bound(double T) {
    if (T < 14.1347) throw DomainError("second_moment_bound: T >= 14.1347 required");
    const double lt = std::log(T);
    return T * lt + 26.48 * T + 8.27 * lt + 17.20 + 8.27 / T;
}

double fourth_moment_bound(double T) {
    if (T < 14.1347) throw DomainError("fourth_moment_bound: T >= 14.1347 required");
    const double lt = std::log(T);
    return 24.0 * T * T * cube(std::log(8.0 * T))
         + 1022.0 * T * T * std::pow(std::log(2.0 * T), 2.0)
         + 2.0 * T * cube(std::log(4.0 * T))
         + 1181.16 * T * lt * lt
         + 19.86 * T * lt
         + 364.25 * T
         + 177.07 * lt
         + 355.83
         + 181.83 / T;
}

namespace {

double moment_impl(int k, double T, double step, bool parallel) {
    if (k != 2 && k != 4)
        throw DomainError("empirical_moment: k in {2, 4} required");
    if (T < 100.0 || T > 5000.0)
        throw DomainError("empirical_moment: T in [100, 5000] required");
    if (!(step > 0.0) || step > 0.1)
        throw DomainError("empirical_moment: step in (0, 0.1] required");

    auto intervals = static_cast<std::size_t>(std::ceil(T / step));
    if (intervals % 2 != 0) ++intervals;
    const double h = T / static_cast<double>(intervals);

    std::vector<double> f(intervals + 1);
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
    for (std::ptrdiff_t i = 0; i <= static_cast<std::ptrdiff_t>(intervals); ++i) {
        const double t = T + h * static_cast<double>(i);
        const ComplexValue z = zeta_reference({0.5, t}, 1e-8);
        const double sq = std::norm(z);
        f[i] = (k == 2) ? sq : sq * sq;
    }
    KahanSum s;
    s.add(f[0]);
    for (std::size_t i = 1; i < intervals; ++i) s.add((i % 2 == 1 ? 4.0 : 2.0) * f[i]);
    s.add(f[intervals]);
    return s.value() * h / 3.0;
}

} // namespace

double empirical_moment(int k, double T, double step) {
    return moment_impl(k, T, step, true);
}

double empirical_moment_serial(int k, double T, double step) {
    return moment_impl(k, T, step, false);
}

} // namespace zdens
