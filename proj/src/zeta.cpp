#include "zdens/zeta.hpp"

#include <cmath>

#include <fmt/core.h>

#include "zdens/errors.hpp"
#include "zdens/parallel.hpp"

namespace zdens {

namespace {

// B_{2k}/(2k)! for the Euler-Maclaurin correction, k = 1..4
constexpr double kBernFact[4] = {
    1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0};
// |B_10/10!| for the truncation bound
constexpr double kBern10Fact = 1.0 / 47900160.0;

struct ComplexKahan {
    KahanSum re, im;
    void add(ComplexValue v) { re.add(v.real()); im.add(v.imag()); }
    ComplexValue value() const { return {re.value(), im.value()}; }
};

ComplexValue n_pow_minus_s(double n, double sigma, double t) {
    const double ln = std::log(n);
    const double mag = std::exp(-sigma * ln);
    return {mag * std::cos(t * ln), -mag * std::sin(t * ln)};
}

// rigorous bound on the dropped Euler-Maclaurin terms beyond B_8
double em_truncation_bound(double sigma, double t, double n) {
    double prod = 1.0;
    for (int j = 0; j <= 8; ++j)
        prod *= std::hypot(sigma + j, t);
    const double ratio = std::hypot(sigma + 9.0, t) / (sigma + 9.0);
    return kBern10Fact * prod * std::exp(-(sigma + 9.0) * std::log(n)) * ratio;
}

ComplexValue euler_maclaurin(double sigma, double t, std::uint64_t N) {
    const ComplexValue s{sigma, t};
    ComplexKahan main;
    for (std::uint64_t n = 1; n < N; ++n)
        main.add(n_pow_minus_s(static_cast<double>(n), sigma, t));

    const double dN = static_cast<double>(N);
    const ComplexValue n_s = n_pow_minus_s(dN, sigma, t);
    ComplexValue total = main.value();
    total += dN * n_s / (s - 1.0); // N^{1-s}/(s-1)
    total += 0.5 * n_s;

    ComplexValue poly = s;           // s (s+1) ... (s+2k-2)
    ComplexValue npow = n_s / dN;    // N^{-s-2k+1}
    for (int k = 1; k <= 4; ++k) {
        total += kBernFact[k - 1] * poly * npow;
        poly *= (s + ComplexValue(2.0 * k - 1.0)) * (s + ComplexValue(2.0 * k));
        npow /= dN * dN;
    }
    return total;
}

} // namespace

ComplexValue zeta_reference(ComplexPoint p, double abs_err) {
    if (p.sigma < 0.4)
        throw DomainError("zeta_reference: sigma >= 0.4 required");
    if (p.t < 0.0 || p.t > 1e5)
        throw DomainError("zeta_reference: t in [0, 1e5] required");
    if (abs_err < 1e-12)
        throw DomainError("zeta_reference: abs_err >= 1e-12 required");
    if (p.sigma == 1.0 && p.t == 0.0)
        throw DomainError("zeta_reference: pole at s = 1");

    auto N = static_cast<std::uint64_t>(
        std::max(64.0, std::ceil(2.0 * p.t)));
    for (;;) {
        const double bound = em_truncation_bound(p.sigma, p.t, static_cast<double>(N));
        if (bound <= 0.5 * abs_err) break;
        if (N > 8'000'000)
            throw PrecisionError(fmt::format(
                "zeta_reference: cannot certify abs_err {:.1e} at sigma={}, t={}",
                abs_err, p.sigma, p.t));
        N *= 2;
    }
    return euler_maclaurin(p.sigma, p.t, N);
}

ComplexValue afe_main_sum(ComplexPoint p) {
    if (p.t < 14.1347)
        throw DomainError("afe_main_sum: t >= 14.1347 required");
    if (p.sigma < 0.5)
        throw DomainError("afe_main_sum: sigma >= 1/2 required");
    const auto top = static_cast<std::uint64_t>(std::floor(p.t));
    ComplexKahan sum;
    for (std::uint64_t n = 1; n <= top; ++n)
        sum.add(n_pow_minus_s(static_cast<double>(n), p.sigma, p.t));
    return sum.value();
}

double afe_remainder_bound(double sigma, double t) {
    if (t < 14.1347)
        throw DomainError("afe_remainder_bound: t >= 14.1347 required");
    if (sigma < 0.5)
        throw DomainError("afe_remainder_bound: sigma >= 1/2 required");
    return 1.755 * std::exp(-sigma * std::log(t));
}

ComplexValue mollifier(ComplexPoint p, std::uint64_t X, const ArithTables& tables) {
    if (X > tables.limit)
        throw CapacityError(fmt::format(
            "mollifier: X = {} exceeds sieve limit {}", X, tables.limit));
    ComplexKahan sum;
    for (std::uint64_t n = 1; n <= X; ++n) {
        const int mu = tables.mu[n];
        if (mu == 0) continue;
        sum.add(static_cast<double>(mu)
                * n_pow_minus_s(static_cast<double>(n), p.sigma, p.t));
    }
    return sum.value();
}

ComplexValue mollified_f(ComplexPoint p, std::uint64_t X, const ArithTables& tables,
                         double abs_err) {
    return zeta_reference(p, abs_err) * mollifier(p, X, tables) - 1.0;
}

ComplexValue mollified_h(ComplexPoint p, std::uint64_t X, const ArithTables& tables,
                         double abs_err) {
    const ComplexValue f = mollified_f(p, X, tables, abs_err);
    return 1.0 - f * f;
}

} // namespace zdens
