#include "zdens/constants.hpp"

#include <cmath>

#include <fmt/core.h>

#include "zdens/errors.hpp"

namespace zdens {

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kLnH0 = std::log(3e12);
const double kLn433 = std::log(433.0);
constexpr double kSigmaHi = 2.0 / 3.0;
constexpr double kSigmaTol = 1e-12;

void check_sigma_open(double sigma, const char* who) {
    if (!(sigma > 0.5 && sigma < 1.0))
        throw DomainError(fmt::format("{}: sigma {} outside (0.5, 1)", who, sigma));
}
} // namespace

double mv_m0() {
    static const double m0 = std::sqrt(1.0 + (2.0 / 3.0) * std::sqrt(6.0 / 5.0));
    return m0;
}

DensityParams DensityParams::make(double sigma, double log_T0,
                                  bool override_sigma_range) {
    if (override_sigma_range) {
        check_sigma_open(sigma, "DensityParams");
    } else if (sigma < 0.6 - kSigmaTol || sigma > kSigmaHi + kSigmaTol) {
        throw DomainError(fmt::format(
            "DensityParams: sigma {} outside [0.6, 2/3]; pass the sigma-range "
            "override to widen to (0.5, 1)", sigma));
    }
    if (log_T0 < kLnH0 - 1e-9)
        throw DomainError(fmt::format(
            "DensityParams: ln T0 = {} below ln(3e12) = {:.6f}", log_T0, kLnH0));
    return DensityParams{sigma, log_T0};
}

double c_sigma_ln(double sigma, double ln_X0) {
    check_sigma_open(sigma, "c_sigma");
    if (ln_X0 < kLn433 - 1e-12)
        throw DomainError("c_sigma: X0 >= 433 required");
    const double s = 2.0 * sigma - 1.0;
    const double bracket = s * s * s + 3.0 * s * s / ln_X0
                         + 6.0 * s / (ln_X0 * ln_X0)
                         + 6.0 / (ln_X0 * ln_X0 * ln_X0);
    return sigma / (2.0 * s * s * s * s) * bracket;
}

double c_sigma(double sigma, double X0) {
    if (X0 < 433.0) throw DomainError("c_sigma: X0 >= 433 required");
    return c_sigma_ln(sigma, std::log(X0));
}

double k_coeff(double sigma, const ExtReal& T) {
    check_sigma_open(sigma, "k_coeff");
    if (T.sign() <= 0 || T.ln_mag() <= 0.0)
        throw DomainError("k_coeff: T > 1 required");
    const double s = 2.0 * sigma - 1.0;
    const double decay = std::exp(-(2.0 - 2.0 * sigma) * T.ln_mag());
    // 2 sigma - 2 < 0, so the second term adds to 1/4
    return 0.25 - s / (4.0 * (2.0 * sigma - 2.0)) * (1.0 - decay);
}

double k_coeff_sup(double sigma) {
    check_sigma_open(sigma, "k_coeff_sup");
    return 0.25 + (2.0 * sigma - 1.0) / (4.0 * (2.0 - 2.0 * sigma));
}

namespace {

ConstantBreakdown assemble(const DensityParams& p) {
    ConstantBreakdown b;
    const double sigma = p.sigma;
    const double lt = p.log_T0;
    const double llt = std::log(lt);
    const double ratio = llt / lt;
    const double s = 2.0 * sigma - 1.0;
    const double two_pi_m0 = 2.0 * kPi * mv_m0();
    const double inv_T0 = std::exp(-lt); // underflows to 0 for huge T0

    const double ln_x0_raw = s * lt;
    b.x0_clamped = ln_x0_raw < kLn433;
    b.ln_x0_used = b.x0_clamped ? kLn433 : ln_x0_raw;
    if (b.x0_clamped)
        b.warnings.push_back(fmt::format(
            "X0 = T0^(2 sigma - 1) = e^{:.4f} < 433; clamped to 433 (divisor "
            "tail bound validity floor)", ln_x0_raw));

    b.c_of_sigma = c_sigma_ln(sigma, b.ln_x0_used);
    b.k_coeff_sup = k_coeff_sup(sigma);

    const double cube1 = std::pow(s + ratio, 3.0);
    b.c1 = 1.36 * (0.5 + two_pi_m0 * inv_T0) * cube1 * b.c_of_sigma
         + two_pi_m0 * (b.k_coeff_sup / lt) * std::pow(2.0 * sigma + ratio, 2.0);

    b.c2_secondary = 166.34 / s * (1.0 - std::pow(2.0, 1.0 - 2.0 * sigma))
                   * inv_T0 / (lt * lt * lt);
    b.c2 = 2.0 * b.c1 + b.c2_secondary;

    b.c3 = b.c2 / (1.0 - std::pow(0.5, 4.0 * sigma * (1.0 - sigma)));

    const double arg_factor = 1.25 - sigma + 1.0 / lt;
    const double arg_term = 17.29 / (2.0 * kPi * lt * lt) * arg_factor;
    const double tail_term = 0.05 / (4.0 * kPi * lt * lt);
    b.k_final = b.c3 / (2.0 * kPi) + arg_term + tail_term;
    b.k_paper_rounded = b.c3 / (2.0 * kPi) + 0.004 * arg_factor + tail_term;

    // |R|^2 second moment term at T = T0, X = T0^{2 sigma - 1} ln T0:
    // 3.09 X^{2-2s'} (1-s')^{-2} (2^{2s'-1}-1) (2s'-1)^{-1} T^{1-2s'}, s' = sigma
    const double ln_b = std::log(3.09) + (2.0 - 2.0 * sigma) * llt
                      - 2.0 * std::log(1.0 - sigma)
                      + std::log(std::pow(2.0, s) - 1.0) - std::log(s)
                      - s * s * lt;
    b.b_term_exact = std::exp(ln_b);
    return b;
}

} // namespace

double c1(const DensityParams& p) { return assemble(p).c1; }
double c2(const DensityParams& p) { return assemble(p).c2; }
double c3(const DensityParams& p) { return assemble(p).c3; }
ConstantBreakdown k_final(const DensityParams& p) { return assemble(p); }

double k_limit(double sigma) {
    check_sigma_open(sigma, "k_limit");
    const double s = 2.0 * sigma - 1.0;
    return 0.68 * sigma * s * s
         / (1.0 - std::pow(0.5, 4.0 * sigma * (1.0 - sigma))) / (2.0 * kPi);
}

const std::vector<TableRow>& reference_table() {
    static const std::vector<TableRow> rows = {
        {std::log10(3e12), 0.60, 0.7756},
        {std::log10(3e12), 0.66, 0.2781},
        {20.0, 0.60, 0.0686},
        {20.0, 0.65, 0.0963},
        {50.0, 0.61, 0.0597},
        {50.0, 0.65, 0.0453},
        {70.0, 0.62, 0.2447},
        {70.0, 0.66, 0.0253},
        {200.0, 0.62, 0.1414},
    };
    return rows;
}

} // namespace zdens
