#pragma once

#include <string>
#include <vector>

#include "zdens/extreal.hpp"

namespace zdens {

/// The Montgomery-Vaughan constant m0 = sqrt(1 + (2/3) sqrt(6/5)), always
/// computed from its defining expression.
double mv_m0();

/// Parameter pair (sigma, ln T0) of the zero-density estimate.
/// Strict mode keeps sigma in [0.6, 2/3]; the override widens to (0.5, 1).
/// ln T0 >= ln(3e12) always (verified-RH floor).
struct DensityParams {
    double sigma = 0.6;
    double log_T0 = 0.0; // natural log of T0

    static DensityParams make(double sigma, double log_T0,
                              bool override_sigma_range = false);
};

/// Every intermediate constant of the pipeline, with provenance flags.
struct ConstantBreakdown {
    double ln_x0_used = 0.0;   // ln of the X0 fed to C(sigma, X0)
    bool x0_clamped = false;   // true when T0^{2 sigma - 1} < 433 forced X0 = 433
    double c_of_sigma = 0.0;   // C(sigma, X0)
    double k_coeff_sup = 0.0;  // sup_{T >= T0} K(sigma, T) (closed form T -> inf)
    double c1 = 0.0;
    double c2 = 0.0;
    double c2_secondary = 0.0; // the O(1/T0) addition inside c2
    double c3 = 0.0;
    double k_final = 0.0;
    /// Value with the argument-integral term frozen at the literal 0.004
    /// coefficient instead of 17.29/(2 pi ln^2 T0); reported for reference.
    double k_paper_rounded = 0.0;
    /// The evaluable closed form of the remainder-term second moment at T = T0
    /// (underflows to 0 for very large T0); informational.
    double b_term_exact = 0.0;
    std::vector<std::string> warnings;
};

/// C(sigma, X0) = sigma/(2(2s-1)^4) ((2s-1)^3 + 3(2s-1)^2/ln X0
///                + 6(2s-1)/ln^2 X0 + 6/ln^3 X0),  s = sigma.
/// Requires sigma in (0.5, 1) and X0 >= 433.
double c_sigma(double sigma, double X0);
/// Same, taking ln X0 directly (X0 may exceed double range).
double c_sigma_ln(double sigma, double ln_X0);

/// K(sigma, T) = 1/4 - ((2 sigma - 1)/(4 (2 sigma - 2))) (1 - T^{-(2-2 sigma)}).
/// Requires sigma in (0.5, 1), T > 1.
double k_coeff(double sigma, const ExtReal& T);
/// Closed-form limit of K(sigma, T) as T -> inf; K is increasing in T, so this
/// is its supremum over T >= T0 for any T0.
double k_coeff_sup(double sigma);

double c1(const DensityParams& params);
double c2(const DensityParams& params);
double c3(const DensityParams& params);

/// Full pipeline: C(sigma, X0) -> C1 -> C2 -> C3 -> K(sigma, T0).
ConstantBreakdown k_final(const DensityParams& params);

/// Large-T0 limit (1/2pi) 0.68 sigma (2 sigma - 1)^2 / (1 - 0.5^{4 sigma (1-sigma)}).
double k_limit(double sigma);

/// Table of reference (T0, sigma, K) triples published with the estimate.
struct TableRow {
    double log10_T0;
    double sigma;
    double k_reference;
};
const std::vector<TableRow>& reference_table();

} // namespace zdens
