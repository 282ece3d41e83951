#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zdens/constants.hpp"
#include "zdens/extreal.hpp"

namespace zdens {

/// A zero-density bound coefficient(sigma) * T^{t_exponent(sigma)}
/// * (ln T - shift)^{log_exponent(sigma)} [+ extra_term], valid for sigma in
/// [sigma_lo, sigma_hi] and ln T >= t_floor_ln.
struct BoundSpec {
    std::string id;
    std::function<double(double)> coefficient;
    std::function<double(double)> t_exponent;
    std::function<double(double)> log_exponent;
    double log_argument_shift = 0.0; // 0 for ln T, ln 2 for ln(T/2)
    double sigma_lo = 0.5;
    double sigma_hi = 1.0;
    double t_floor_ln = 0.0;
    /// Optional additive lower-order term, e.g. the C2 ln^2 T companion.
    std::function<ExtReal(double sigma, double lnT)> extra_term;
    bool calibrated = false; // constants reverse-engineered, flagged in output

    bool valid_at(double sigma, double lnT) const {
        return sigma >= sigma_lo - 1e-12 && sigma <= sigma_hi + 1e-12 &&
               lnT >= t_floor_ln - 1e-9;
    }
};

/// Theorem bound K(sigma,T0) T^{4 sigma(1-sigma)} (ln T)^{5-2 sigma} at height
/// ln T = logT.  k_override > 0 substitutes a reference K (e.g. a published
/// table value) for the pipeline's; section5_log_exponent switches the log
/// power to the alternative final-section value 4.
ExtReal carlson_bound(const DensityParams& params, double logT,
                      double k_override = 0.0, bool section5_log_exponent = false);

BoundSpec make_carlson_spec(const DensityParams& params, double k_override = 0.0,
                            bool section5_log_exponent = false);

struct ComparatorConfig {
    std::optional<double> kln_c1;
    std::optional<double> kln_c2;
    std::optional<double> simonic_k2;
    std::optional<double> bohr_landau_c; // optional extra shape
    bool simonic_calibrated = false;
};

/// Registry of the published comparator shapes; throws ConfigError naming the
/// missing keys when required constants are absent.
std::vector<BoundSpec> builtin_bounds(const ComparatorConfig& config);

/// Throws DomainError outside the spec's validity region.
ExtReal eval_bound(const BoundSpec& spec, double sigma, double logT);

/// Bisection in ln T for the height where bounds a and b cross, to 1e-9
/// relative tolerance, <= 200 iterations.  Requires a sign change of a-b
/// between the endpoints (else BracketError).
double crossover(const BoundSpec& a, const BoundSpec& b, double sigma,
                 double logT_lo, double logT_hi);

struct RegionMap {
    std::vector<double> sigma_axis;
    std::vector<double> logT_axis; // natural log
    std::vector<std::string> bound_ids;
    // winner[i][j]: id minimizing the valid bound values at
    // (sigma_axis[i], logT_axis[j]); "none" when no bound is valid there
    std::vector<std::vector<std::string>> winner;
    // values[b][i][j]: bound b at the cell; nullopt where invalid
    std::vector<std::vector<std::vector<std::optional<ExtReal>>>> values;
};

RegionMap region_map(const std::vector<double>& sigma_axis,
                     const std::vector<double>& logT_axis,
                     const std::vector<BoundSpec>& specs);

} // namespace zdens
