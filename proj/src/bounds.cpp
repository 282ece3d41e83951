#include "zdens/bounds.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>
#include <fmt/ranges.h>

#include "zdens/errors.hpp"

namespace zdens {

namespace {

constexpr double kLnH0 = 28.729650128810124;  // ln(3e12), verified-RH height
constexpr double kLn2H0 = kLnH0 + 0.6931471805599453;

ExtReal shape_value(double coeff, double t_exp, double log_exp, double shift,
                    double logT) {
    if (coeff <= 0.0) throw DomainError("eval_bound: nonpositive coefficient");
    const double log_arg = logT - shift;
    if (log_arg <= 0.0)
        throw DomainError("eval_bound: log argument not positive");
    return ExtReal::from_ln(std::log(coeff) + t_exp * logT +
                            log_exp * std::log(log_arg), 1);
}

} // namespace

ExtReal carlson_bound(const DensityParams& params, double logT, double k_override,
                      bool section5_log_exponent) {
    if (logT < params.log_T0 - 1e-9)
        throw DomainError(fmt::format(
            "carlson_bound: logT = {} below log_T0 = {}", logT, params.log_T0));
    const double k =
        k_override > 0.0 ? k_override : k_final(params).k_final;
    const double s = params.sigma;
    const double log_exp = section5_log_exponent ? 4.0 : 5.0 - 2.0 * s;
    return shape_value(k, 4.0 * s * (1.0 - s), log_exp, 0.0, logT);
}

BoundSpec make_carlson_spec(const DensityParams& params, double k_override,
                            bool section5_log_exponent) {
    BoundSpec spec;
    spec.id = "carlson";
    const double log_T0 = params.log_T0;
    if (k_override > 0.0) {
        spec.coefficient = [k_override](double) { return k_override; };
    } else {
        spec.coefficient = [log_T0](double sigma) {
            return k_final(DensityParams::make(sigma, log_T0)).k_final;
        };
    }
    spec.t_exponent = [](double sigma) { return 4.0 * sigma * (1.0 - sigma); };
    if (section5_log_exponent)
        spec.log_exponent = [](double) { return 4.0; };
    else
        spec.log_exponent = [](double sigma) { return 5.0 - 2.0 * sigma; };
    spec.sigma_lo = 0.6;
    spec.sigma_hi = 2.0 / 3.0;
    spec.t_floor_ln = log_T0;
    return spec;
}

std::vector<BoundSpec> builtin_bounds(const ComparatorConfig& config) {
    std::vector<std::string> missing;
    if (!config.kln_c1) missing.push_back("kln_c1");
    if (!config.simonic_k2) missing.push_back("simonic_k2");
    if (!missing.empty())
        throw ConfigError(fmt::format("builtin_bounds: missing comparator constants: {}",
                                      fmt::join(missing, ", ")));

    std::vector<BoundSpec> specs;

    {
        BoundSpec kln;
        kln.id = "kln";
        const double c1 = *config.kln_c1;
        kln.coefficient = [c1](double) { return c1; };
        kln.t_exponent = [](double sigma) { return (8.0 / 3.0) * (1.0 - sigma); };
        kln.log_exponent = [](double sigma) { return 5.0 - 2.0 * sigma; };
        kln.sigma_lo = 0.5;
        kln.sigma_hi = 1.0;
        kln.t_floor_ln = kLnH0;
        if (config.kln_c2) {
            const double c2 = *config.kln_c2;
            kln.extra_term = [c2](double, double lnT) {
                return ExtReal::from_ln(std::log(c2) + 2.0 * std::log(lnT), 1);
            };
        }
        specs.push_back(std::move(kln));
    }

    {
        BoundSpec sim;
        sim.id = "simonic";
        const double k2 = *config.simonic_k2;
        sim.coefficient = [k2](double sigma) {
            return k2 / std::pow(2.0, 1.0 - (sigma - 0.5) / 4.0);
        };
        sim.t_exponent = [](double sigma) { return 1.0 - (sigma - 0.5) / 4.0; };
        sim.log_exponent = [](double) { return 1.0; };
        sim.log_argument_shift = 0.6931471805599453; // ln(T/2)
        sim.sigma_lo = 0.5;
        sim.sigma_hi = 1.0;
        sim.t_floor_ln = kLn2H0;
        sim.calibrated = config.simonic_calibrated;
        specs.push_back(std::move(sim));
    }

    if (config.bohr_landau_c) {
        BoundSpec bl;
        bl.id = "bohr_landau";
        const double c = *config.bohr_landau_c;
        bl.coefficient = [c](double sigma) { return c / (sigma - 0.5); };
        bl.t_exponent = [](double) { return 1.0; };
        bl.log_exponent = [](double) { return 0.0; };
        bl.sigma_lo = 0.5 + 1e-6;
        bl.sigma_hi = 1.0;
        bl.t_floor_ln = kLnH0;
        specs.push_back(std::move(bl));
    }

    return specs;
}

ExtReal eval_bound(const BoundSpec& spec, double sigma, double logT) {
    if (!spec.valid_at(sigma, logT))
        throw DomainError(fmt::format(
            "eval_bound: ({}, logT={}) outside validity of '{}'", sigma, logT,
            spec.id));
    ExtReal v = shape_value(spec.coefficient(sigma), spec.t_exponent(sigma),
                            spec.log_exponent(sigma), spec.log_argument_shift,
                            logT);
    if (spec.extra_term) v = v + spec.extra_term(sigma, logT);
    return v;
}

double crossover(const BoundSpec& a, const BoundSpec& b, double sigma,
                 double logT_lo, double logT_hi) {
    if (!(logT_lo < logT_hi))
        throw DomainError("crossover: logT_lo < logT_hi required");
    auto diff_sign = [&](double logT) {
        return (eval_bound(a, sigma, logT) - eval_bound(b, sigma, logT)).sign();
    };
    int s_lo = diff_sign(logT_lo);
    int s_hi = diff_sign(logT_hi);
    if (s_lo == 0) return logT_lo;
    if (s_hi == 0) return logT_hi;
    if (s_lo == s_hi)
        throw BracketError(fmt::format(
            "crossover: no sign change of {} - {} on [{}, {}] at sigma = {}",
            a.id, b.id, logT_lo, logT_hi, sigma));
    double lo = logT_lo, hi = logT_hi;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= 1e-9 * std::max(1.0, std::abs(mid))) return mid;
        const int s_mid = diff_sign(mid);
        if (s_mid == 0) return mid;
        if (s_mid == s_lo)
            lo = mid;
        else
            hi = mid;
    }
    throw ConvergenceError("crossover: bisection did not converge in 200 iterations");
}

RegionMap region_map(const std::vector<double>& sigma_axis,
                     const std::vector<double>& logT_axis,
                     const std::vector<BoundSpec>& specs) {
    if (sigma_axis.empty() || logT_axis.empty())
        throw DomainError("region_map: empty axis");

    // evaluate in id-lexicographic order so ties resolve deterministically
    std::vector<std::size_t> order(specs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return specs[x].id < specs[y].id;
    });

    RegionMap map;
    map.sigma_axis = sigma_axis;
    map.logT_axis = logT_axis;
    for (std::size_t b : order) map.bound_ids.push_back(specs[b].id);
    map.winner.assign(sigma_axis.size(),
                      std::vector<std::string>(logT_axis.size(), "none"));
    map.values.assign(
        specs.size(),
        std::vector<std::vector<std::optional<ExtReal>>>(
            sigma_axis.size(),
            std::vector<std::optional<ExtReal>>(logT_axis.size())));

#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(sigma_axis.size());
         ++i) {
        const double sigma = sigma_axis[i];
        for (std::size_t j = 0; j < logT_axis.size(); ++j) {
            const double logT = logT_axis[j];
            std::optional<ExtReal> best;
            for (std::size_t b = 0; b < map.bound_ids.size(); ++b) {
                const BoundSpec& spec = specs[order[b]];
                if (!spec.valid_at(sigma, logT)) continue;
                const ExtReal v = eval_bound(spec, sigma, logT);
                map.values[b][i][j] = v;
                if (!best || ExtReal::cmp(v, *best) < 0) {
                    best = v;
                    map.winner[i][j] = spec.id;
                }
            }
        }
    }
    return map;
}

} // namespace zdens
