#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "zdens/arith.hpp"
#include "zdens/bounds.hpp"
#include "zdens/config.hpp"
#include "zdens/constants.hpp"
#include "zdens/errors.hpp"
#include "zdens/meanvalue.hpp"
#include "zdens/report.hpp"
#include "zdens/zeros.hpp"
#include "zdens/zeta.hpp"

namespace {

using namespace zdens;

constexpr double kLn10 = 2.302585092994046;
constexpr double kLog10T0Default = 12.477121254719663; // log10(3e12)

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

struct CommonOpts {
    std::string config_path;
    std::string format; // empty = from config
    double sigma = 0.6;
    double log10T = 0.0;
    double log10T0 = kLog10T0Default;
    std::uint64_t limit = 0;
    std::string dataset;
    bool override_sigma_range = false;
    std::string log_exponent = "theorem"; // theorem | section5
};

Config load_config(const CommonOpts& opts) {
    Config cfg = opts.config_path.empty() ? Config{}
                                          : parse_config_file(opts.config_path);
    if (!opts.format.empty()) cfg.output_format = opts.format;
    if (opts.limit != 0) cfg.sieve_limit = opts.limit;
    if (!opts.dataset.empty()) cfg.dataset_path = opts.dataset;
    cfg.validate();
    return cfg;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "Config file (key = value)");
    cmd->add_option("--format", opts.format, "Output format: csv or json");
}

std::string join_warnings(const std::vector<std::string>& warnings) {
    std::string out;
    for (const auto& w : warnings) {
        if (!out.empty()) out += "; ";
        out += w;
    }
    return out;
}

DensityParams make_params(const CommonOpts& opts) {
    return DensityParams::make(opts.sigma, opts.log10T0 * kLn10,
                               opts.override_sigma_range);
}

int cmd_constants(const CommonOpts& opts) {
    const Config cfg = load_config(opts);
    const DensityParams params = make_params(opts);
    const ConstantBreakdown b = k_final(params);
    Report r;
    r.columns = {"key", "value"};
    r.add_row({"sigma", format_real(params.sigma)});
    r.add_row({"log10_T0", format_real(params.log_T0 / kLn10)});
    r.add_row({"ln_x0_used", format_real(b.ln_x0_used)});
    r.add_row({"x0_clamped", b.x0_clamped ? "true" : "false"});
    r.add_row({"c_of_sigma", format_real(b.c_of_sigma)});
    r.add_row({"k_coeff_sup", format_real(b.k_coeff_sup)});
    r.add_row({"c1", format_real(b.c1)});
    r.add_row({"c2", format_real(b.c2)});
    r.add_row({"c2_secondary", format_real(b.c2_secondary)});
    r.add_row({"c3", format_real(b.c3)});
    r.add_row({"k_final", format_real(b.k_final)});
    r.add_row({"k_paper_rounded", format_real(b.k_paper_rounded)});
    r.add_row({"k_limit", format_real(k_limit(params.sigma))});
    r.add_row({"b_term_exact", format_real(b.b_term_exact)});
    r.add_row({"warnings", join_warnings(b.warnings)});
    fmt::print("{}", emit(r, cfg.output_format));
    return kExitOk;
}

int cmd_table1(const CommonOpts& opts) {
    const Config cfg = load_config(opts);
    Report r;
    r.columns = {"t0_log10", "sigma", "k_computed", "k_reference",
                 "rel_deviation", "warnings"};
    for (const TableRow& row : reference_table()) {
        const DensityParams params =
            DensityParams::make(row.sigma, row.log10_T0 * kLn10);
        const ConstantBreakdown b = k_final(params);
        const double dev = (b.k_final - row.k_reference) / row.k_reference;
        r.add_row({format_real(row.log10_T0), format_real(row.sigma),
                   format_real(b.k_final), format_real(row.k_reference),
                   format_real(dev), join_warnings(b.warnings)});
    }
    fmt::print("{}", emit(r, cfg.output_format));
    return kExitOk;
}

int cmd_compare(const CommonOpts& opts) {
    const Config cfg = load_config(opts);
    const DensityParams params = make_params(opts);
    const BoundSpec carlson = make_carlson_spec(
        params, 0.0, opts.log_exponent == "section5");
    const std::vector<BoundSpec> others = builtin_bounds(cfg.comparators);

    Report r;
    r.columns = {"sigma", "bound_a", "bound_b", "log10T_star", "flags"};
    for (const BoundSpec& other : others) {
        if (!(other.sigma_lo <= params.sigma && params.sigma <= other.sigma_hi))
            continue;
        const double lo =
            std::max(carlson.t_floor_ln, other.t_floor_ln) + 1e-6;
        const double hi = cfg.log10T_max * kLn10;
        std::string star, flags = other.calibrated ? "calibrated" : "";
        try {
            star = format_real(crossover(carlson, other, params.sigma, lo, hi) /
                               kLn10);
        } catch (const BracketError&) {
            star = "none";
            flags = flags.empty() ? "no-crossing" : flags + "; no-crossing";
        }
        r.add_row({format_real(params.sigma), carlson.id, other.id, star, flags});
    }
    fmt::print("{}", emit(r, cfg.output_format));
    return kExitOk;
}

int cmd_regions(const CommonOpts& opts) {
    const Config cfg = load_config(opts);
    const DensityParams seed = DensityParams::make(
        0.6, std::max(opts.log10T0 * kLn10, std::log(3e12)));
    std::vector<BoundSpec> specs = builtin_bounds(cfg.comparators);
    specs.push_back(make_carlson_spec(seed, 0.0, opts.log_exponent == "section5"));

    std::vector<double> sigma_axis, logT_axis;
    for (double s = cfg.sigma_min; s <= cfg.sigma_max + 1e-12;
         s += cfg.sigma_step)
        sigma_axis.push_back(s);
    for (double l = cfg.log10T_min; l <= cfg.log10T_max + 1e-12;
         l += cfg.log10T_step)
        logT_axis.push_back(l * kLn10);

    const RegionMap map = region_map(sigma_axis, logT_axis, specs);

    Report r;
    r.columns = {"sigma", "log10T", "winner"};
    for (const std::string& id : map.bound_ids) r.columns.push_back(id);
    for (std::size_t i = 0; i < sigma_axis.size(); ++i)
        for (std::size_t j = 0; j < logT_axis.size(); ++j) {
            std::vector<std::string> row = {format_real(sigma_axis[i]),
                                            format_real(logT_axis[j] / kLn10),
                                            map.winner[i][j]};
            for (std::size_t b = 0; b < map.bound_ids.size(); ++b) {
                const auto& v = map.values[b][i][j];
                row.push_back(v ? v->str() : "");
            }
            r.add_row(std::move(row));
        }
    fmt::print("{}", emit(r, cfg.output_format));
    return kExitOk;
}

int cmd_verify_divisor(const CommonOpts& opts) {
    const Config cfg = load_config(opts);
    const std::uint64_t limit = std::max<std::uint64_t>(cfg.sieve_limit, 10'000);
    const ArithTables tables = build_arith_tables(limit);

    bool violated = false;
    Report r;
    r.columns = {"check", "x", "tau", "lhs", "rhs", "margin"};

    const ChtPrefixReport prefix = verify_cht_prefix(tables, 433, limit);
    if (!prefix.violations.empty()) violated = true;
    const double t = static_cast<double>(prefix.min_margin_t);
    const double rhs =
        0.25 * t * std::log(t) * std::log(t) * std::log(t);
    r.add_row({"prefix", fmt::format("{}", prefix.min_margin_t), "",
               fmt::format("{}", tables.d2_prefix(prefix.min_margin_t)),
               format_real(rhs), format_real(prefix.min_margin)});

    for (const std::uint64_t X : {std::uint64_t{433}, std::uint64_t{1000},
                                  std::uint64_t{10'000}})
        for (const double tau : {1.2, 4.0 / 3.0, 2.0}) {
            const TailEnclosure enc =
                tail_sum_oracle(tables, X, tau, 0, 100.0);
            const double bound = cht_tail_bound(static_cast<double>(X), tau);
            const double margin = 1.0 - enc.hi / bound;
            if (!(margin > 0.0)) violated = true;
            r.add_row({"tail", fmt::format("{}", X), format_real(tau),
                       format_real(enc.hi), format_real(bound),
                       format_real(margin)});
        }

    fmt::print("{}", emit(r, cfg.output_format));
    return violated ? kExitViolation : kExitOk;
}

int cmd_verify_afe(const CommonOpts& opts) {
    const Config cfg = load_config(opts);
    bool violated = false;
    Report r;
    r.columns = {"sigma", "t", "residual", "bound", "margin"};
    for (const double sigma : {0.5, 0.6, 2.0 / 3.0, 1.0})
        for (const double t : {20.0, 100.0, 1000.0, 2000.0}) {
            const ComplexValue ref = zeta_reference({sigma, t}, 1e-10);
            const ComplexValue main = afe_main_sum({sigma, t});
            const double residual = std::abs(ref - main);
            const double bound = afe_remainder_bound(sigma, t);
            const double margin = 1.0 - residual / bound;
            if (!(margin > 0.0)) violated = true;
            r.add_row({format_real(sigma), format_real(t), format_real(residual),
                       format_real(bound), format_real(margin)});
        }
    fmt::print("{}", emit(r, cfg.output_format));
    return violated ? kExitViolation : kExitOk;
}

int cmd_verify_meanvalue(const CommonOpts& opts) {
    const Config cfg = load_config(opts);
    bool violated = false;
    Report r;
    r.columns = {"n", "trial", "lhs", "rhs", "margin"};
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    for (const std::size_t n : {std::size_t{10}, std::size_t{100},
                                std::size_t{2000}})
        for (int trial = 0; trial < 100; ++trial) {
            DirichletCoeffs c;
            c.values.assign(n + 1, 0.0);
            for (std::size_t i = 1; i <= n; ++i) c.values[i] = coeff(rng);
            const double T = 100.0 + trial;
            const double lhs = exact_mean_square(c, 0.6, T);
            const double rhs = mv_rhs(c, 0.6, T);
            const double margin = 1.0 - lhs / rhs;
            if (!(lhs <= rhs)) violated = true;
            r.add_row({fmt::format("{}", n), fmt::format("{}", trial),
                       format_real(lhs), format_real(rhs), format_real(margin)});
        }
    fmt::print("{}", emit(r, cfg.output_format));
    return violated ? kExitViolation : kExitOk;
}

int cmd_moments(const CommonOpts& opts) {
    const Config cfg = load_config(opts);
    const double T = 1000.0;
    const double m2 = empirical_moment(2, T, 0.05);
    const double m4 = empirical_moment(4, T, 0.05);
    const double b2 = second_moment_bound(T);
    const double b4 = fourth_moment_bound(T);
    const bool cs_ok = T * m4 >= 2.0 * m2 * m2;
    bool violated = !(m2 <= b2) || !(m4 <= b4) || !cs_ok;

    Report r;
    r.columns = {"check", "k", "T", "value", "bound", "ok"};
    r.add_row({"moment", "2", format_real(T), format_real(m2), format_real(b2),
               m2 <= b2 ? "true" : "false"});
    r.add_row({"moment", "4", format_real(T), format_real(m4), format_real(b4),
               m4 <= b4 ? "true" : "false"});
    r.add_row({"cauchy_schwarz", "", format_real(T), format_real(T * m4),
               format_real(2.0 * m2 * m2), cs_ok ? "true" : "false"});
    fmt::print("{}", emit(r, cfg.output_format));
    return violated ? kExitViolation : kExitOk;
}

int cmd_zeros_audit(const CommonOpts& opts) {
    const Config cfg = load_config(opts);
    if (cfg.dataset_path.empty())
        throw ConfigError("zeros-audit: --dataset (or dataset_path) required");
    const ZeroDataset ds = parse_zeros_file(cfg.dataset_path);
    if (ds.empty()) throw ParseError("zeros-audit: empty dataset");

    bool violated = false;
    Report r;
    r.columns = {"check", "value", "ok"};
    r.add_row({"count", fmt::format("{}", ds.size()), "true"});

    const std::size_t below_100 = zero_count(ds, 100.0);
    const bool c100_ok = ds.ordinates.back() < 100.0 || below_100 == 29;
    if (!c100_ok) violated = true;
    r.add_row({"zero_count_100", fmt::format("{}", below_100),
               c100_ok ? "true" : "false"});

    // N(T) vs the Riemann-von Mangoldt main term at every ordinate, just
    // before and just after each jump
    double max_dev = 0.0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const double g = ds.ordinates[i];
        max_dev = std::max(max_dev,
                           std::abs(static_cast<double>(i + 1) - rvm_main_term(g)));
        max_dev = std::max(max_dev,
                           std::abs(static_cast<double>(i) - rvm_main_term(g)));
    }
    const bool rvm_ok = max_dev <= 2.5;
    if (!rvm_ok) violated = true;
    r.add_row({"max_rvm_deviation", format_real(max_dev), rvm_ok ? "true" : "false"});

    const DensityParams params = DensityParams::make(0.6, std::log(3e12));
    bool audit_ok = true;
    for (const double sigma : {0.6, 0.65}) {
        const std::size_t n = empirical_nsigma(ds, sigma, ds.ordinates.back());
        const ExtReal bound = carlson_bound(
            DensityParams::make(sigma, params.log_T0), params.log_T0 + 1.0);
        if (!(ExtReal::from_double(static_cast<double>(n)) <= bound))
            audit_ok = false;
    }
    if (!audit_ok) violated = true;
    r.add_row({"nsigma_audit", "0", audit_ok ? "true" : "false"});

    fmt::print("{}", emit(r, cfg.output_format));
    return violated ? kExitViolation : kExitOk;
}

int cmd_eval(const CommonOpts& opts) {
    const Config cfg = load_config(opts);
    const DensityParams params = make_params(opts);
    const double logT =
        opts.log10T > 0.0 ? opts.log10T * kLn10 : params.log_T0;
    const ExtReal value =
        carlson_bound(params, logT, 0.0, opts.log_exponent == "section5");
    Report r;
    r.columns = {"sigma", "log10T", "log_exponent", "value"};
    r.add_row({format_real(params.sigma), format_real(logT / kLn10),
               opts.log_exponent, value.str()});
    fmt::print("{}", emit(r, cfg.output_format));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Explicit zero-density estimates for the Riemann zeta function"};
    app.require_subcommand(1);

    CommonOpts opts;

    auto* constants = app.add_subcommand("constants", "Constant pipeline breakdown");
    add_common(constants, opts);
    constants->add_option("--sigma", opts.sigma);
    constants->add_option("--log10T0", opts.log10T0);
    constants->add_flag("--override-sigma-range", opts.override_sigma_range);

    auto* table1 = app.add_subcommand("table1", "Reference-table deviation report");
    add_common(table1, opts);

    auto* compare = app.add_subcommand("compare", "Crossovers against comparator bounds");
    add_common(compare, opts);
    compare->add_option("--sigma", opts.sigma);
    compare->add_option("--log10T0", opts.log10T0);
    compare->add_option("--log-exponent", opts.log_exponent)
        ->check(CLI::IsMember({"theorem", "section5"}));

    auto* regions = app.add_subcommand("regions", "Winner map over the (sigma, T) grid");
    add_common(regions, opts);
    regions->add_option("--log10T0", opts.log10T0);
    regions->add_option("--log-exponent", opts.log_exponent)
        ->check(CLI::IsMember({"theorem", "section5"}));

    auto* vdiv = app.add_subcommand("verify-divisor", "Divisor prefix and tail bound sweep");
    add_common(vdiv, opts);
    vdiv->add_option("--limit", opts.limit);

    auto* vafe = app.add_subcommand("verify-afe", "AFE remainder bound on the test grid");
    add_common(vafe, opts);

    auto* vmv = app.add_subcommand("verify-meanvalue", "Mean value inequality, seeded vectors");
    add_common(vmv, opts);

    auto* moments = app.add_subcommand("moments", "Critical-line moment bounds vs quadrature");
    add_common(moments, opts);

    auto* zaudit = app.add_subcommand("zeros-audit", "Dataset audit against N(T) facts");
    add_common(zaudit, opts);
    zaudit->add_option("--dataset", opts.dataset);

    auto* eval = app.add_subcommand("eval", "Evaluate the density bound at one point");
    add_common(eval, opts);
    eval->add_option("--sigma", opts.sigma);
    eval->add_option("--log10T", opts.log10T);
    eval->add_option("--log10T0", opts.log10T0);
    eval->add_flag("--override-sigma-range", opts.override_sigma_range);
    eval->add_option("--log-exponent", opts.log_exponent)
        ->check(CLI::IsMember({"theorem", "section5"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (constants->parsed()) return cmd_constants(opts);
        if (table1->parsed()) return cmd_table1(opts);
        if (compare->parsed()) return cmd_compare(opts);
        if (regions->parsed()) return cmd_regions(opts);
        if (vdiv->parsed()) return cmd_verify_divisor(opts);
        if (vafe->parsed()) return cmd_verify_afe(opts);
        if (vmv->parsed()) return cmd_verify_meanvalue(opts);
        if (moments->parsed()) return cmd_moments(opts);
        if (zaudit->parsed()) return cmd_zeros_audit(opts);
        if (eval->parsed()) return cmd_eval(opts);
    } catch (const Error& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kExitError;
    }
    return kExitError;
}
