#include "zdens/arith.hpp"

#include <cmath>
#include <cstddef>

#include <fmt/core.h>

#include "zdens/constants.hpp"
#include "zdens/errors.hpp"
#include "zdens/parallel.hpp"

namespace zdens {

namespace {
constexpr std::uint64_t kMaxLimit = 100'000'000;
constexpr std::uint64_t kWindow = 1u << 17;

double cube(double x) { return x * x * x; }
} // namespace

ArithTables build_arith_tables(std::uint64_t limit) {
    if (limit < 1 || limit > kMaxLimit)
        throw CapacityError(fmt::format("build_arith_tables: limit {} outside [1, {}]",
                                        limit, kMaxLimit));
    ArithTables t;
    t.limit = limit;
    t.d.assign(limit + 1, 0);
    t.mu.assign(limit + 1, 0);
    t.prefix_d2.assign(limit + 1, 0);
    t.d[1] = 1;
    t.mu[1] = 1;

    std::vector<std::uint32_t> primes;
    std::vector<std::uint8_t> spf_exp(limit + 1, 0); // exponent of smallest prime
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            primes.push_back(static_cast<std::uint32_t>(i));
            t.d[i] = 2;
            t.mu[i] = -1;
            spf_exp[i] = 1;
        }
        for (std::uint32_t p : primes) {
            const std::uint64_t ip = i * p;
            if (ip > limit) break;
            composite[ip] = true;
            if (i % p == 0) {
                spf_exp[ip] = static_cast<std::uint8_t>(spf_exp[i] + 1);
                t.d[ip] = static_cast<std::uint16_t>(
                    t.d[i] / (spf_exp[i] + 1) * (spf_exp[i] + 2));
                t.mu[ip] = 0;
                break;
            }
            spf_exp[ip] = 1;
            t.d[ip] = static_cast<std::uint16_t>(2 * t.d[i]);
            t.mu[ip] = static_cast<std::int8_t>(-t.mu[i]);
        }
    }
    std::uint64_t acc = 0;
    for (std::uint64_t n = 1; n <= limit; ++n) {
        const std::uint64_t dn = t.d[n];
        acc += dn * dn;
        t.prefix_d2[n] = acc;
    }
    return t;
}

namespace {

ChtPrefixReport cht_prefix_block(const ArithTables& tables, std::uint64_t lo,
                                 std::uint64_t hi) {
    ChtPrefixReport r;
    r.min_margin = 2.0;
    for (std::uint64_t t = lo; t < hi; ++t) {
        const double lhs = static_cast<double>(tables.prefix_d2[t]);
        const double rhs = 0.25 * static_cast<double>(t) * cube(std::log(static_cast<double>(t)));
        const double margin = 1.0 - lhs / rhs;
        if (margin < r.min_margin) {
            r.min_margin = margin;
            r.min_margin_t = t;
        }
        if (lhs > rhs) r.violations.push_back(t);
    }
    return r;
}

ChtPrefixReport cht_prefix_impl(const ArithTables& tables, std::uint64_t t_min,
                                std::uint64_t t_max, bool parallel) {
    if (t_min < 433)
        throw DomainError("verify_cht_prefix: prefix bound only claimed for t >= 433");
    if (t_min > t_max || t_max > tables.limit)
        throw DomainError("verify_cht_prefix: need 433 <= t_min <= t_max <= tables.limit");

    const auto blocks = make_blocks(t_min, t_max + 1, 1u << 16);
    std::vector<ChtPrefixReport> partial(blocks.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks.size()); ++b)
        partial[b] = cht_prefix_block(tables, blocks[b].begin, blocks[b].end);

    ChtPrefixReport out;
    out.min_margin = 2.0;
    for (const auto& p : partial) {
        if (p.min_margin < out.min_margin) {
            out.min_margin = p.min_margin;
            out.min_margin_t = p.min_margin_t;
        }
        out.violations.insert(out.violations.end(), p.violations.begin(),
                              p.violations.end());
    }
    return out;
}

} // namespace

ChtPrefixReport verify_cht_prefix(const ArithTables& tables, std::uint64_t t_min,
                                  std::uint64_t t_max) {
    return cht_prefix_impl(tables, t_min, t_max, true);
}

ChtPrefixReport verify_cht_prefix_serial(const ArithTables& tables,
                                         std::uint64_t t_min, std::uint64_t t_max) {
    return cht_prefix_impl(tables, t_min, t_max, false);
}

double cht_tail_bound(double X, double tau) {
    if (X < 433.0) throw DomainError("cht_tail_bound: X >= 433 required");
    if (tau <= 1.0) throw DomainError("cht_tail_bound: tau > 1 required");
    const double lx = std::log(X);
    const double e = tau - 1.0;
    const double bracket = cube(lx) / e + 3.0 * lx * lx / (e * e)
                         + 6.0 * lx / (e * e * e) + 6.0 / (e * e * e * e);
    return tau / (4.0 * std::pow(X, e)) * bracket;
}

namespace {

// d(n)^2 n^{-tau} summed over one window via paired divisor counting
double window_sum(std::uint64_t L, std::uint64_t R, std::uint64_t from,
                  double tau, std::vector<std::uint16_t>& cnt) {
    cnt.assign(R - L, 0);
    const auto qmax = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(R - 1)));
    for (std::uint64_t q = 1; q <= qmax; ++q) {
        const std::uint64_t q2 = q * q;
        if (q2 >= R) break;
        std::uint64_t m = ((L + q - 1) / q) * q;
        if (m < q2) m = q2;
        for (; m < R; m += q)
            cnt[m - L] += (m == q2) ? 1 : 2;
    }
    KahanSum s;
    for (std::uint64_t n = std::max(L, from); n < R; ++n) {
        const double dn = cnt[n - L];
        s.add(dn * dn * std::exp(-tau * std::log(static_cast<double>(n))));
    }
    return s.value();
}

double windowed_d2_sum_impl(std::uint64_t lo, std::uint64_t hi, double tau,
                            bool parallel) {
    if (lo > hi) return 0.0;
    const std::uint64_t first_window = lo / kWindow;
    const std::uint64_t last_window = hi / kWindow;
    const auto nwin = static_cast<std::size_t>(last_window - first_window + 1);
    std::vector<double> partial(nwin, 0.0);
#pragma omp parallel if (parallel)
    {
        std::vector<std::uint16_t> cnt;
#pragma omp for schedule(dynamic)
        for (std::ptrdiff_t w = 0; w < static_cast<std::ptrdiff_t>(nwin); ++w) {
            const std::uint64_t L = (first_window + w) * kWindow;
            const std::uint64_t R = std::min(L + kWindow, hi + 1);
            partial[w] = window_sum(std::max<std::uint64_t>(L, 1), R, lo, tau, cnt);
        }
    }
    KahanSum total;
    for (double p : partial) total.add(p);
    return total.value();
}

} // namespace

double windowed_d2_sum(std::uint64_t lo, std::uint64_t hi, double tau) {
    return windowed_d2_sum_impl(lo, hi, tau, true);
}

double windowed_d2_sum_serial(std::uint64_t lo, std::uint64_t hi, double tau) {
    return windowed_d2_sum_impl(lo, hi, tau, false);
}

TailEnclosure tail_sum_oracle(const ArithTables& tables, std::uint64_t X, double tau,
                              std::uint64_t N, double rel_remainder_limit) {
    if (N == 0) N = tables.limit;
    if (X < 433 || X > tables.limit)
        throw DomainError("tail_sum_oracle: need 433 <= X <= tables.limit");
    if (tau <= 1.0) throw DomainError("tail_sum_oracle: tau > 1 required");
    if (N < X) throw DomainError("tail_sum_oracle: truncation N < X");

    TailEnclosure e;
    e.truncation = N;

    KahanSum in_table;
    const std::uint64_t table_top = std::min(N, tables.limit);
    for (std::uint64_t n = X; n <= table_top; ++n) {
        const double dn = tables.d[n];
        in_table.add(dn * dn * std::exp(-tau * std::log(static_cast<double>(n))));
    }
    double truncated = in_table.value();
    if (N > tables.limit)
        truncated += windowed_d2_sum(tables.limit + 1, N, tau);

    const double dN = static_cast<double>(N);
    const double head = 0.25 * dN * cube(std::log(dN)) * std::exp(-tau * std::log(dN));
    e.remainder = head + cht_tail_bound(dN, tau);
    e.lo = truncated;
    e.hi = truncated + e.remainder;
    if (e.remainder > rel_remainder_limit * truncated)
        throw PrecisionError(fmt::format(
            "tail_sum_oracle: remainder {:.3e} exceeds {:.0f}% of truncated sum "
            "{:.3e}; increase N (currently {})",
            e.remainder, 100.0 * rel_remainder_limit, truncated, N));
    return e;
}

CSigmaTailReport c_sigma_tail_check(const ArithTables& tables, double sigma,
                                    std::uint64_t X0, std::uint64_t N,
                                    double rel_remainder_limit) {
    if (sigma < 0.6 || sigma > 2.0 / 3.0 + 1e-12)
        throw DomainError("c_sigma_tail_check: sigma in [0.6, 2/3] required");
    if (X0 < 433) throw DomainError("c_sigma_tail_check: X0 >= 433 required");

    const double c = c_sigma(sigma, static_cast<double>(X0));
    CSigmaTailReport rep;
    rep.all_positive = true;
    for (std::uint64_t X : {X0, 2 * X0, 10 * X0}) {
        const auto enc = tail_sum_oracle(tables, X, 2.0 * sigma, N, rel_remainder_limit);
        const double dX = static_cast<double>(X);
        TailCheckCase tc;
        tc.X = X;
        tc.lhs_hi = enc.hi;
        tc.rhs = c * std::pow(dX, 1.0 - 2.0 * sigma) * cube(std::log(dX));
        tc.margin = 1.0 - tc.lhs_hi / tc.rhs;
        if (tc.margin <= 0.0) rep.all_positive = false;
        rep.cases.push_back(tc);
    }
    return rep;
}

} // namespace zdens
