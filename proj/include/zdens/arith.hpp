#pragma once

#include <cstdint>
#include <vector>

namespace zdens {

/// Sieved arithmetic functions on 1..limit.  Immutable after construction and
/// safe to share across threads.
struct ArithTables {
    std::uint64_t limit = 0;
    std::vector<std::uint16_t> d;        // divisor counts, d[n], 1-based
    std::vector<std::int8_t> mu;         // Moebius values
    std::vector<std::uint64_t> prefix_d2; // sum_{n<=t} d(n)^2, exact

    std::uint16_t divisor_count(std::uint64_t n) const { return d[n]; }
    int moebius(std::uint64_t n) const { return mu[n]; }
    std::uint64_t d2_prefix(std::uint64_t t) const { return prefix_d2[t]; }
};

/// Linear (smallest-prime-factor) sieve.  1 <= limit <= 1e8, else CapacityError.
ArithTables build_arith_tables(std::uint64_t limit);

struct ChtPrefixReport {
    std::vector<std::uint64_t> violations; // t with sum d^2 > t ln^3 t / 4
    double min_margin = 0.0;               // min over t of 1 - LHS/RHS
    std::uint64_t min_margin_t = 0;
};

/// Exhaustive check of sum_{n<=t} d(n)^2 <= t ln^3 t / 4 on [t_min, t_max].
/// Requires 433 <= t_min <= t_max <= tables.limit.
ChtPrefixReport verify_cht_prefix(const ArithTables& tables,
                                  std::uint64_t t_min, std::uint64_t t_max);
ChtPrefixReport verify_cht_prefix_serial(const ArithTables& tables,
                                         std::uint64_t t_min, std::uint64_t t_max);

/// Closed-form tail bound for sum_{n>=X} d(n)^2 / n^tau:
///   (tau/(4 X^{tau-1})) (ln^3 X/(tau-1) + 3 ln^2 X/(tau-1)^2
///                        + 6 ln X/(tau-1)^3 + 6/(tau-1)^4).
/// Requires X >= 433 and tau > 1.
double cht_tail_bound(double X, double tau);

/// Rigorous enclosure of the tail sum_{n>=X} d(n)^2 / n^tau:
/// exact (up to rounding) truncated sum over X <= n <= N plus a remainder
/// interval [0, R], R = (N ln^3 N / 4)/N^tau + tau*Integral_N^inf ln^3 t t^-tau/4 dt.
struct TailEnclosure {
    double lo = 0.0;        // truncated sum
    double hi = 0.0;        // truncated sum + remainder bound
    double remainder = 0.0;
    std::uint64_t truncation = 0; // N actually used
};

/// N = 0 means N = tables.limit.  For N > tables.limit the extra range is
/// summed with an exact windowed divisor count (no large tables needed).
/// Throws PrecisionError when remainder > rel_remainder_limit * truncated sum.
TailEnclosure tail_sum_oracle(const ArithTables& tables, std::uint64_t X,
                              double tau, std::uint64_t N = 0,
                              double rel_remainder_limit = 0.1);

/// Exact sum of d(n)^2 * n^{-tau} over [lo, hi], windowed divisor counting.
/// Parallel over fixed windows, merged in window order (bit-reproducible).
double windowed_d2_sum(std::uint64_t lo, std::uint64_t hi, double tau);
double windowed_d2_sum_serial(std::uint64_t lo, std::uint64_t hi, double tau);

struct TailCheckCase {
    std::uint64_t X = 0;
    double lhs_hi = 0.0;
    double rhs = 0.0;
    double margin = 0.0; // 1 - lhs_hi/rhs
};

struct CSigmaTailReport {
    std::vector<TailCheckCase> cases;
    bool all_positive = false;
};

/// Checks sum_{n>=X} d(n)^2 n^{-2 sigma} <= C(sigma,X0) X^{1-2 sigma} ln^3 X
/// at X in {X0, 2 X0, 10 X0}.  Requires sigma in [0.6, 2/3], X0 >= 433.
CSigmaTailReport c_sigma_tail_check(const ArithTables& tables, double sigma,
                                    std::uint64_t X0, std::uint64_t N = 0,
                                    double rel_remainder_limit = 10.0);

} // namespace zdens
