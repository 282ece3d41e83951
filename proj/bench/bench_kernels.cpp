// Parallel kernels against their serial reference implementations.  Run with
// OMP_NUM_THREADS set to see the scaling; both variants produce identical
// results (the tests assert this), so the interesting column is time.
#include <benchmark/benchmark.h>

#include <random>

#include "zdens/arith.hpp"
#include "zdens/meanvalue.hpp"

using namespace zdens;

namespace {

const ArithTables& tables() {
    static const ArithTables t = build_arith_tables(1'000'000);
    return t;
}

DirichletCoeffs random_coeffs(std::size_t n) {
    std::mt19937_64 rng(8891);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    DirichletCoeffs c;
    c.values.assign(n + 1, 0.0);
    for (std::size_t i = 1; i <= n; ++i) c.values[i] = coeff(rng);
    return c;
}

void BM_cht_prefix(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_cht_prefix(tables(), 433, 1'000'000));
}

void BM_cht_prefix_serial(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            verify_cht_prefix_serial(tables(), 433, 1'000'000));
}

void BM_windowed_d2(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(windowed_d2_sum(1'000'001, 3'000'000, 1.2));
}

void BM_windowed_d2_serial(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            windowed_d2_sum_serial(1'000'001, 3'000'000, 1.2));
}

void BM_mean_square(benchmark::State& state) {
    const DirichletCoeffs c = random_coeffs(2000);
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_mean_square(c, 0.6, 500.0));
}

void BM_mean_square_serial(benchmark::State& state) {
    const DirichletCoeffs c = random_coeffs(2000);
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_mean_square_serial(c, 0.6, 500.0));
}

void BM_moment(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(empirical_moment(2, 500.0, 0.05));
}

void BM_moment_serial(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(empirical_moment_serial(2, 500.0, 0.05));
}

BENCHMARK(BM_cht_prefix)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cht_prefix_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_windowed_d2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_windowed_d2_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mean_square)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mean_square_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_moment)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_moment_serial)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
