#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "zdens/arith.hpp"
#include "zdens/errors.hpp"
#include "zdens/zeta.hpp"

using namespace zdens;

namespace {
constexpr double kPi = 3.14159265358979323846;

const ArithTables& tables() {
    static const ArithTables t = build_arith_tables(10'000);
    return t;
}
} // namespace

TEST_CASE("zeta at real points") {
    CHECK(zeta_reference({2.0, 0.0}, 1e-10).real() ==
          doctest::Approx(kPi * kPi / 6.0).epsilon(1e-10));
    CHECK(zeta_reference({2.0, 0.0}, 1e-10).imag() == doctest::Approx(0.0));
    CHECK(zeta_reference({4.0, 0.0}, 1e-10).real() ==
          doctest::Approx(std::pow(kPi, 4) / 90.0).epsilon(1e-10));
    // zeta(3) = Apery's constant
    CHECK(zeta_reference({3.0, 0.0}, 1e-12).real() ==
          doctest::Approx(1.2020569031595942854).epsilon(1e-12));
    CHECK(zeta_reference({0.5, 0.0}, 1e-10).real() ==
          doctest::Approx(-1.4603545088095868).epsilon(1e-9));
}

TEST_CASE("zeta vanishes at the first zeros") {
    for (double g : {14.134725, 21.022040, 25.010858}) {
        CHECK(std::abs(zeta_reference({0.5, g}, 1e-10)) < 1e-5);
    }
    // and is far from zero between them
    CHECK(std::abs(zeta_reference({0.5, 18.0}, 1e-10)) > 0.1);
}

TEST_CASE("zeta known complex value") {
    // zeta(1/2 + 14i), independently computed with 50-digit arithmetic
    const ComplexValue z = zeta_reference({0.5, 14.0}, 1e-12);
    CHECK(z.real() == doctest::Approx(0.022241142609993589).epsilon(1e-9));
    CHECK(z.imag() == doctest::Approx(-0.10325812326645005).epsilon(1e-9));
}

TEST_CASE("zeta domain and pole handling") {
    CHECK_THROWS_AS(zeta_reference({1.0, 0.0}, 1e-10), DomainError);
    CHECK_THROWS_AS(zeta_reference({0.3, 10.0}, 1e-10), DomainError);
    CHECK_THROWS_AS(zeta_reference({0.5, -1.0}, 1e-10), DomainError);
    CHECK_THROWS_AS(zeta_reference({0.5, 2e5}, 1e-10), DomainError);
    CHECK_THROWS_AS(zeta_reference({0.5, 100.0}, 1e-13), DomainError);
}

TEST_CASE("afe main sum and remainder bound") {
    const ComplexPoint p{0.6, 50.0};
    const double diff = std::abs(zeta_reference(p, 1e-10) - afe_main_sum(p));
    CHECK(diff <= 1.755 * std::pow(50.0, -0.6));
    CHECK(afe_remainder_bound(0.6, 50.0) ==
          doctest::Approx(0.16786).epsilon(1e-4));
    CHECK(afe_remainder_bound(0.5, 14.1347) ==
          doctest::Approx(1.755 / std::sqrt(14.1347)).epsilon(1e-12));
    CHECK(afe_remainder_bound(1.0, 1755.0) ==
          doctest::Approx(0.001).epsilon(1e-12));

    const ComplexPoint q{1.0, 20.0};
    CHECK(std::abs(zeta_reference(q, 1e-10) - afe_main_sum(q)) <= 1.755 / 20.0);

    CHECK_THROWS_AS(afe_main_sum({0.6, 10.0}), DomainError);
    CHECK_THROWS_AS(afe_remainder_bound(0.6, 10.0), DomainError);
    CHECK_THROWS_AS(afe_main_sum({0.4, 50.0}), DomainError);
}

TEST_CASE("afe remainder bound on the full grid") {
    for (double sigma : {0.5, 0.6, 2.0 / 3.0, 1.0})
        for (double t : {20.0, 100.0, 1000.0, 2000.0}) {
            const ComplexPoint p{sigma, t};
            const double diff =
                std::abs(zeta_reference(p, 1e-10) - afe_main_sum(p));
            CHECK(diff <= afe_remainder_bound(sigma, t));
        }
}

TEST_CASE("mollifier") {
    CHECK(mollifier({0.7, 33.0}, 1, tables()) == ComplexValue{1.0, 0.0});
    CHECK(std::abs(mollifier({0.0, 0.0}, 2, tables())) < 1e-15);

    // brute force in a different summation order
    const ComplexPoint p{2.0, 0.0};
    std::complex<double> brute = 0.0;
    for (int n = 100; n >= 1; --n)
        brute += double(tables().moebius(n)) * std::pow(double(n), -2.0);
    CHECK(std::abs(mollifier(p, 100, tables()) - brute) < 1e-14);

    CHECK_THROWS_AS(mollifier({0.5, 10.0}, 100'000, tables()), CapacityError);
}

TEST_CASE("mollified f and h") {
    const ComplexValue f1 = mollified_f({2.0, 0.0}, 1, tables(), 1e-10);
    CHECK(f1.real() == doctest::Approx(kPi * kPi / 6.0 - 1.0).epsilon(1e-9));

    // at a zeta zero f = -1 and h = 0 regardless of X
    for (std::uint64_t X : {std::uint64_t{1}, std::uint64_t{50},
                            std::uint64_t{500}}) {
        const ComplexValue f = mollified_f({0.5, 14.134725}, X, tables(), 1e-10);
        CHECK(std::abs(f - ComplexValue{-1.0, 0.0}) < 1e-3);
        CHECK(std::abs(mollified_h({0.5, 14.134725}, X, tables(), 1e-10)) < 3e-3);
    }

    const ComplexValue h1 = mollified_h({2.0, 0.0}, 1, tables(), 1e-10);
    CHECK(h1.real() == doctest::Approx(0.584060).epsilon(1e-5));
}

TEST_CASE("h identity and log-bound over sampled strip points") {
    std::mt19937_64 rng(31337);
    std::uniform_real_distribution<double> sig(0.55, 0.7);
    std::uniform_real_distribution<double> height(20.0, 2000.0);
    for (int i = 0; i < 1000; ++i) {
        const ComplexPoint p{sig(rng), height(rng)};
        const ComplexValue zm =
            zeta_reference(p, 1e-10) * mollifier(p, 50, tables());
        const ComplexValue f = zm - 1.0;
        const ComplexValue h = mollified_h(p, 50, tables(), 1e-10);
        // h = 1 - f^2 = zeta M (2 - zeta M), both forms
        CHECK(std::abs(h - zm * (2.0 - zm)) < 1e-10);
        CHECK(std::abs(h) <= 1.0 + std::norm(f) + 1e-12);
        if (!(std::abs(h) < 1e-300)) {
            CHECK(std::log(std::abs(h)) <= std::norm(f) + 1e-12);
        }
    }
}
