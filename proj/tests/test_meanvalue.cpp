#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "zdens/arith.hpp"
#include "zdens/constants.hpp"
#include "zdens/errors.hpp"
#include "zdens/meanvalue.hpp"

using namespace zdens;

namespace {
constexpr double kPi = 3.14159265358979323846;

const ArithTables& tables() {
    static const ArithTables t = build_arith_tables(10'000);
    return t;
}
} // namespace

TEST_CASE("mollifier product coefficients, tiny case") {
    const DirichletCoeffs c = mollifier_product_coeffs(2, 3, tables());
    REQUIRE(c.top_index() == 6);
    // pairs (m,n) in {2,3} x {1,2}: c_2 = 1, c_3 = 1, c_4 = -1, c_6 = -1
    CHECK(c.values[1] == 0.0);
    CHECK(c.values[2] == 1.0);
    CHECK(c.values[3] == 1.0);
    CHECK(c.values[4] == -1.0);
    CHECK(c.values[5] == 0.0);
    CHECK(c.values[6] == -1.0);
}

TEST_CASE("product coefficients match the divisor-sum identity") {
    const std::uint64_t X = 10, T = 100;
    const DirichletCoeffs c = mollifier_product_coeffs(X, T, tables());
    for (std::uint64_t k = X + 1; k <= T; ++k) {
        int a_k = 0;
        for (std::uint64_t e = 1; e <= X; ++e)
            if (k % e == 0) a_k += tables().moebius(e);
        CHECK(c.values[k] == double(a_k));
    }
    for (std::uint64_t k = X + 1; k <= X * T; ++k)
        CHECK(std::abs(c.values[k]) <= double(tables().divisor_count(k)));
    CHECK_THROWS_AS(mollifier_product_coeffs(100'000, 1000, tables()),
                    CapacityError);
}

TEST_CASE("mv_rhs") {
    DirichletCoeffs one;
    one.values = {0.0, 1.0};
    const double m0 = mv_m0();
    CHECK(m0 * m0 == doctest::Approx(1.0 + (2.0 / 3.0) * std::sqrt(1.2))
                         .epsilon(1e-15));
    CHECK(m0 == doctest::Approx(1.315407).epsilon(1e-6));
    CHECK(mv_rhs(one, 0.0, 100.0) ==
          doctest::Approx(50.0 + 4.0 * kPi * m0).epsilon(1e-14));
    CHECK_THROWS_AS(mv_rhs(one, 0.0, -1.0), DomainError);
}

TEST_CASE("exact mean square, single and double coefficient") {
    DirichletCoeffs one;
    one.values = {0.0, 1.0};
    CHECK(exact_mean_square(one, 0.0, 80.0) == doctest::Approx(40.0).epsilon(1e-14));

    // two coefficients vs dense trapezoid quadrature of the same integrand
    DirichletCoeffs two;
    two.values = {0.0, 0.7, -0.4};
    const double sigma = 0.3, T = 50.0;
    const double u1 = 0.7, u2 = -0.4 * std::pow(2.0, -sigma);
    const int n_steps = 2'000'000;
    const double h = (T - T / 2) / n_steps;
    double quad = 0.0;
    for (int i = 0; i <= n_steps; ++i) {
        const double t = T / 2 + i * h;
        const double re = u1 + u2 * std::cos(t * std::log(2.0));
        const double im = u2 * std::sin(t * std::log(2.0));
        const double w = (i == 0 || i == n_steps) ? 0.5 : 1.0;
        quad += w * (re * re + im * im);
    }
    quad *= h;
    CHECK(exact_mean_square(two, sigma, T) == doctest::Approx(quad).epsilon(1e-8));
}

TEST_CASE("mean square parallel kernel equals serial reference") {
    std::mt19937_64 rng(5150);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    DirichletCoeffs c;
    c.values.assign(501, 0.0);
    for (int i = 1; i <= 500; ++i) c.values[i] = coeff(rng);
    const double a = exact_mean_square(c, 0.6, 321.0);
    const double b = exact_mean_square_serial(c, 0.6, 321.0);
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
}

TEST_CASE("MV inequality on seeded random vectors") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    for (const std::size_t n : {std::size_t{10}, std::size_t{100},
                                std::size_t{2000}})
        for (int trial = 0; trial < (n == 2000 ? 20 : 100); ++trial) {
            DirichletCoeffs c;
            c.values.assign(n + 1, 0.0);
            for (std::size_t i = 1; i <= n; ++i) c.values[i] = coeff(rng);
            const double T = 50.0 + 10.0 * trial;
            for (const double sigma : {0.0, 0.5, 0.6})
                CHECK(exact_mean_square(c, sigma, T) <= mv_rhs(c, sigma, T));
        }
}

TEST_CASE("lemma mean value bound at desk scale") {
    // sigma = 0.6, T = 100; the 2/3 x 200 case runs in the acceptance suite
    const DirichletCoeffs c = mollifier_product_coeffs(433, 100, tables());
    const double lhs = exact_mean_square(c, 0.6, 100.0);
    const double rhs = lemma_meanv_rhs(0.6, 100.0, 433.0, 433.0);
    CHECK(lhs <= rhs);
    CHECK_THROWS_AS(lemma_meanv_rhs(0.6, 100.0, 400.0, 400.0), DomainError);
    CHECK_THROWS_AS(lemma_meanv_rhs(0.7, 100.0, 433.0, 433.0), DomainError);
}

TEST_CASE("second moment bound") {
    CHECK(second_moment_bound(1000.0) == doctest::Approx(33462.1).epsilon(3e-6));
    const double r = second_moment_bound(2000.0) / second_moment_bound(1000.0);
    CHECK(r > 2.0);
    CHECK(r < 2.3);
    CHECK_THROWS_AS(second_moment_bound(10.0), DomainError);
}

TEST_CASE("fourth moment bound") {
    const double lt = std::log(1000.0);
    auto cube = [](double x) { return x * x * x; };
    const double expect = 24.0 * 1e6 * cube(std::log(8000.0)) +
                          1022.0 * 1e6 * std::pow(std::log(2000.0), 2.0) +
                          2.0 * 1000.0 * cube(std::log(4000.0)) +
                          1181.16 * 1000.0 * lt * lt + 19.86 * 1000.0 * lt +
                          364.25 * 1000.0 + 177.07 * lt + 355.83 +
                          181.83 / 1000.0;
    CHECK(fourth_moment_bound(1000.0) == doctest::Approx(expect).epsilon(1e-14));
    CHECK(fourth_moment_bound(1000.0) > 7.6e10);
    CHECK(fourth_moment_bound(1000.0) < 7.7e10);
    CHECK(fourth_moment_bound(14.1347) > 0.0);
    CHECK_THROWS_AS(fourth_moment_bound(10.0), DomainError);
}

TEST_CASE("empirical second moment at T = 500") {
    // asymptotic main term T ln(T/2pi) + (2 gamma - 1) T at the midpoint scale
    const double m2 = empirical_moment(2, 500.0, 0.05);
    CHECK(m2 > 2000.0);
    CHECK(m2 < 4500.0);
    CHECK(m2 <= second_moment_bound(500.0));
    CHECK(m2 == empirical_moment_serial(2, 500.0, 0.05));
    CHECK_THROWS_AS(empirical_moment(3, 500.0, 0.05), DomainError);
    CHECK_THROWS_AS(empirical_moment(2, 50.0, 0.05), DomainError);
    CHECK_THROWS_AS(empirical_moment(2, 500.0, 0.5), DomainError);
}
