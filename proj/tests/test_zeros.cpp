#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "zdens/bounds.hpp"
#include "zdens/errors.hpp"
#include "zdens/extreal.hpp"
#include "zdens/zeros.hpp"

using namespace zdens;

namespace {
ZeroDataset first10() {
    std::istringstream in(
        "# First 10 ordinates\n"
        "14.134725\n21.022040\n25.010858\n30.424876\n32.935062\n"
        "37.586178\n40.918719\n43.327073\n48.005151\n49.773832\n");
    return parse_zeros(in);
}
} // namespace

TEST_CASE("parse basics") {
    std::istringstream two("14.134725\n21.022040\n");
    CHECK(parse_zeros(two).size() == 2);

    std::istringstream commented("# header\n\n14.134725\n");
    const ZeroDataset one = parse_zeros(commented);
    REQUIRE(one.size() == 1);
    CHECK(one.ordinates[0] == 14.134725);
}

TEST_CASE("parse errors carry context") {
    std::istringstream bad("14.1\npotato\n");
    try {
        parse_zeros(bad);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("line 2") != std::string::npos);
        CHECK(msg.find("potato") != std::string::npos);
    }

    std::istringstream unordered("5\n3\n");
    try {
        parse_zeros(unordered);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("3") != std::string::npos);
        CHECK(msg.find("5") != std::string::npos);
    }

    std::istringstream negative("-2.0\n");
    CHECK_THROWS_AS(parse_zeros(negative), ParseError);
    CHECK_THROWS_AS(parse_zeros_file("/nonexistent/zeros.txt"), ParseError);
}

TEST_CASE("serialize round-trips exactly") {
    const ZeroDataset ds = first10();
    std::istringstream again(serialize_zeros(ds));
    const ZeroDataset back = parse_zeros(again);
    CHECK(back.ordinates == ds.ordinates);
}

TEST_CASE("zero_count") {
    const ZeroDataset ds = first10();
    CHECK(zero_count(ds, 14.0) == 0);
    CHECK(zero_count(ds, 50.0) == 10);
    CHECK(zero_count(ds, 30.0) == 3);
    // boundary is inclusive
    CHECK(zero_count(ds, 14.134725) == 1);
    CHECK(zero_count(ds, 14.134724) == 0);
    // nondecreasing in T
    std::size_t prev = 0;
    for (double T = 10.0; T <= 55.0; T += 0.5) {
        const std::size_t n = zero_count(ds, T);
        CHECK(n >= prev);
        prev = n;
    }
}

TEST_CASE("empirical_nsigma") {
    const ZeroDataset ds = first10();
    CHECK(empirical_nsigma(ds, 0.51, 1000.0) == 0);
    CHECK_THROWS_AS(empirical_nsigma(ds, 0.5, 1000.0), DomainError);

    // 0 <= bound, i.e. the audit inequality is well posed
    const DensityParams p = DensityParams::make(0.6, std::log(3e12));
    const ExtReal bound = carlson_bound(p, std::log(3e12) + 1.0);
    CHECK(ExtReal::from_double(0.0) <= bound);
}

TEST_CASE("rvm main term") {
    const double expect100 =
        (100.0 / (2.0 * 3.14159265358979323846)) *
            std::log(100.0 / (2.0 * 3.14159265358979323846 * std::exp(1.0))) +
        0.875;
    CHECK(rvm_main_term(100.0) == doctest::Approx(expect100).epsilon(1e-14));
    CHECK(rvm_main_term(100.0) == doctest::Approx(29.002).epsilon(1e-4));
    CHECK(std::abs(rvm_main_term(2.0)) <= 1.0);
    CHECK_THROWS_AS(rvm_main_term(1.0), DomainError);

    // dataset vs main term on the 10-zero fixture
    const ZeroDataset ds = first10();
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const double g = ds.ordinates[i];
        CHECK(std::abs(double(i + 1) - rvm_main_term(g)) <= 2.5);
    }
}
