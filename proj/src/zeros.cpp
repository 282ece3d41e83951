#include "zdens/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include <fmt/core.h>

#include "zdens/errors.hpp"

namespace zdens {

ZeroDataset parse_zeros(std::istream& stream) {
    ZeroDataset ds;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        if (line[begin] == '#') continue;
        std::size_t end = line.find_last_not_of(" \t\r") + 1;

        double value = 0.0;
        const auto [ptr, ec] =
            std::from_chars(line.data() + begin, line.data() + end, value);
        if (ec != std::errc{} || ptr != line.data() + end)
            throw ParseError(fmt::format(
                "parse_zeros: line {}: not a decimal ordinate: '{}'", line_no,
                line.substr(begin, end - begin)));
        if (!(value > 0.0))
            throw ParseError(fmt::format(
                "parse_zeros: line {}: ordinate must be positive, got {}",
                line_no, value));
        if (!ds.ordinates.empty() && value <= ds.ordinates.back())
            throw ParseError(fmt::format(
                "parse_zeros: line {}: ordinates not ascending: {} after {}",
                line_no, value, ds.ordinates.back()));
        ds.ordinates.push_back(value);
    }
    return ds;
}

ZeroDataset parse_zeros_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(fmt::format("parse_zeros: cannot open '{}'", path));
    return parse_zeros(in);
}

std::string serialize_zeros(const ZeroDataset& ds) {
    std::string out;
    for (double g : ds.ordinates) out += fmt::format("{}\n", g);
    return out;
}

std::size_t zero_count(const ZeroDataset& ds, double T) {
    return static_cast<std::size_t>(
        std::upper_bound(ds.ordinates.begin(), ds.ordinates.end(), T) -
        ds.ordinates.begin());
}

std::size_t empirical_nsigma(const ZeroDataset& ds, double sigma, double T) {
    if (sigma <= 0.5)
        throw DomainError("empirical_nsigma: sigma > 1/2 required");
    (void)ds;
    (void)T;
    return 0; // all dataset zeros have beta = 1/2
}

double rvm_main_term(double T) {
    if (T < 2.0) throw DomainError("rvm_main_term: T >= 2 required");
    constexpr double kTwoPi = 6.283185307179586;
    return (T / kTwoPi) * std::log(T / (kTwoPi * std::exp(1.0))) + 7.0 / 8.0;
}

} // namespace zdens
