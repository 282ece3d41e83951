#include "zdens/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <fmt/core.h>

#include "zdens/errors.hpp"

namespace zdens {

namespace {

std::string trim(const std::string& s) {
    const std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_real(const std::string& key, const std::string& value) {
    double out = 0.0;
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ConfigError(fmt::format("config: key '{}': bad number '{}'", key, value));
    return out;
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
    std::uint64_t out = 0;
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ConfigError(fmt::format("config: key '{}': bad integer '{}'", key, value));
    return out;
}

} // namespace

void Config::validate() const {
    if (!(sigma_step > 0.0) || !(log10T_step > 0.0))
        throw ConfigError("config: grid steps must be positive");
    if (sigma_min > sigma_max || log10T_min > log10T_max)
        throw ConfigError("config: grid minima exceed maxima");
    if (sieve_limit < 1 || sieve_limit > 100'000'000)
        throw ConfigError("config: sieve_limit outside [1, 1e8]");
    if (output_format != "csv" && output_format != "json")
        throw ConfigError(fmt::format("config: unknown output format '{}'", output_format));
}

Config parse_config(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError(fmt::format(
                "config: line {}: expected 'key = value', got '{}'", line_no,
                stripped));
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError(fmt::format("config: line {}: empty key or value", line_no));

        if (key == "kln_c1") cfg.comparators.kln_c1 = parse_real(key, value);
        else if (key == "kln_c2") cfg.comparators.kln_c2 = parse_real(key, value);
        else if (key == "simonic_k2") cfg.comparators.simonic_k2 = parse_real(key, value);
        else if (key == "simonic_calibrated")
            cfg.comparators.simonic_calibrated = parse_uint(key, value) != 0;
        else if (key == "bohr_landau_c")
            cfg.comparators.bohr_landau_c = parse_real(key, value);
        else if (key == "sigma_min") cfg.sigma_min = parse_real(key, value);
        else if (key == "sigma_max") cfg.sigma_max = parse_real(key, value);
        else if (key == "sigma_step") cfg.sigma_step = parse_real(key, value);
        else if (key == "log10T_min") cfg.log10T_min = parse_real(key, value);
        else if (key == "log10T_max") cfg.log10T_max = parse_real(key, value);
        else if (key == "log10T_step") cfg.log10T_step = parse_real(key, value);
        else if (key == "sieve_limit") cfg.sieve_limit = parse_uint(key, value);
        else if (key == "dataset_path") cfg.dataset_path = value;
        else if (key == "output_format") cfg.output_format = value;
        else
            throw ConfigError(fmt::format("config: line {}: unknown key '{}'",
                                          line_no, key));
    }
    cfg.validate();
    return cfg;
}

Config parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(fmt::format("config: cannot open '{}'", path));
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

} // namespace zdens
