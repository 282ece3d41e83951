#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "zdens/bounds.hpp"

namespace zdens {

/// Runtime configuration shared by the CLI subcommands.  Parsed from plain
/// `key = value` text ('#' comments); command-line flags override file values.
struct Config {
    ComparatorConfig comparators;

    double sigma_min = 0.5;
    double sigma_max = 0.8;
    double sigma_step = 0.005;
    double log10T_min = 12.48;
    double log10T_max = 400.0;
    double log10T_step = 0.5;

    std::uint64_t sieve_limit = 1'000'000;
    std::string dataset_path;
    std::string output_format = "csv"; // csv | json

    void validate() const; // throws ConfigError on bad steps/limits/format
};

Config parse_config(const std::string& text);
Config parse_config_file(const std::string& path);

} // namespace zdens
