#pragma once

#include <string>
#include <vector>

namespace zdens {

/// Rectangular report: header + rows of pre-formatted cells.  Numeric cells
/// are formatted by the producers with shortest round-trip printing, so the
/// CSV and JSON emissions are byte-stable.
struct Report {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> cells);
};

std::string emit_csv(const Report& report);
std::string emit_json(const Report& report);
std::string emit(const Report& report, const std::string& format); // csv | json

/// Shortest round-trip decimal form of a double (fmt "{}").
std::string format_real(double x);

} // namespace zdens
