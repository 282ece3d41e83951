#include "zdens/report.hpp"

#include <fmt/core.h>
#include <nlohmann/json.hpp>

#include "zdens/errors.hpp"

namespace zdens {

void Report::add_row(std::vector<std::string> cells) {
    if (cells.size() != columns.size())
        throw DomainError(fmt::format("report: row width {} != header width {}",
                                      cells.size(), columns.size()));
    rows.push_back(std::move(cells));
}

namespace {

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string emit_csv(const Report& report) {
    std::string out;
    for (std::size_t i = 0; i < report.columns.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(report.columns[i]);
    }
    out += '\n';
    for (const auto& row : report.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += csv_escape(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string emit_json(const Report& report) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size(); ++i)
            obj[report.columns[i]] = row[i];
        rows.push_back(std::move(obj));
    }
    return rows.dump(2) + "\n";
}

std::string emit(const Report& report, const std::string& format) {
    if (format == "csv") return emit_csv(report);
    if (format == "json") return emit_json(report);
    throw ConfigError(fmt::format("emit: unknown format '{}'", format));
}

std::string format_real(double x) { return fmt::format("{}", x); }

} // namespace zdens
