#pragma once

/**
 * @file render.hpp
 * @brief Report rendering: JSON, CSV and Markdown from one row model.
 *
 * Exact values travel as canonical "p/q" strings in every format, never as
 * floating point. Monte Carlo statistics are the only float fields; in the
 * text formats they are printed with 17 significant digits, in JSON they
 * are native numbers.
 */

#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace cauchyconv {

enum class OutputFormat { json, csv, markdown };

inline OutputFormat parse_output_format(std::string_view name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "markdown") return OutputFormat::markdown;
    throw std::invalid_argument("unknown format \"" + std::string(name) +
                                "\" (expected json, csv or markdown)");
}

/// %.17g: enough digits to reproduce any double exactly.
inline std::string format_double(double x) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", x);
    return buffer;
}

/**
 * One command's output: a named list of uniform rows plus optional extra
 * top-level JSON fields (e.g. a sweep summary).
 */
struct ReportTable {
    std::string command;
    std::vector<std::string> columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    nlohmann::ordered_json extra = nlohmann::ordered_json::object();
};

namespace detail {

inline std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos)
        return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

/// Text form of one cell, shared by CSV and Markdown.
inline std::string cell_text(const nlohmann::ordered_json& value) {
    if (value.is_null()) return "";
    if (value.is_string()) return value.get<std::string>();
    if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
    if (value.is_number_float()) return format_double(value.get<double>());
    return value.dump();
}

}  // namespace detail

inline std::string render(const ReportTable& table, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: {
            nlohmann::ordered_json doc;
            doc["schema_version"] = "1";
            doc["command"] = table.command;
            for (const auto& [key, value] : table.extra.items())
                doc[key] = value;
            doc["rows"] = table.rows;
            return doc.dump(2) + "\n";
        }
        case OutputFormat::csv: {
            std::string out;
            for (std::size_t i = 0; i < table.columns.size(); ++i) {
                if (i) out += ',';
                out += detail::csv_escape(table.columns[i]);
            }
            out += '\n';
            for (const auto& row : table.rows) {
                for (std::size_t i = 0; i < table.columns.size(); ++i) {
                    if (i) out += ',';
                    out += detail::csv_escape(detail::cell_text(row.at(table.columns[i])));
                }
                out += '\n';
            }
            return out;
        }
        case OutputFormat::markdown: {
            const auto escape = [](const std::string& s) {
                std::string r;
                for (char c : s) {
                    if (c == '|') r += '\\';
                    r += c;
                }
                return r;
            };
            std::string out = "|";
            for (const auto& col : table.columns)
                out += ' ' + escape(col) + " |";
            out += "\n|";
            for (std::size_t i = 0; i < table.columns.size(); ++i)
                out += " --- |";
            out += '\n';
            for (const auto& row : table.rows) {
                out += '|';
                for (const auto& col : table.columns)
                    out += ' ' + escape(detail::cell_text(row.at(col))) + " |";
                out += '\n';
            }
            return out;
        }
    }
    throw std::logic_error("render: unreachable");
}

}  // namespace cauchyconv
