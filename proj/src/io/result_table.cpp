// SPDX-License-Identifier: Apache-2.0
#include "stdce/io/result_table.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "stdce/errors.hpp"

namespace stdce::io {

void ResultTable::add_row(std::vector<Cell> row)
{
    if (row.size() != columns.size())
        throw ParameterError("row of " + std::to_string(row.size()) + " cells for table '" + name +
                             "' with " + std::to_string(columns.size()) + " columns");
    rows.push_back(std::move(row));
}

std::size_t ResultTable::column_index(const std::string& col) const
{
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i].name == col)
            return i;
    throw ParameterError("table '" + name + "' has no column '" + col + "'");
}

double ResultTable::real(std::size_t row, const std::string& col) const
{
    const auto& c = rows.at(row).at(column_index(col));
    if (const auto* d = std::get_if<double>(&c))
        return *d;
    if (const auto* i = std::get_if<long long>(&c))
        return static_cast<double>(*i);
    throw ParameterError("column '" + col + "' is not numeric");
}

std::string format_real(double x)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string csv_cell(const Cell& c)
{
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>)
                return format_real(v);
            else if constexpr (std::is_same_v<T, long long>)
                return std::to_string(v);
            else if constexpr (std::is_same_v<T, bool>)
                return v ? "true" : "false";
            else
                return csv_quote(v);
        },
        c);
}

std::string json_cell(const Cell& c)
{
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>)
                return std::isfinite(v) ? format_real(v) : "null";
            else if constexpr (std::is_same_v<T, long long>)
                return std::to_string(v);
            else if constexpr (std::is_same_v<T, bool>)
                return v ? "true" : "false";
            else
                return nlohmann::json(v).dump();
        },
        c);
}

}  // namespace

std::string to_csv(const ResultTable& t)
{
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i)
            out += ',';
        out += csv_quote(t.columns[i].name + " [" + t.columns[i].unit + "]");
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out += ',';
            out += csv_cell(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const ResultTable& t)
{
    nlohmann::ordered_json cols = nlohmann::ordered_json::array();
    for (const auto& c : t.columns)
        cols.push_back({{"name", c.name}, {"unit", c.unit}});
    std::string out = "{\n";
    out += "  \"name\": " + nlohmann::json(t.name).dump() + ",\n";
    out += "  \"columns\": " + cols.dump() + ",\n";
    out += "  \"metadata\": " + t.metadata.dump() + ",\n";
    out += "  \"rows\": [";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        out += r ? ",\n    [" : "\n    [";
        for (std::size_t i = 0; i < t.rows[r].size(); ++i) {
            if (i)
                out += ',';
            out += json_cell(t.rows[r][i]);
        }
        out += ']';
    }
    out += t.rows.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw ParameterError("cannot write '" + path.string() + "'");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f)
        throw ParameterError("write to '" + path.string() + "' failed");
}

}  // namespace stdce::io
