// SPDX-License-Identifier: Apache-2.0
//
// Tabular results with unit-tagged columns, written as CSV or JSON.
#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace stdce::io {

using Cell = std::variant<double, long long, bool, std::string>;

struct Column {
    std::string name;
    std::string unit;  // "dimensionless", "Gamma0", "c/Omega", "1/s", ...
};

struct ResultTable {
    std::string name;
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;
    // Parameter echo, tolerances and tool version. Must be deterministic.
    nlohmann::ordered_json metadata = nlohmann::ordered_json::object();

    void add_row(std::vector<Cell> row);
    std::size_t column_index(const std::string& col) const;
    double real(std::size_t row, const std::string& col) const;
};

/// 17 significant digits, "nan", "inf", "-inf" for non-finite values.
std::string format_real(double x);

/// Header "name [unit]", comma separated, LF line endings. Strings that hold
/// a comma, quote or newline are quoted.
std::string to_csv(const ResultTable& t);

/// {"name", "columns", "metadata", "rows"}; reals use format_real and
/// non-finite reals become null.
std::string to_json(const ResultTable& t);

/// Writes content to path in one call. Throws ParameterError when the file
/// cannot be created.
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace stdce::io
