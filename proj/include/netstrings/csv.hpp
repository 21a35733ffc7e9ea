#pragma once

#include <cmath>
#include <cstdio>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "netstrings/errors.hpp"

namespace netstrings {

// CSV dialect: comma separators, '.' decimal point, header row, no quoting
// (fields never contain commas), floats at 12 significant digits.
inline std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.12g", v);
    return std::string(buffer);
}

inline std::string csv_line(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += fields[i];
    }
    out += '\n';
    return out;
}

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int column(const std::string& name) const {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return static_cast<int>(i);
        throw parse_error("CSV is missing column '" + name + "'");
    }

    double number_at(std::size_t row, int col) const {
        const std::string& cell = rows[row][static_cast<std::size_t>(col)];
        try {
            std::size_t used = 0;
            const double v = std::stod(cell, &used);
            if (used != cell.size()) throw std::invalid_argument(cell);
            return v;
        } catch (const std::exception&) {
            throw parse_error("row " + std::to_string(row + 2) + ": '" + cell +
                              "' is not a number");
        }
    }
};

inline CsvTable parse_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            fields.push_back(line.substr(start, comma == std::string::npos ? std::string::npos
                                                                           : comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (first) {
            table.header = std::move(fields);
            first = false;
        } else {
            if (fields.size() != table.header.size())
                throw parse_error("row " + std::to_string(table.rows.size() + 2) +
                                  ": field count differs from header");
            table.rows.push_back(std::move(fields));
        }
    }
    if (first) throw parse_error("CSV input is empty");
    return table;
}

} // namespace netstrings
