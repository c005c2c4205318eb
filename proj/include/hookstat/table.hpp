#pragma once

#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "hookstat/partition.hpp"

namespace hookstat {

/// One output cell: either raw text (pass-through) or a typed value that is
/// formatted at emission time.  Tables parsed back from CSV hold raw text
/// only, so parse -> emit is byte-identical.
using Cell = std::variant<std::string, double, Int>;

struct Table {
    std::vector<std::string> comment_lines;  // emitted before the header, '#'-prefixed
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> cells) { rows.push_back(std::move(cells)); }
};

namespace detail {

/// 6 significant digits, '.' decimal, locale-free; the print precision of
/// the published tables.
inline std::string format_table_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 6);
    return std::string(buf, res.ptr);
}

inline std::string format_cell(const Cell& c) {
    if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
    if (std::holds_alternative<Int>(c)) return std::to_string(std::get<Int>(c));
    return format_table_double(std::get<double>(c));
}

}  // namespace detail

/// CSV with a header row; cells never contain commas by construction.
inline std::string emit_csv(const Table& t) {
    std::ostringstream out;
    for (const auto& c : t.comment_lines) out << "# " << c << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        out << (i ? "," : "") << t.columns[i];
    out << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << detail::format_cell(row[i]);
        out << "\n";
    }
    return out.str();
}

/// Inverse of emit_csv up to cell typing: all cells come back as raw text,
/// so emit_csv(parse_csv(x)) == x.
inline Table parse_csv(const std::string& text) {
    Table t;
    std::istringstream in(text);
    std::string line;
    bool header_done = false;
    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::string cur;
        for (char ch : s) {
            if (ch == ',') {
                out.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        out.push_back(cur);
        return out;
    };
    while (std::getline(in, line)) {
        if (!header_done && line.size() >= 2 && line[0] == '#' && line[1] == ' ') {
            t.comment_lines.push_back(line.substr(2));
            continue;
        }
        if (!header_done) {
            t.columns = split(line);
            header_done = true;
            continue;
        }
        std::vector<Cell> row;
        for (auto& cell : split(line)) row.emplace_back(std::move(cell));
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace hookstat
