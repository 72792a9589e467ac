// csv.hpp — deterministic CSV emission: fixed column order, 17 significant
// digits, '\n' line endings.

#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace bimode::csv {

inline std::string num(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

inline void write_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ',';
        out << cells[i];
    }
    out << '\n';
}

inline void write_numeric_row(std::ostream& out, const std::vector<double>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ',';
        out << num(cells[i]);
    }
    out << '\n';
}

}  // namespace bimode::csv
