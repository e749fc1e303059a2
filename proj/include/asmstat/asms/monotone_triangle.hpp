#pragma once

#include "asmstat/asms/asm.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace asmstat::asms {

/// Row i (0-based) holds i+1 strictly increasing values from 1..n: the
/// columns whose prefix sum through row i of the ASM equals 1.
struct MonotoneTriangle {
    std::vector<std::vector<int>> rows;

    std::size_t size() const { return rows.size(); }

    friend bool operator==(const MonotoneTriangle&, const MonotoneTriangle&) = default;
};

/// Empty optional when t is a valid monotone triangle, else a diagnostic.
inline std::optional<std::string> check_monotone_triangle(const MonotoneTriangle& t) {
    const std::size_t n = t.size();
    if (n == 0) {
        return "triangle has no rows";
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = t.rows[i];
        const std::string name = "row " + std::to_string(i + 1);
        if (row.size() != i + 1) {
            return name + " has " + std::to_string(row.size()) + " entries, expected " + std::to_string(i + 1);
        }
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] < 1 || row[j] > static_cast<int>(n)) {
                return name + " entry " + std::to_string(row[j]) + " outside 1.." + std::to_string(n);
            }
            if (j > 0 && row[j] <= row[j - 1]) {
                return name + " is not strictly increasing";
            }
        }
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const auto& upper = t.rows[i];
        const auto& lower = t.rows[i + 1];
        for (std::size_t j = 0; j < upper.size(); ++j) {
            if (!(lower[j] <= upper[j] && upper[j] <= lower[j + 1])) {
                return "rows " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                       " do not interlace at position " + std::to_string(j + 1);
            }
        }
    }
    // A strictly increasing row of n values in 1..n is necessarily 1..n.
    return std::nullopt;
}

inline MonotoneTriangle to_monotone_triangle(const Asm& a) {
    const std::size_t n = a.size();
    MonotoneTriangle t;
    t.rows.resize(n);
    std::vector<int> prefix(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            prefix[j] += a(i, j);
            if (prefix[j] == 1) {
                t.rows[i].push_back(static_cast<int>(j) + 1);
            }
        }
    }
    return t;
}

namespace detail {

// Writes the ASM of a triangle already known to be valid into out (n*n).
inline void triangle_to_entries(const std::vector<std::vector<int>>& rows, std::vector<std::int8_t>& out) {
    const std::size_t n = rows.size();
    out.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (const int col : rows[i]) {
            out[i * n + static_cast<std::size_t>(col - 1)] += 1;
        }
        if (i > 0) {
            for (const int col : rows[i - 1]) {
                out[i * n + static_cast<std::size_t>(col - 1)] -= 1;
            }
        }
    }
}

}  // namespace detail

inline Asm from_monotone_triangle(const MonotoneTriangle& t) {
    if (auto msg = check_monotone_triangle(t)) {
        throw AsmError("invalid monotone triangle: " + *msg);
    }
    std::vector<std::int8_t> entries;
    detail::triangle_to_entries(t.rows, entries);
    return Asm(unchecked, t.size(), std::move(entries));
}

}  // namespace asmstat::asms
