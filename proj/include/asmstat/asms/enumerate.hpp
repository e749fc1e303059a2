#pragma once

#include "asmstat/asms/asm.hpp"
#include "asmstat/asms/monotone_triangle.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace asmstat::asms {

inline constexpr std::size_t default_enumeration_cap = 8;

class EnumerationCapError : public std::runtime_error {
public:
    EnumerationCapError(std::size_t n, std::size_t cap)
        : std::runtime_error("n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap) +
                             " (override the cap to proceed)"),
          n_(n),
          cap_(cap) {}

    std::size_t n() const { return n_; }
    std::size_t cap() const { return cap_; }

private:
    std::size_t n_;
    std::size_t cap_;
};

struct EnumerationOptions {
    std::size_t cap = default_enumeration_cap;
    /// Restrict to triangles whose top entry equals this value (one shard).
    std::optional<int> top_value;
};

/// Walks every monotone triangle with bottom row 1..n in lexicographic order
/// of its rows (top row most significant), hence every n x n ASM once.
///
///     AsmEnumerator e(4);
///     while (e.next()) use(e.current());
class AsmEnumerator {
public:
    explicit AsmEnumerator(std::size_t n, EnumerationOptions options = {}) : n_(n), options_(options) {
        if (n == 0) {
            throw std::invalid_argument("enumeration requires n >= 1");
        }
        if (n > options.cap) {
            throw EnumerationCapError(n, options.cap);
        }
        if (options.top_value && (*options.top_value < 1 || *options.top_value > static_cast<int>(n))) {
            throw std::invalid_argument("top value outside 1..n");
        }
        triangle_.rows.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            triangle_.rows[i].resize(i + 1);
        }
    }

    std::size_t size() const { return n_; }

    /// Advances to the next triangle; false once exhausted.
    bool next() {
        if (done_) {
            return false;
        }
        if (!started_) {
            started_ = true;
            fill_from(0);
            refresh();
            return true;
        }
        // Bottom row is pinned to 1..n; vary rows n-2 .. 0, deepest first.
        for (std::size_t r = n_ - 1; r-- > 0;) {
            if (increment_row(r)) {
                fill_from(r + 1);
                refresh();
                return true;
            }
        }
        done_ = true;
        return false;
    }

    const MonotoneTriangle& triangle() const { return triangle_; }

    const Asm& current() const { return *current_; }

private:
    // Bounds for entry j of row r given row r-1.
    int lower(std::size_t r, std::size_t j) const {
        if (r == 0) {
            return options_.top_value.value_or(1);
        }
        return j == 0 ? 1 : triangle_.rows[r - 1][j - 1];
    }

    int upper(std::size_t r, std::size_t j) const {
        if (r == 0) {
            return options_.top_value.value_or(static_cast<int>(n_));
        }
        return j == r ? static_cast<int>(n_) : triangle_.rows[r - 1][j];
    }

    // Smallest completion of row r from position j on; false if none exists.
    bool complete_row(std::size_t r, std::size_t j) {
        auto& row = triangle_.rows[r];
        for (; j <= r; ++j) {
            int v = lower(r, j);
            if (j > 0 && row[j - 1] + 1 > v) {
                v = row[j - 1] + 1;
            }
            if (v > upper(r, j)) {
                return false;
            }
            row[j] = v;
        }
        return true;
    }

    bool increment_row(std::size_t r) {
        auto& row = triangle_.rows[r];
        for (std::size_t j = r + 1; j-- > 0;) {
            const int saved = row[j];
            if (row[j] + 1 <= upper(r, j)) {
                ++row[j];
                if (complete_row(r, j + 1)) {
                    return true;
                }
            }
            row[j] = saved;
        }
        return false;
    }

    void fill_from(std::size_t r) {
        for (; r < n_; ++r) {
            // Every valid row admits an interlacing successor.
            complete_row(r, 0);
        }
    }

    void refresh() {
        std::vector<std::int8_t> entries;
        detail::triangle_to_entries(triangle_.rows, entries);
        current_.emplace(unchecked, n_, std::move(entries));
    }

    std::size_t n_;
    EnumerationOptions options_;
    MonotoneTriangle triangle_;
    std::optional<Asm> current_;
    bool started_ = false;
    bool done_ = false;
};

template <class Visitor>
void for_each_asm(std::size_t n, Visitor&& visit, EnumerationOptions options = {}) {
    AsmEnumerator e(n, options);
    while (e.next()) {
        visit(e.current());
    }
}

inline std::vector<Asm> enumerate(std::size_t n, EnumerationOptions options = {}) {
    std::vector<Asm> out;
    for_each_asm(n, [&](const Asm& a) { out.push_back(a); }, options);
    return out;
}

}  // namespace asmstat::asms
