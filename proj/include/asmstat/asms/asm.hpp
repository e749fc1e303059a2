#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace asmstat::asms {

class AsmError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct unchecked_t {
    explicit unchecked_t() = default;
};
/// Tag for constructing an Asm from entries already known to be valid.
inline constexpr unchecked_t unchecked{};

/// n x n alternating sign matrix. Indices are 0-based; the observables only
/// depend on index differences so the offset never matters.
class Asm {
public:
    Asm(unchecked_t, std::size_t n, std::vector<std::int8_t> entries)
        : n_(n), entries_(std::move(entries)) {}

    std::size_t size() const { return n_; }

    int operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    std::span<const std::int8_t> entries() const { return entries_; }

    friend bool operator==(const Asm&, const Asm&) = default;

private:
    std::size_t n_;
    std::vector<std::int8_t> entries_;
};

namespace detail {

// Checks one line (row or column) given by a strided view. Returns an empty
// string when the line is fine.
inline std::string check_line(std::span<const long long> flat, std::size_t n, std::size_t start,
                              std::size_t stride, const char* kind, std::size_t index) {
    long long sum = 0;
    for (std::size_t t = 0; t < n; ++t) {
        sum += flat[start + t * stride];
    }
    const std::string name = std::string(kind) + " " + std::to_string(index + 1);
    if (sum != 1) {
        return name + " sums to " + std::to_string(sum);
    }
    long long prefix = 0;
    for (std::size_t t = 0; t < n; ++t) {
        prefix += flat[start + t * stride];
        if (prefix != 0 && prefix != 1) {
            return name + ": partial sum " + std::to_string(prefix) + " after position " +
                   std::to_string(t + 1) + " (signs do not alternate)";
        }
    }
    return {};
}

}  // namespace detail

/// Validates a row-major n x n array. Lines are checked rows first, then
/// columns; the first violation is reported, 1-based.
inline Asm validate(std::size_t n, std::span<const long long> flat) {
    if (n == 0) {
        throw AsmError("matrix is empty");
    }
    if (flat.size() != n * n) {
        throw AsmError("expected " + std::to_string(n * n) + " entries, got " + std::to_string(flat.size()));
    }
    for (std::size_t idx = 0; idx < flat.size(); ++idx) {
        const long long v = flat[idx];
        if (v < -1 || v > 1) {
            throw AsmError("entry (" + std::to_string(idx / n + 1) + "," + std::to_string(idx % n + 1) + ") = " +
                           std::to_string(v) + " is not in {-1,0,1}");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (auto msg = detail::check_line(flat, n, i * n, 1, "row", i); !msg.empty()) {
            throw AsmError(msg);
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (auto msg = detail::check_line(flat, n, j, n, "column", j); !msg.empty()) {
            throw AsmError(msg);
        }
    }
    std::vector<std::int8_t> entries(flat.begin(), flat.end());
    return Asm(unchecked, n, std::move(entries));
}

inline Asm validate(const std::vector<std::vector<long long>>& rows) {
    const std::size_t n = rows.size();
    std::vector<long long> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw AsmError("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                           " entries, expected " + std::to_string(n));
        }
        flat.insert(flat.end(), rows[i].begin(), rows[i].end());
    }
    return validate(n, flat);
}

inline Asm transpose(const Asm& a) {
    const std::size_t n = a.size();
    std::vector<std::int8_t> out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[j * n + i] = static_cast<std::int8_t>(a(i, j));
        }
    }
    return Asm(unchecked, n, std::move(out));
}

inline Asm reverse_rows(const Asm& a) {
    const std::size_t n = a.size();
    std::vector<std::int8_t> out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[(n - 1 - i) * n + j] = static_cast<std::int8_t>(a(i, j));
        }
    }
    return Asm(unchecked, n, std::move(out));
}

/// Row-major string, one character per entry: '-' for -1, '0', '1'.
inline std::string encode(const Asm& a) {
    std::string out;
    out.reserve(a.entries().size());
    for (const auto v : a.entries()) {
        out += v < 0 ? '-' : static_cast<char>('0' + v);
    }
    return out;
}

}  // namespace asmstat::asms
