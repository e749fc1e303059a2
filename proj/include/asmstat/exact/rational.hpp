#pragma once

// Arbitrary-precision integers and canonical rationals shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace asmstat::exact {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, always held in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    Rational r(num);
    r /= Rational(den);
    return r;
}

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& r) {
    std::string out = numerator(r).str();
    const BigInt den = denominator(r);
    if (den != 1) {
        out += '/';
        out += den.str();
    }
    return out;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

namespace detail {

inline BigInt parse_integer(std::string_view text, std::string_view whole) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) {
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    BigInt value = 0;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (c < '0' || c > '9') {
            throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
        }
        value = value * 10 + (c - '0');
    }
    return negative ? BigInt(-value) : value;
}

}  // namespace detail

inline BigInt parse_integer(std::string_view text) { return detail::parse_integer(text, text); }

/// Inverse of to_string(Rational); accepts non-reduced input.
inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(detail::parse_integer(text, text));
    }
    const BigInt num = detail::parse_integer(text.substr(0, slash), text);
    const BigInt den = detail::parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return make_rational(num, den);
}

inline BigInt factorial(unsigned m) {
    BigInt out = 1;
    for (unsigned i = 2; i <= m; ++i) {
        out *= i;
    }
    return out;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt out = 1;
    for (unsigned i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

inline BigInt ipow(const BigInt& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

inline Rational rpow(const Rational& base, unsigned exponent) {
    Rational out = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        out *= base;
    }
    return out;
}

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace asmstat::exact
