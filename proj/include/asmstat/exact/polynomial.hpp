#pragma once

#include "asmstat/exact/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace asmstat::exact {

/// Univariate polynomial over the rationals. coefficients()[d] multiplies x^d;
/// trailing zeros are always stripped, so equality is structural.
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
        normalize();
    }

    Polynomial(std::initializer_list<Rational> coefficients)
        : coeffs_(coefficients) {
        normalize();
    }

    static Polynomial constant(Rational c) { return Polynomial(std::vector<Rational>{std::move(c)}); }

    static Polynomial monomial(Rational c, std::size_t degree) {
        std::vector<Rational> coeffs(degree + 1);
        coeffs[degree] = std::move(c);
        return Polynomial(std::move(coeffs));
    }

    static Polynomial variable() { return monomial(Rational(1), 1); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    bool is_zero() const { return coeffs_.empty(); }

    bool is_constant() const { return coeffs_.size() <= 1; }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational coefficient(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Rational(0); }

    Rational leading_coefficient() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    /// p(x + shift), expanded.
    Polynomial shifted(const Rational& shift) const {
        std::vector<Rational> out(coeffs_.size());
        for (std::size_t d = 0; d < coeffs_.size(); ++d) {
            if (coeffs_[d] == 0) {
                continue;
            }
            Rational power = 1;
            for (std::size_t j = d + 1; j-- > 0;) {
                // coefficient of x^j in (x + shift)^d is C(d, j) shift^(d-j)
                out[j] += coeffs_[d] * Rational(binomial(static_cast<unsigned>(d), static_cast<unsigned>(j))) * power;
                power *= shift;
            }
        }
        return Polynomial(std::move(out));
    }

    /// p(x) / x; the constant term must vanish.
    Polynomial divided_by_variable() const {
        if (coeffs_.empty()) {
            return {};
        }
        if (coeffs_.front() != 0) {
            throw std::domain_error("polynomial is not divisible by its variable");
        }
        return Polynomial(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
    }

    /// Only the coefficients of even powers (or odd powers) are nonzero.
    bool has_parity(unsigned parity) const {
        for (std::size_t d = 0; d < coeffs_.size(); ++d) {
            if (d % 2 != parity % 2 && coeffs_[d] != 0) {
                return false;
            }
        }
        return true;
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(rhs.coeffs_.size());
        }
        for (std::size_t d = 0; d < rhs.coeffs_.size(); ++d) {
            coeffs_[d] += rhs.coeffs_[d];
        }
        normalize();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(rhs.coeffs_.size());
        }
        for (std::size_t d = 0; d < rhs.coeffs_.size(); ++d) {
            coeffs_[d] -= rhs.coeffs_[d];
        }
        normalize();
        return *this;
    }

    Polynomial& operator*=(const Rational& c) {
        for (auto& coeff : coeffs_) {
            coeff *= c;
        }
        normalize();
        return *this;
    }

    Polynomial& operator/=(const Rational& c) {
        if (c == 0) {
            throw std::domain_error("polynomial divided by zero");
        }
        for (auto& coeff : coeffs_) {
            coeff /= c;
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator-(Polynomial p) { return p *= Rational(-1); }
    friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
    friend Polynomial operator/(Polynomial p, const Rational& c) { return p /= c; }

    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
        if (lhs.is_zero() || rhs.is_zero()) {
            return {};
        }
        std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
        for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
            if (lhs.coeffs_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
                out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
            }
        }
        return Polynomial(std::move(out));
    }

    Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Human-readable form, highest degree first, e.g. "1/6*n^3 - 1/6*n".
    std::string to_string(const std::string& var = "n") const {
        if (coeffs_.empty()) {
            return "0";
        }
        std::string out;
        for (std::size_t d = coeffs_.size(); d-- > 0;) {
            const Rational& c = coeffs_[d];
            if (c == 0) {
                continue;
            }
            const bool negative = c < 0;
            if (out.empty()) {
                if (negative) {
                    out += '-';
                }
            } else {
                out += negative ? " - " : " + ";
            }
            const Rational mag = negative ? Rational(-c) : c;
            if (d == 0) {
                out += exact::to_string(mag);
                continue;
            }
            if (mag != 1) {
                out += exact::to_string(mag);
                out += '*';
            }
            out += var;
            if (d > 1) {
                out += '^';
                out += std::to_string(d);
            }
        }
        return out;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<Rational> coeffs_;
};

}  // namespace asmstat::exact
