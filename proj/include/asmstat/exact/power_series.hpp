#pragma once

#include "asmstat/exact/polynomial.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace asmstat::exact {

class SeriesError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Truncated power series in t whose coefficients are polynomials in a
/// second variable: sum_{m=0}^{order} c_m(n) t^m + O(t^{order+1}).
class PowerSeries {
public:
    explicit PowerSeries(std::size_t order = 0) : coeffs_(order + 1) {}

    explicit PowerSeries(std::vector<Polynomial> coefficients) : coeffs_(std::move(coefficients)) {
        if (coeffs_.empty()) {
            throw SeriesError("power series needs at least one coefficient");
        }
    }

    std::size_t order() const { return coeffs_.size() - 1; }

    const Polynomial& operator[](std::size_t m) const { return coeffs_.at(m); }
    Polynomial& operator[](std::size_t m) { return coeffs_.at(m); }

    const std::vector<Polynomial>& coefficients() const { return coeffs_; }

    /// Lowest power of t with a nonzero coefficient, if any within the order.
    std::optional<std::size_t> valuation() const {
        for (std::size_t m = 0; m < coeffs_.size(); ++m) {
            if (!coeffs_[m].is_zero()) {
                return m;
            }
        }
        return std::nullopt;
    }

    PowerSeries truncated(std::size_t order) const {
        if (order > this->order()) {
            throw SeriesError("cannot extend a truncated series");
        }
        return PowerSeries(std::vector<Polynomial>(coeffs_.begin(), coeffs_.begin() + order + 1));
    }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<Polynomial> coeffs_;
};

inline PowerSeries series_add(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(std::min(a.order(), b.order()));
    for (std::size_t m = 0; m <= out.order(); ++m) {
        out[m] = a[m] + b[m];
    }
    return out;
}

inline PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(std::min(a.order(), b.order()));
    for (std::size_t m = 0; m <= out.order(); ++m) {
        Polynomial acc;
        for (std::size_t j = 0; j <= m; ++j) {
            if (a[j].is_zero() || b[m - j].is_zero()) {
                continue;
            }
            acc += a[j] * b[m - j];
        }
        out[m] = std::move(acc);
    }
    return out;
}

/// Quotient num / den. The lowest power of t in den is cancelled against
/// num first, which costs that many orders of precision in the result.
/// After cancellation den must start with a nonzero constant.
inline PowerSeries series_div(const PowerSeries& num, const PowerSeries& den) {
    const auto den_val = den.valuation();
    if (!den_val) {
        throw SeriesError("division by a series that vanishes to truncation order");
    }
    const std::size_t shift = *den_val;
    const std::size_t common = std::min(num.order(), den.order());
    if (common < shift) {
        throw SeriesError("truncation order too low to cancel the divisor's power of t");
    }
    const auto num_val = num.valuation();
    if (num_val && *num_val < shift) {
        throw SeriesError("numerator's lowest power of t is below the divisor's");
    }
    const Polynomial& lead = den[shift];
    if (!lead.is_constant()) {
        throw SeriesError("divisor's leading coefficient is not a constant");
    }
    const Rational lead_value = lead.coefficient(0);

    PowerSeries out(common - shift);
    for (std::size_t m = 0; m <= out.order(); ++m) {
        Polynomial acc = num[m + shift];
        for (std::size_t j = 1; j <= m; ++j) {
            if (den[j + shift].is_zero() || out[m - j].is_zero()) {
                continue;
            }
            acc -= den[j + shift] * out[m - j];
        }
        out[m] = acc / lead_value;
    }
    return out;
}

}  // namespace asmstat::exact
