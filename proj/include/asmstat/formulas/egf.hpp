#pragma once

#include "asmstat/exact/power_series.hpp"
#include "asmstat/exact/rational.hpp"

#include <vector>

namespace asmstat::formulas {

using exact::Polynomial;
using exact::PowerSeries;
using exact::Rational;

/// sinh^2(c t / 2) = sum_{m>=1} c^{2m} t^{2m} / (2 (2m)!), where c is the
/// polynomial variable n (scaled = true) or the constant 1.
inline PowerSeries sinh_squared_half(std::size_t order, bool scaled) {
    PowerSeries s(order);
    for (std::size_t m = 1; 2 * m <= order; ++m) {
        const Rational c = exact::make_rational(1, 2 * exact::factorial(static_cast<unsigned>(2 * m)));
        s[2 * m] = scaled ? Polynomial::monomial(c, 2 * m) : Polynomial::constant(c);
    }
    return s;
}

/// Coefficients c_k(n) with (1/n) sinh^2(nt/2) / sinh^2(t/2) =
/// sum_k c_k(n) t^k / k!, for k = 0..max_k.
inline std::vector<Polynomial> egf_expansion(unsigned max_k) {
    // The divisor starts at t^2, so two extra orders are consumed.
    const std::size_t order = max_k + 2;
    const PowerSeries ratio = exact::series_div(sinh_squared_half(order, true), sinh_squared_half(order, false));
    std::vector<Polynomial> out;
    out.reserve(max_k + 1);
    for (unsigned k = 0; k <= max_k; ++k) {
        Polynomial c = ratio[k] * Rational(exact::factorial(k));
        out.push_back(c.divided_by_variable());
    }
    return out;
}

}  // namespace asmstat::formulas
