#pragma once

#include "asmstat/exact/polynomial.hpp"
#include "asmstat/exact/rational.hpp"

#include <vector>

namespace asmstat::exact {

/// B_0 .. B_m with B_1 = -1/2, i.e. B_m = B_m(0).
///
/// Akiyama-Tanigawa transform; it natively produces B_1 = +1/2, which is
/// the only index where the two conventions differ.
inline std::vector<Rational> bernoulli_numbers(unsigned m) {
    std::vector<Rational> out(m + 1);
    std::vector<Rational> row(m + 1);
    for (unsigned i = 0; i <= m; ++i) {
        row[i] = make_rational(1, i + 1);
        for (unsigned j = i; j >= 1; --j) {
            row[j - 1] = Rational(j) * (row[j - 1] - row[j]);
        }
        out[i] = row[0];
    }
    if (m >= 1) {
        out[1] = -out[1];
    }
    return out;
}

inline Rational bernoulli_number(unsigned m) { return bernoulli_numbers(m).back(); }

/// B_p(x) = sum_j C(p, j) B_j x^(p-j).
inline Polynomial bernoulli_polynomial(unsigned p) {
    const auto numbers = bernoulli_numbers(p);
    std::vector<Rational> coeffs(p + 1);
    for (unsigned j = 0; j <= p; ++j) {
        coeffs[p - j] = Rational(binomial(p, j)) * numbers[j];
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace asmstat::exact
