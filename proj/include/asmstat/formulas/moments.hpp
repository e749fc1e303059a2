#pragma once

// Expectation of E_k under the uniform-density model rho(i,j) = 1/n.

#include "asmstat/exact/faulhaber.hpp"
#include "asmstat/exact/polynomial.hpp"
#include "asmstat/exact/rational.hpp"

#include <optional>
#include <stdexcept>

namespace asmstat::formulas {

using exact::BigInt;
using exact::Polynomial;
using exact::Rational;

/// (1/n) sum_r (-1)^r C(k,r) S_{k-r}(n) S_r(n), with the power sums taken
/// from Bernoulli polynomials.
inline Rational expected_moment_uniform(unsigned k, unsigned long n) {
    if (n == 0) {
        throw std::invalid_argument("n must be >= 1");
    }
    Rational acc = 0;
    for (unsigned r = 0; r <= k; ++r) {
        Rational term = Rational(exact::binomial(k, r)) * exact::faulhaber_sum(k - r, n) * exact::faulhaber_sum(r, n);
        if (r % 2 == 1) {
            term = -term;
        }
        acc += term;
    }
    return acc / Rational(BigInt(n));
}

/// Literal (1/n) sum_{i,j=1}^{n} (i-j)^k.
inline Rational expected_moment_direct(unsigned k, unsigned long n) {
    if (n == 0) {
        throw std::invalid_argument("n must be >= 1");
    }
    BigInt acc = 0;
    for (unsigned long i = 1; i <= n; ++i) {
        for (unsigned long j = 1; j <= n; ++j) {
            acc += exact::ipow(BigInt(static_cast<long long>(i) - static_cast<long long>(j)), k);
        }
    }
    return exact::make_rational(acc, BigInt(n));
}

/// The uniform-density expectation as a polynomial in n.
inline Polynomial expected_moment_polynomial(unsigned k) {
    Polynomial acc;
    for (unsigned r = 0; r <= k; ++r) {
        Polynomial term = exact::faulhaber_polynomial(k - r) * exact::faulhaber_polynomial(r);
        term *= Rational(exact::binomial(k, r));
        if (r % 2 == 1) {
            term = -term;
        }
        acc += term;
    }
    return acc.divided_by_variable();
}

/// The closed forms printed for E[E_2] and E[E_4]: (n^2-1)/3 and
/// (3n^4 - 10n^2 + 7)/15. Empty for other k.
inline std::optional<Polynomial> printed_closed_form(unsigned k) {
    if (k == 2) {
        return Polynomial{exact::make_rational(-1, 3), Rational(0), exact::make_rational(1, 3)};
    }
    if (k == 4) {
        return Polynomial{exact::make_rational(7, 15), Rational(0), exact::make_rational(-10, 15), Rational(0),
                          exact::make_rational(3, 15)};
    }
    return std::nullopt;
}

inline std::optional<Rational> printed_closed_form_value(unsigned k, unsigned long n) {
    if (auto p = printed_closed_form(k)) {
        return (*p)(Rational(BigInt(n)));
    }
    return std::nullopt;
}

}  // namespace asmstat::formulas
