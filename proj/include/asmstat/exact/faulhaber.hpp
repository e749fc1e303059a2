#pragma once

#include "asmstat/exact/bernoulli.hpp"

#include <stdexcept>

namespace asmstat::exact {

/// sum_{m=1}^{n} m^p via (B_{p+1}(n+1) - B_{p+1}(1)) / (p+1).
///
/// B_{p+1}(1) equals the Bernoulli number B_{p+1} except at p = 0, where the
/// B_1 = -1/2 convention would count the empty 0^0 term.
inline Rational faulhaber_sum(unsigned p, unsigned long n) {
    if (n == 0) {
        throw std::invalid_argument("faulhaber_sum requires n >= 1");
    }
    const Polynomial bp = bernoulli_polynomial(p + 1);
    const Rational value = bp(Rational(BigInt(n) + 1)) - bp(Rational(1));
    return value / Rational(p + 1);
}

/// S_p(n) with S_p(m) = 1^p + ... + m^p for every positive integer m.
inline Polynomial faulhaber_polynomial(unsigned p) {
    const Polynomial bp = bernoulli_polynomial(p + 1);
    Polynomial s = bp.shifted(Rational(1)) - Polynomial::constant(bp(Rational(1)));
    return s / Rational(p + 1);
}

}  // namespace asmstat::exact
