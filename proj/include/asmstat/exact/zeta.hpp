#pragma once

#include "asmstat/exact/bernoulli.hpp"

#include <stdexcept>

namespace asmstat::exact {

/// zeta(2r) = factor * pi^(2r).
struct ZetaEvenValue {
    unsigned r = 1;
    Rational factor;
};

/// Inverts B_{2r} = (-1)^(r-1) 2 (2r)! zeta(2r) / (2 pi)^(2r).
inline ZetaEvenValue zeta_even_factor(unsigned r) {
    if (r == 0) {
        throw std::invalid_argument("zeta_even_factor requires r >= 1");
    }
    Rational q = bernoulli_number(2 * r) * Rational(ipow(BigInt(2), 2 * r - 1)) / Rational(factorial(2 * r));
    if (r % 2 == 0) {
        q = -q;
    }
    return {r, q};
}

}  // namespace asmstat::exact
