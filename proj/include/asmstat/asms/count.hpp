#pragma once

#include "asmstat/exact/rational.hpp"

#include <stdexcept>

namespace asmstat::asms {

/// A_n = prod_{k=0}^{n-1} (3k+1)! / (n+k)!, evaluated with exact integers.
inline exact::BigInt count_asm(unsigned n) {
    using exact::BigInt;
    if (n == 0) {
        throw std::invalid_argument("count_asm requires n >= 1");
    }
    BigInt num = 1;
    BigInt den = 1;
    for (unsigned k = 0; k < n; ++k) {
        num *= exact::factorial(3 * k + 1);
        den *= exact::factorial(n + k);
    }
    BigInt rem;
    BigInt quotient;
    boost::multiprecision::divide_qr(num, den, quotient, rem);
    if (rem != 0) {
        throw std::logic_error("ASM product formula produced a non-integer");
    }
    return quotient;
}

}  // namespace asmstat::asms
