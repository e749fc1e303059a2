#pragma once

#include "asmstat/exact/rational.hpp"
#include "asmstat/exact/stirling.hpp"
#include "asmstat/exact/zeta.hpp"
#include "asmstat/formulas/moments.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace asmstat::formulas {

/// coefficient * n^exponent; zeta_order is the r of the zeta(2r) it came from.
struct AsymptoticTerm {
    int exponent = 0;
    Rational coefficient;
    std::optional<unsigned> zeta_order;

    friend bool operator==(const AsymptoticTerm&, const AsymptoticTerm&) = default;
};

/// 2 / ((k+1)(k+2)), the coefficient of n^{k+1}. Only defined for even k.
inline Rational asymptotic_leading(unsigned k) {
    if (k % 2 == 1) {
        throw std::domain_error("E[E_k] vanishes for odd k; no leading term");
    }
    return exact::make_rational(2, BigInt(k + 1) * (k + 2));
}

/// P_{k,r} = 4 (-1)^k k! S(2r-1, k) zeta(2r) / (2 pi)^{2r}. With
/// zeta(2r) = q pi^{2r} the pi powers cancel, leaving
/// 4 (-1)^k k! S(2r-1, k) q / 4^r.
inline Rational asymptotic_coefficient_paper(unsigned k, unsigned r) {
    if (r == 0) {
        throw std::invalid_argument("r must be >= 1");
    }
    const Rational q = exact::zeta_even_factor(r).factor;
    Rational p = Rational(4) * Rational(exact::factorial(k)) * Rational(exact::stirling2(2 * r - 1, k)) * q /
                 Rational(exact::ipow(BigInt(4), r));
    if (k % 2 == 1) {
        p = -p;
    }
    return p;
}

/// Largest r accepted by asymptotic_coefficient_exact for even k.
inline unsigned asymptotic_max_order(unsigned k) { return (k + 2) / 2; }

/// Exact coefficient of n^{k+1-2r} in the uniform-density polynomial.
inline Rational asymptotic_coefficient_exact(unsigned k, unsigned r) {
    if (k % 2 == 1) {
        throw std::domain_error("exact expansion coefficients are indexed by even k");
    }
    if (r == 0 || r > asymptotic_max_order(k)) {
        throw std::invalid_argument("r out of range 1..ceil((k+1)/2)");
    }
    const int exponent = static_cast<int>(k) + 1 - 2 * static_cast<int>(r);
    if (exponent < 0) {
        return 0;
    }
    return expected_moment_polynomial(k).coefficient(static_cast<std::size_t>(exponent));
}

/// Full terminating expansion: the leading term followed by every nonzero
/// n^{k+1-2r} term (r >= 1).
inline std::vector<AsymptoticTerm> asymptotic_expansion_exact(unsigned k) {
    if (k % 2 == 1) {
        return {};
    }
    const Polynomial p = expected_moment_polynomial(k);
    std::vector<AsymptoticTerm> terms;
    terms.push_back({static_cast<int>(k) + 1, p.coefficient(k + 1), std::nullopt});
    for (unsigned r = 1; r <= asymptotic_max_order(k); ++r) {
        const int exponent = static_cast<int>(k) + 1 - 2 * static_cast<int>(r);
        if (exponent < 0) {
            break;
        }
        terms.push_back({exponent, p.coefficient(static_cast<std::size_t>(exponent)), r});
    }
    return terms;
}

/// The claimed expansion: leading term plus P_{k,r} n^{k+1-2r} for r = 1..r_max.
inline std::vector<AsymptoticTerm> asymptotic_expansion_claimed(unsigned k, unsigned r_max) {
    std::vector<AsymptoticTerm> terms;
    terms.push_back({static_cast<int>(k) + 1, exact::make_rational(2, BigInt(k + 1) * (k + 2)), std::nullopt});
    for (unsigned r = 1; r <= r_max; ++r) {
        terms.push_back({static_cast<int>(k) + 1 - 2 * static_cast<int>(r), asymptotic_coefficient_paper(k, r), r});
    }
    return terms;
}

}  // namespace asmstat::formulas
