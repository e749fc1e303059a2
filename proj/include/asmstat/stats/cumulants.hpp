#pragma once

#include "asmstat/stats/distribution.hpp"

#include <optional>
#include <vector>

namespace asmstat::stats {

struct CumulantSet {
    Rational kappa1;
    Rational kappa2;
    Rational kappa3;
    Rational kappa4;

    friend bool operator==(const CumulantSet&, const CumulantSet&) = default;
};

/// kappa2..kappa4 from central moments: mu2, mu3, mu4 - 3 mu2^2.
inline CumulantSet cumulants(const ObservableDistribution& d) {
    if (d.total() == 0) {
        throw std::invalid_argument("cumulants of an empty distribution");
    }
    const Rational total(d.total());
    Rational mean = 0;
    for (const auto& [value, mult] : d.frequencies()) {
        mean += Rational(value) * Rational(mult);
    }
    mean /= total;

    Rational mu2 = 0;
    Rational mu3 = 0;
    Rational mu4 = 0;
    for (const auto& [value, mult] : d.frequencies()) {
        const Rational dev = Rational(value) - mean;
        const Rational w(mult);
        const Rational dev2 = dev * dev;
        mu2 += w * dev2;
        mu3 += w * dev2 * dev;
        mu4 += w * dev2 * dev2;
    }
    mu2 /= total;
    mu3 /= total;
    mu4 /= total;
    return {mean, mu2, mu3, mu4 - Rational(3) * mu2 * mu2};
}

/// One row of the small-n cumulant table. Ratios are left empty when the
/// variance vanishes; the squared skewness keeps the value rational.
struct CumulantTrendRow {
    std::size_t n = 0;
    unsigned k = 0;
    CumulantSet kappa;
    std::optional<Rational> excess_kurtosis;  // kappa4 / kappa2^2
    std::optional<Rational> skewness_squared;  // kappa3^2 / kappa2^3
};

inline CumulantTrendRow cumulant_trend_row(const ObservableDistribution& d) {
    CumulantTrendRow row{d.n(), d.k(), cumulants(d), std::nullopt, std::nullopt};
    if (row.kappa.kappa2 != 0) {
        const Rational& v = row.kappa.kappa2;
        row.excess_kurtosis = row.kappa.kappa4 / (v * v);
        row.skewness_squared = row.kappa.kappa3 * row.kappa.kappa3 / (v * v * v);
    }
    return row;
}

inline std::vector<CumulantTrendRow> cumulant_trend(unsigned k, std::size_t n_from, std::size_t n_to,
                                                    const EnsembleOptions& options = {}) {
    std::vector<CumulantTrendRow> rows;
    for (std::size_t n = n_from; n <= n_to; ++n) {
        rows.push_back(cumulant_trend_row(distribution(n, k, options)));
    }
    return rows;
}

}  // namespace asmstat::stats
