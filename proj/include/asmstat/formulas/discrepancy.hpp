#pragma once

// Cross-checks every closed form against independent routes and against the
// exact ensemble, recording where printed claims disagree.

#include "asmstat/asms/count.hpp"
#include "asmstat/formulas/asymptotic.hpp"
#include "asmstat/formulas/egf.hpp"
#include "asmstat/formulas/moments.hpp"
#include "asmstat/stats/cumulants.hpp"
#include "asmstat/stats/density.hpp"
#include "asmstat/stats/distribution.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace asmstat::formulas {

inline constexpr const char* flag_claim_mismatch = "claim_mismatch";
inline constexpr const char* flag_ensemble_differs = "ensemble_differs";
inline constexpr const char* flag_internal_mismatch = "internal_mismatch";

struct MomentRow {
    unsigned k = 0;
    unsigned n = 0;
    Rational uniform;  // Bernoulli / Faulhaber route
    Rational direct;   // literal double sum
    Rational egf;      // series-division route
    std::optional<Rational> printed_claim;
    std::optional<Rational> ensemble;
    std::vector<std::string> flags;

    bool internal_ok() const { return uniform == direct && direct == egf; }
};

struct CoefficientRow {
    unsigned k = 0;
    unsigned r = 0;
    int exponent = 0;
    Rational claimed;
    Rational exact;
    std::vector<std::string> flags;
};

struct ConsistencyCheck {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct DiscrepancyReport {
    unsigned k_max = 0;
    unsigned n_max = 0;
    std::size_t cap = 0;
    std::vector<MomentRow> moments;
    std::vector<CoefficientRow> coefficients;
    std::vector<ConsistencyCheck> checks;

    bool internally_consistent() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
    }

    const MomentRow* find_moment(unsigned k, unsigned n) const {
        for (const auto& row : moments) {
            if (row.k == k && row.n == n) {
                return &row;
            }
        }
        return nullptr;
    }

    const CoefficientRow* find_coefficient(unsigned k, unsigned r) const {
        for (const auto& row : coefficients) {
            if (row.k == k && row.r == r) {
                return &row;
            }
        }
        return nullptr;
    }
};

namespace detail {

class CheckList {
public:
    explicit CheckList(std::vector<ConsistencyCheck>& out) : out_(out) {}

    std::size_t open(std::string name) {
        out_.push_back({std::move(name), true, {}});
        return out_.size() - 1;
    }

    // Keeps the first failing case as the detail.
    void fail(std::size_t check, const std::string& what) {
        auto& c = out_[check];
        if (c.passed) {
            c.detail = what;
        }
        c.passed = false;
    }

private:
    std::vector<ConsistencyCheck>& out_;
};

inline std::string at(unsigned k, unsigned n) {
    return "k=" + std::to_string(k) + " n=" + std::to_string(n);
}

}  // namespace detail

/// Builds the full table for k = 0..k_max and n = 1..n_max. Ensemble columns
/// are filled for n within the enumeration cap and left empty above it.
inline DiscrepancyReport discrepancy_report(unsigned k_max, unsigned n_max,
                                            const stats::EnsembleOptions& options = {}) {
    DiscrepancyReport report;
    report.k_max = k_max;
    report.n_max = n_max;
    report.cap = options.enumeration.cap;
    detail::CheckList checks(report.checks);

    const std::vector<Polynomial> egf = egf_expansion(k_max);
    std::vector<Polynomial> poly;
    for (unsigned k = 0; k <= k_max; ++k) {
        poly.push_back(expected_moment_polynomial(k));
    }

    const auto egf_check = checks.open("egf_equals_uniform_polynomial");
    const auto parity_check = checks.open("uniform_polynomial_parity");
    const auto leading_check = checks.open("leading_coefficient");
    for (unsigned k = 0; k <= k_max; ++k) {
        if (egf[k] != poly[k]) {
            checks.fail(egf_check, "k=" + std::to_string(k));
        }
        const bool parity_ok = k % 2 == 1 ? poly[k].is_zero() : poly[k].has_parity(1);
        if (!parity_ok) {
            checks.fail(parity_check, "k=" + std::to_string(k));
        }
        if (k % 2 == 0 && (poly[k].degree() != static_cast<int>(k) + 1 ||
                           poly[k].leading_coefficient() != asymptotic_leading(k))) {
            checks.fail(leading_check, "k=" + std::to_string(k));
        }
    }

    std::vector<std::vector<stats::ObservableDistribution>> dists(n_max + 1);
    std::vector<std::optional<stats::DensityMatrix>> densities(n_max + 1);
    const unsigned ensemble_n = static_cast<unsigned>(std::min<std::size_t>(n_max, options.enumeration.cap));
    std::vector<unsigned> ks(k_max + 1);
    for (unsigned k = 0; k <= k_max; ++k) {
        ks[k] = k;
    }
    for (unsigned n = 1; n <= ensemble_n; ++n) {
        dists[n] = stats::distributions(n, ks, options);
        densities[n] = stats::mean_density(n, options);
    }

    const auto internal_check = checks.open("uniform_direct_egf_agree");
    for (unsigned k = 0; k <= k_max; ++k) {
        for (unsigned n = 1; n <= n_max; ++n) {
            MomentRow row;
            row.k = k;
            row.n = n;
            row.uniform = expected_moment_uniform(k, n);
            row.direct = expected_moment_direct(k, n);
            row.egf = egf[k](Rational(n));
            row.printed_claim = printed_closed_form_value(k, n);
            if (n <= ensemble_n) {
                row.ensemble = stats::ensemble_moment(dists[n][k], 1);
            }
            if (!row.internal_ok()) {
                row.flags.push_back(flag_internal_mismatch);
                checks.fail(internal_check, detail::at(k, n));
            }
            if (row.printed_claim && *row.printed_claim != row.direct) {
                row.flags.push_back(flag_claim_mismatch);
            }
            if (row.ensemble && *row.ensemble != row.direct) {
                row.flags.push_back(flag_ensemble_differs);
            }
            report.moments.push_back(std::move(row));
        }
    }

    for (unsigned k = 1; k <= k_max; ++k) {
        for (unsigned r = 1; 2 * r <= k + 1; ++r) {
            CoefficientRow row;
            row.k = k;
            row.r = r;
            row.exponent = static_cast<int>(k) + 1 - 2 * static_cast<int>(r);
            row.claimed = asymptotic_coefficient_paper(k, r);
            row.exact = poly[k].coefficient(static_cast<std::size_t>(row.exponent));
            if (row.claimed != row.exact) {
                row.flags.push_back(flag_claim_mismatch);
            }
            report.coefficients.push_back(std::move(row));
        }
    }

    const auto count_check = checks.open("enumeration_matches_product_formula");
    const auto bistochastic_check = checks.open("density_bistochastic");
    const auto symmetry_check = checks.open("density_symmetries");
    const auto linearity_check = checks.open("ensemble_mean_equals_density_sum");
    const auto odd_check = checks.open("odd_k_mean_and_kappa3_vanish");
    const auto symmetric_law_check = checks.open("odd_k_law_symmetric");
    const auto pointwise_check = checks.open("e0_equals_n_and_e1_vanishes_pointwise");
    for (unsigned n = 1; n <= ensemble_n; ++n) {
        const auto& rho = *densities[n];
        if (dists[n].front().total() != asms::count_asm(n)) {
            checks.fail(count_check, "n=" + std::to_string(n));
        }
        if (!rho.is_bistochastic()) {
            checks.fail(bistochastic_check, "n=" + std::to_string(n));
        }
        if (!rho.has_ensemble_symmetries()) {
            checks.fail(symmetry_check, "n=" + std::to_string(n));
        }
        for (unsigned k = 0; k <= k_max; ++k) {
            const auto& d = dists[n][k];
            if (stats::ensemble_moment(d, 1) != rho.expected_observable(k)) {
                checks.fail(linearity_check, detail::at(k, n));
            }
            if (k % 2 == 1) {
                const auto c = stats::cumulants(d);
                if (c.kappa1 != 0 || c.kappa3 != 0) {
                    checks.fail(odd_check, detail::at(k, n));
                }
                if (!d.is_symmetric()) {
                    checks.fail(symmetric_law_check, detail::at(k, n));
                }
            }
        }
        const auto point_mass = [](const stats::ObservableDistribution& d, const BigInt& v) {
            return d.frequencies().size() == 1 && d.frequency(v) == d.total();
        };
        if (!point_mass(dists[n][0], BigInt(n)) || (k_max >= 1 && !point_mass(dists[n][1], BigInt(0)))) {
            checks.fail(pointwise_check, "n=" + std::to_string(n));
        }
    }
    return report;
}

}  // namespace asmstat::formulas
