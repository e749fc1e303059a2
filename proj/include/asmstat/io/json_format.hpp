#pragma once

// JSON mirrors of every table. Exact numbers are strings ("p/q" or integer
// digits) so nothing is rounded on the way through a JSON parser.

#include "asmstat/asms/asm.hpp"
#include "asmstat/formulas/asymptotic.hpp"
#include "asmstat/formulas/discrepancy.hpp"
#include "asmstat/io/csv.hpp"
#include "asmstat/stats/cumulants.hpp"
#include "asmstat/stats/density.hpp"
#include "asmstat/stats/distribution.hpp"

#include <json.hpp>

#include <optional>
#include <vector>

namespace asmstat::io {

using nlohmann::json;

inline json to_json(const Rational& r) { return exact::to_string(r); }

inline json to_json(const std::optional<Rational>& r) { return r ? to_json(*r) : json(nullptr); }

inline json to_json(const exact::Polynomial& p) {
    json coeffs = json::array();
    for (const auto& c : p.coefficients()) {
        coeffs.push_back(to_json(c));
    }
    return {{"coefficients", coeffs}, {"text", p.to_string("n")}};
}

inline json to_json(const asms::Asm& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.size(); ++j) {
            row.push_back(a(i, j));
        }
        rows.push_back(row);
    }
    return rows;
}

inline json to_json(const stats::ObservableDistribution& d) {
    json freq = json::array();
    for (const auto& [value, mult] : d.frequencies()) {
        freq.push_back({{"value", value.str()}, {"multiplicity", mult.str()}});
    }
    return {{"n", d.n()}, {"k", d.k()}, {"total", d.total().str()}, {"frequencies", freq}};
}

inline json to_json(const stats::DensityMatrix& rho) {
    json grid = json::array();
    for (std::size_t i = 0; i < rho.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < rho.size(); ++j) {
            row.push_back(to_json(rho(i, j)));
        }
        grid.push_back(row);
    }
    return {{"n", rho.size()},
            {"rho", grid},
            {"bistochastic", rho.is_bistochastic()},
            {"deviation", to_json(stats::density_deviation(rho))}};
}

inline json to_json(const stats::CumulantTrendRow& r) {
    return {{"n", r.n},
            {"k", r.k},
            {"kappa1", to_json(r.kappa.kappa1)},
            {"kappa2", to_json(r.kappa.kappa2)},
            {"kappa3", to_json(r.kappa.kappa3)},
            {"kappa4", to_json(r.kappa.kappa4)},
            {"kappa4_over_kappa2_sq", to_json(r.excess_kurtosis)},
            {"kappa3_sq_over_kappa2_cubed", to_json(r.skewness_squared)}};
}

inline json to_json(const formulas::CoefficientRow& r) {
    return {{"k", r.k},
            {"r", r.r},
            {"exponent", r.exponent},
            {"claimed", to_json(r.claimed)},
            {"exact", to_json(r.exact)},
            {"flags", r.flags}};
}

inline json to_json(const formulas::MomentRow& r) {
    return {{"k", r.k},
            {"n", r.n},
            {"thm1", to_json(r.uniform)},
            {"direct", to_json(r.direct)},
            {"egf", to_json(r.egf)},
            {"thm2_claim", to_json(r.printed_claim)},
            {"ensemble", to_json(r.ensemble)},
            {"flags", r.flags}};
}

inline json to_json(const formulas::DiscrepancyReport& report) {
    json moments = json::array();
    for (const auto& r : report.moments) {
        moments.push_back(to_json(r));
    }
    json coefficients = json::array();
    for (const auto& r : report.coefficients) {
        coefficients.push_back(to_json(r));
    }
    json checks = json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return {{"k_max", report.k_max},
            {"n_max", report.n_max},
            {"cap", report.cap},
            {"moments", moments},
            {"coefficients", coefficients},
            {"checks", checks},
            {"internally_consistent", report.internally_consistent()}};
}

}  // namespace asmstat::io
