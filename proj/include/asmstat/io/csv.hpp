#pragma once

// CSV writers and their readers. No field ever contains a comma or a quote
// (numerals, "p/q", identifiers), so no quoting is used.

#include "asmstat/exact/polynomial.hpp"
#include "asmstat/formulas/discrepancy.hpp"
#include "asmstat/stats/cumulants.hpp"
#include "asmstat/stats/density.hpp"
#include "asmstat/stats/distribution.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace asmstat::io {

using exact::BigInt;
using exact::Rational;

class CsvError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::vector<std::string> split(const std::string& line, char sep = ',') {
    std::vector<std::string> out;
    std::string field;
    for (const char c : line) {
        if (c == sep) {
            out.push_back(std::move(field));
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    out.push_back(std::move(field));
    return out;
}

inline std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += parts[i];
    }
    return out;
}

inline std::string optional_field(const std::optional<Rational>& v) { return v ? exact::to_string(*v) : ""; }

inline std::optional<Rational> parse_optional(const std::string& field) {
    if (field.empty()) {
        return std::nullopt;
    }
    return exact::parse_rational(field);
}

namespace detail {

inline void expect_header(std::istream& is, const std::string& header) {
    std::string line;
    if (!std::getline(is, line) || split(line) != split(header)) {
        throw CsvError("expected CSV header '" + header + "'");
    }
}

inline std::vector<std::string> expect_fields(const std::string& line, std::size_t count) {
    auto fields = split(line);
    if (fields.size() != count) {
        throw CsvError("expected " + std::to_string(count) + " fields in '" + line + "'");
    }
    return fields;
}

// Reads lines up to a blank line or end of input.
template <class F>
void for_each_record(std::istream& is, F&& f) {
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line == "\r") {
            break;
        }
        f(line);
    }
}

}  // namespace detail

// ---- distributions ---------------------------------------------------------

inline constexpr const char* distribution_header = "value,multiplicity";

inline void write_distribution_csv(std::ostream& os, const stats::ObservableDistribution& d) {
    os << distribution_header << '\n';
    for (const auto& [value, mult] : d.frequencies()) {
        os << value.str() << ',' << mult.str() << '\n';
    }
}

inline stats::ObservableDistribution read_distribution_csv(std::istream& is, std::size_t n, unsigned k) {
    detail::expect_header(is, distribution_header);
    stats::ObservableDistribution d(n, k);
    detail::for_each_record(is, [&](const std::string& line) {
        const auto f = detail::expect_fields(line, 2);
        d.add(exact::parse_integer(f[0]), exact::parse_integer(f[1]));
    });
    return d;
}

// ---- density ---------------------------------------------------------------

inline void write_density_csv(std::ostream& os, const stats::DensityMatrix& rho) {
    for (std::size_t i = 0; i < rho.size(); ++i) {
        for (std::size_t j = 0; j < rho.size(); ++j) {
            if (j > 0) {
                os << ',';
            }
            os << exact::to_string(rho(i, j));
        }
        os << '\n';
    }
}

inline stats::DensityMatrix read_density_csv(std::istream& is) {
    std::vector<Rational> entries;
    std::size_t n = 0;
    std::size_t rows = 0;
    detail::for_each_record(is, [&](const std::string& line) {
        const auto f = split(line);
        if (n == 0) {
            n = f.size();
        } else if (f.size() != n) {
            throw CsvError("ragged density grid");
        }
        for (const auto& field : f) {
            entries.push_back(exact::parse_rational(field));
        }
        ++rows;
    });
    if (rows != n || n == 0) {
        throw CsvError("density grid is not square");
    }
    return stats::DensityMatrix(n, std::move(entries));
}

// ---- cumulants -------------------------------------------------------------

inline constexpr const char* cumulant_header =
    "n,k,kappa1,kappa2,kappa3,kappa4,kappa4_over_kappa2_sq,kappa3_sq_over_kappa2_cubed";

inline void write_cumulants_csv(std::ostream& os, const std::vector<stats::CumulantTrendRow>& rows) {
    os << cumulant_header << '\n';
    for (const auto& r : rows) {
        os << r.n << ',' << r.k << ',' << exact::to_string(r.kappa.kappa1) << ',' << exact::to_string(r.kappa.kappa2)
           << ',' << exact::to_string(r.kappa.kappa3) << ',' << exact::to_string(r.kappa.kappa4) << ','
           << optional_field(r.excess_kurtosis) << ',' << optional_field(r.skewness_squared) << '\n';
    }
}

inline std::vector<stats::CumulantTrendRow> read_cumulants_csv(std::istream& is) {
    detail::expect_header(is, cumulant_header);
    std::vector<stats::CumulantTrendRow> rows;
    detail::for_each_record(is, [&](const std::string& line) {
        const auto f = detail::expect_fields(line, 8);
        stats::CumulantTrendRow r;
        r.n = std::stoul(f[0]);
        r.k = static_cast<unsigned>(std::stoul(f[1]));
        r.kappa = {exact::parse_rational(f[2]), exact::parse_rational(f[3]), exact::parse_rational(f[4]),
                   exact::parse_rational(f[5])};
        r.excess_kurtosis = parse_optional(f[6]);
        r.skewness_squared = parse_optional(f[7]);
        rows.push_back(std::move(r));
    });
    return rows;
}

// ---- polynomial tables -----------------------------------------------------

/// Coefficients from degree 0 upward, ';'-separated ("0" for the zero polynomial).
inline std::string coefficient_field(const exact::Polynomial& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::vector<std::string> parts;
    for (const auto& c : p.coefficients()) {
        parts.push_back(exact::to_string(c));
    }
    return join(parts, ';');
}

inline exact::Polynomial parse_coefficient_field(const std::string& field) {
    std::vector<Rational> coeffs;
    for (const auto& part : split(field, ';')) {
        coeffs.push_back(exact::parse_rational(part));
    }
    return exact::Polynomial(std::move(coeffs));
}

inline constexpr const char* egf_header = "k,coefficients,matches_uniform";

struct EgfRow {
    unsigned k = 0;
    exact::Polynomial coefficient;
    bool matches_uniform = false;

    friend bool operator==(const EgfRow&, const EgfRow&) = default;
};

inline void write_egf_csv(std::ostream& os, const std::vector<EgfRow>& rows) {
    os << egf_header << '\n';
    for (const auto& r : rows) {
        os << r.k << ',' << coefficient_field(r.coefficient) << ',' << (r.matches_uniform ? "true" : "false") << '\n';
    }
}

inline bool parse_bool(const std::string& field) {
    if (field == "true") {
        return true;
    }
    if (field == "false") {
        return false;
    }
    throw CsvError("expected true/false, got '" + field + "'");
}

inline std::vector<EgfRow> read_egf_csv(std::istream& is) {
    detail::expect_header(is, egf_header);
    std::vector<EgfRow> rows;
    detail::for_each_record(is, [&](const std::string& line) {
        const auto f = detail::expect_fields(line, 3);
        rows.push_back({static_cast<unsigned>(std::stoul(f[0])), parse_coefficient_field(f[1]), parse_bool(f[2])});
    });
    return rows;
}

// ---- discrepancy report ----------------------------------------------------

inline constexpr const char* moment_header = "k,n,thm1,direct,egf,thm2_claim,ensemble,flags";
inline constexpr const char* coefficient_header = "k,r,exponent,claimed,exact,flags";
inline constexpr const char* check_header = "check,passed,detail";

inline void write_coefficients_csv(std::ostream& os, const std::vector<formulas::CoefficientRow>& rows) {
    os << coefficient_header << '\n';
    for (const auto& r : rows) {
        os << r.k << ',' << r.r << ',' << r.exponent << ',' << exact::to_string(r.claimed) << ','
           << exact::to_string(r.exact) << ',' << join(r.flags, ';') << '\n';
    }
}

inline std::vector<formulas::CoefficientRow> read_coefficients_csv(std::istream& is) {
    detail::expect_header(is, coefficient_header);
    std::vector<formulas::CoefficientRow> rows;
    detail::for_each_record(is, [&](const std::string& line) {
        const auto f = detail::expect_fields(line, 6);
        formulas::CoefficientRow r;
        r.k = static_cast<unsigned>(std::stoul(f[0]));
        r.r = static_cast<unsigned>(std::stoul(f[1]));
        r.exponent = std::stoi(f[2]);
        r.claimed = exact::parse_rational(f[3]);
        r.exact = exact::parse_rational(f[4]);
        if (!f[5].empty()) {
            r.flags = split(f[5], ';');
        }
        rows.push_back(std::move(r));
    });
    return rows;
}

/// Three sections separated by blank lines: moments, coefficients, checks.
inline void write_report_csv(std::ostream& os, const formulas::DiscrepancyReport& report) {
    os << moment_header << '\n';
    for (const auto& r : report.moments) {
        os << r.k << ',' << r.n << ',' << exact::to_string(r.uniform) << ',' << exact::to_string(r.direct) << ','
           << exact::to_string(r.egf) << ',' << optional_field(r.printed_claim) << ',' << optional_field(r.ensemble)
           << ',' << join(r.flags, ';') << '\n';
    }
    os << '\n';
    write_coefficients_csv(os, report.coefficients);
    os << '\n' << check_header << '\n';
    for (const auto& c : report.checks) {
        os << c.name << ',' << (c.passed ? "true" : "false") << ',' << c.detail << '\n';
    }
}

/// Reconstructs the tables; k_max/n_max are recovered from the rows and the
/// cap is not stored.
inline formulas::DiscrepancyReport read_report_csv(std::istream& is) {
    formulas::DiscrepancyReport report;
    detail::expect_header(is, moment_header);
    detail::for_each_record(is, [&](const std::string& line) {
        const auto f = detail::expect_fields(line, 8);
        formulas::MomentRow r;
        r.k = static_cast<unsigned>(std::stoul(f[0]));
        r.n = static_cast<unsigned>(std::stoul(f[1]));
        r.uniform = exact::parse_rational(f[2]);
        r.direct = exact::parse_rational(f[3]);
        r.egf = exact::parse_rational(f[4]);
        r.printed_claim = parse_optional(f[5]);
        r.ensemble = parse_optional(f[6]);
        if (!f[7].empty()) {
            r.flags = split(f[7], ';');
        }
        report.k_max = std::max(report.k_max, r.k);
        report.n_max = std::max(report.n_max, r.n);
        report.moments.push_back(std::move(r));
    });
    report.coefficients = read_coefficients_csv(is);
    detail::expect_header(is, check_header);
    detail::for_each_record(is, [&](const std::string& line) {
        const auto f = detail::expect_fields(line, 3);
        report.checks.push_back({f[0], parse_bool(f[1]), f[2]});
    });
    return report;
}

}  // namespace asmstat::io
