#pragma once

// Command dispatch behind the asmstat executable. Kept in a header so the
// test suites can drive commands without spawning processes.

#include "asmstat/asms/count.hpp"
#include "asmstat/asms/enumerate.hpp"
#include "asmstat/asms/observable.hpp"
#include "asmstat/asms/text_format.hpp"
#include "asmstat/formulas/asymptotic.hpp"
#include "asmstat/formulas/discrepancy.hpp"
#include "asmstat/formulas/egf.hpp"
#include "asmstat/formulas/moments.hpp"
#include "asmstat/io/csv.hpp"
#include "asmstat/io/json_format.hpp"
#include "asmstat/stats/cumulants.hpp"
#include "asmstat/stats/density.hpp"
#include "asmstat/stats/distribution.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace asmstat::cli {

enum class Command { count, enumerate, density, dist, cumulants, egf, asympt, verify, validate };
enum class Format { text, csv, json };

inline constexpr int exit_ok = 0;
inline constexpr int exit_inconsistent = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_cap = 3;

inline constexpr const char* cap_env_var = "ASMSTAT_ENUM_CAP";

struct RunConfig {
    Command command = Command::count;
    std::optional<unsigned> n;
    std::optional<unsigned> k;
    std::optional<unsigned> k_max;
    std::optional<unsigned> n_max;
    std::optional<unsigned> n_from;
    Format format = Format::text;
    std::optional<std::string> output;
    std::optional<std::string> input;
    std::optional<std::size_t> cap;
    unsigned threads = 1;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline const char* command_name(Command c) {
    switch (c) {
        case Command::count: return "count";
        case Command::enumerate: return "enumerate";
        case Command::density: return "density";
        case Command::dist: return "dist";
        case Command::cumulants: return "cumulants";
        case Command::egf: return "egf";
        case Command::asympt: return "asympt";
        case Command::verify: return "verify";
        case Command::validate: return "validate";
    }
    return "?";
}

/// Flag, then environment, then the built-in default.
inline std::size_t resolve_cap(const RunConfig& config) {
    if (config.cap) {
        return *config.cap;
    }
    if (const char* env = std::getenv(cap_env_var); env != nullptr && *env != '\0') {
        std::size_t used = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(env, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != std::string(env).size()) {
            throw UsageError(std::string(cap_env_var) + " must be a non-negative integer");
        }
        return value;
    }
    return asms::default_enumeration_cap;
}

namespace detail {

// Left-aligned columns padded to the widest cell.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void write(std::ostream& os) const {
        std::vector<std::size_t> width;
        for (const auto& row : rows_) {
            width.resize(std::max(width.size(), row.size()));
            for (std::size_t c = 0; c < row.size(); ++c) {
                width[c] = std::max(width[c], row[c].size());
            }
        }
        for (const auto& row : rows_) {
            std::string line;
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c > 0) {
                    line += "  ";
                }
                line += row[c];
                if (c + 1 < row.size()) {
                    line.append(width[c] - row[c].size(), ' ');
                }
            }
            os << line << '\n';
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

inline unsigned need(const std::optional<unsigned>& v, const char* flag, Command c) {
    if (!v) {
        throw UsageError(std::string(command_name(c)) + " requires " + flag);
    }
    return *v;
}

inline unsigned need_positive(const std::optional<unsigned>& v, const char* flag, Command c) {
    const unsigned value = need(v, flag, c);
    if (value == 0) {
        throw UsageError(std::string(flag) + " must be >= 1");
    }
    return value;
}

inline void emit_json(std::ostream& os, Command c, io::json body) {
    body["command"] = command_name(c);
    os << body.dump(2) << '\n';
}

inline std::string rat(const exact::Rational& r) { return exact::to_string(r); }
inline std::string opt(const std::optional<exact::Rational>& r) { return r ? rat(*r) : "-"; }

inline std::string flags_text(const std::vector<std::string>& flags) {
    return flags.empty() ? "ok" : io::join(flags, ',');
}

inline void run_count(const RunConfig& cfg, std::ostream& os) {
    std::vector<unsigned> ns;
    if (cfg.n) {
        ns.push_back(need_positive(cfg.n, "--n", cfg.command));
    } else {
        const unsigned n_max = cfg.n_max.value_or(10);
        for (unsigned n = 1; n <= n_max; ++n) {
            ns.push_back(n);
        }
    }
    switch (cfg.format) {
        case Format::text:
            if (cfg.n) {
                os << asms::count_asm(ns.front()).str() << '\n';
            } else {
                TextTable table({"n", "count"});
                for (const unsigned n : ns) {
                    table.add({std::to_string(n), asms::count_asm(n).str()});
                }
                table.write(os);
            }
            break;
        case Format::csv:
            os << "n,count\n";
            for (const unsigned n : ns) {
                os << n << ',' << asms::count_asm(n).str() << '\n';
            }
            break;
        case Format::json: {
            io::json rows = io::json::array();
            for (const unsigned n : ns) {
                rows.push_back({{"n", n}, {"count", asms::count_asm(n).str()}});
            }
            emit_json(os, cfg.command, {{"rows", rows}});
            break;
        }
    }
}

inline void run_enumerate(const RunConfig& cfg, const stats::EnsembleOptions& opts, std::ostream& os) {
    const unsigned n = need_positive(cfg.n, "--n", cfg.command);
    switch (cfg.format) {
        case Format::text: {
            bool first = true;
            asms::for_each_asm(
                n,
                [&](const asms::Asm& a) {
                    if (!first) {
                        os << '\n';
                    }
                    first = false;
                    asms::write_text(os, a);
                },
                opts.enumeration);
            break;
        }
        case Format::csv: {
            os << "index,entries\n";
            std::size_t index = 0;
            asms::for_each_asm(
                n, [&](const asms::Asm& a) { os << index++ << ',' << asms::encode(a) << '\n'; }, opts.enumeration);
            break;
        }
        case Format::json: {
            io::json matrices = io::json::array();
            asms::for_each_asm(n, [&](const asms::Asm& a) { matrices.push_back(io::to_json(a)); }, opts.enumeration);
            const std::size_t count = matrices.size();
            emit_json(os, cfg.command, {{"n", n}, {"count", std::to_string(count)}, {"matrices", std::move(matrices)}});
            break;
        }
    }
}

inline void run_density(const RunConfig& cfg, const stats::EnsembleOptions& opts, std::ostream& os) {
    const unsigned n = need_positive(cfg.n, "--n", cfg.command);
    const auto rho = stats::mean_density(n, opts);
    switch (cfg.format) {
        case Format::text: {
            std::vector<std::string> header;
            for (unsigned j = 1; j <= n; ++j) {
                header.push_back("j=" + std::to_string(j));
            }
            TextTable table(header);
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<std::string> row;
                for (std::size_t j = 0; j < n; ++j) {
                    row.push_back(rat(rho(i, j)));
                }
                table.add(row);
            }
            table.write(os);
            os << "bistochastic: " << (rho.is_bistochastic() ? "yes" : "no") << '\n';
            os << "max |rho - 1/n|: " << rat(stats::density_deviation(rho)) << '\n';
            break;
        }
        case Format::csv:
            io::write_density_csv(os, rho);
            break;
        case Format::json:
            emit_json(os, cfg.command, io::to_json(rho));
            break;
    }
}

inline void run_dist(const RunConfig& cfg, const stats::EnsembleOptions& opts, std::ostream& os) {
    const unsigned n = need_positive(cfg.n, "--n", cfg.command);
    const unsigned k = need(cfg.k, "--k", cfg.command);
    const auto d = stats::distribution(n, k, opts);
    switch (cfg.format) {
        case Format::text: {
            TextTable table({"value", "multiplicity"});
            for (const auto& [value, mult] : d.frequencies()) {
                table.add({value.str(), mult.str()});
            }
            table.write(os);
            os << "total: " << d.total().str() << '\n';
            os << "mean: " << rat(stats::ensemble_moment(d, 1)) << '\n';
            break;
        }
        case Format::csv:
            io::write_distribution_csv(os, d);
            break;
        case Format::json:
            emit_json(os, cfg.command, io::to_json(d));
            break;
    }
}

inline void run_cumulants(const RunConfig& cfg, const stats::EnsembleOptions& opts, std::ostream& os) {
    const unsigned n = need_positive(cfg.n, "--n", cfg.command);
    const unsigned k = need(cfg.k, "--k", cfg.command);
    const unsigned n_from = cfg.n_from.value_or(n);
    if (n_from == 0 || n_from > n) {
        throw UsageError("--n-from must lie in 1..n");
    }
    const auto rows = stats::cumulant_trend(k, n_from, n, opts);
    switch (cfg.format) {
        case Format::text: {
            TextTable table({"n", "k", "kappa1", "kappa2", "kappa3", "kappa4", "kappa4/kappa2^2", "kappa3^2/kappa2^3"});
            for (const auto& r : rows) {
                table.add({std::to_string(r.n), std::to_string(r.k), rat(r.kappa.kappa1), rat(r.kappa.kappa2),
                           rat(r.kappa.kappa3), rat(r.kappa.kappa4), opt(r.excess_kurtosis), opt(r.skewness_squared)});
            }
            table.write(os);
            break;
        }
        case Format::csv:
            io::write_cumulants_csv(os, rows);
            break;
        case Format::json: {
            io::json out = io::json::array();
            for (const auto& r : rows) {
                out.push_back(io::to_json(r));
            }
            emit_json(os, cfg.command, {{"rows", out}});
            break;
        }
    }
}

inline void run_egf(const RunConfig& cfg, std::ostream& os) {
    const unsigned k_max = cfg.k_max.value_or(8);
    const auto entries = formulas::egf_expansion(k_max);
    std::vector<io::EgfRow> rows;
    for (unsigned k = 0; k <= k_max; ++k) {
        rows.push_back({k, entries[k], entries[k] == formulas::expected_moment_polynomial(k)});
    }
    switch (cfg.format) {
        case Format::text: {
            TextTable table({"k", "E[E_k](n)", "matches_uniform"});
            for (const auto& r : rows) {
                table.add({std::to_string(r.k), r.coefficient.to_string("n"), r.matches_uniform ? "yes" : "no"});
            }
            table.write(os);
            break;
        }
        case Format::csv:
            io::write_egf_csv(os, rows);
            break;
        case Format::json: {
            io::json out = io::json::array();
            for (const auto& r : rows) {
                io::json entry = io::to_json(r.coefficient);
                entry["k"] = r.k;
                entry["matches_uniform"] = r.matches_uniform;
                out.push_back(entry);
            }
            emit_json(os, cfg.command, {{"k_max", k_max}, {"entries", out}});
            break;
        }
    }
}

/// Leading row (r = 0) for even k, then one row per n^{k+1-2r} with exponent >= 0.
inline std::vector<formulas::CoefficientRow> asymptotic_rows(unsigned k) {
    std::vector<formulas::CoefficientRow> rows;
    const auto poly = formulas::expected_moment_polynomial(k);
    if (k % 2 == 0) {
        formulas::CoefficientRow lead{k, 0, static_cast<int>(k) + 1, formulas::asymptotic_leading(k),
                                      poly.coefficient(k + 1), {}};
        if (lead.claimed != lead.exact) {
            lead.flags.push_back(formulas::flag_claim_mismatch);
        }
        rows.push_back(std::move(lead));
    }
    for (unsigned r = 1; 2 * r <= k + 1; ++r) {
        formulas::CoefficientRow row;
        row.k = k;
        row.r = r;
        row.exponent = static_cast<int>(k) + 1 - 2 * static_cast<int>(r);
        row.claimed = formulas::asymptotic_coefficient_paper(k, r);
        row.exact = poly.coefficient(static_cast<std::size_t>(row.exponent));
        if (row.claimed != row.exact) {
            row.flags.push_back(formulas::flag_claim_mismatch);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline void run_asympt(const RunConfig& cfg, std::ostream& os) {
    std::vector<unsigned> ks;
    if (cfg.k) {
        ks.push_back(*cfg.k);
    } else {
        for (unsigned k = 0; k <= cfg.k_max.value_or(8); ++k) {
            ks.push_back(k);
        }
    }
    std::vector<formulas::CoefficientRow> rows;
    for (const unsigned k : ks) {
        auto part = asymptotic_rows(k);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    switch (cfg.format) {
        case Format::text: {
            TextTable table({"k", "r", "power", "claimed", "exact", "status"});
            for (const auto& r : rows) {
                table.add({std::to_string(r.k), std::to_string(r.r), "n^" + std::to_string(r.exponent),
                           rat(r.claimed), rat(r.exact), flags_text(r.flags)});
            }
            table.write(os);
            break;
        }
        case Format::csv:
            io::write_coefficients_csv(os, rows);
            break;
        case Format::json: {
            io::json out = io::json::array();
            for (const auto& r : rows) {
                out.push_back(io::to_json(r));
            }
            emit_json(os, cfg.command, {{"rows", out}});
            break;
        }
    }
}

inline void write_report_text(std::ostream& os, const formulas::DiscrepancyReport& report) {
    os << "Expectation of E_k: uniform-density routes, printed closed forms, exact ensemble\n\n";
    TextTable moments({"k", "n", "thm1", "direct", "egf", "thm2_claim", "ensemble", "status"});
    for (const auto& r : report.moments) {
        moments.add({std::to_string(r.k), std::to_string(r.n), rat(r.uniform), rat(r.direct), rat(r.egf),
                     opt(r.printed_claim), opt(r.ensemble), flags_text(r.flags)});
    }
    moments.write(os);
    os << "\nExpansion coefficients of n^{k+1-2r}: printed P_{k,r} vs exact\n\n";
    TextTable coeffs({"k", "r", "power", "claimed", "exact", "status"});
    for (const auto& r : report.coefficients) {
        coeffs.add({std::to_string(r.k), std::to_string(r.r), "n^" + std::to_string(r.exponent), rat(r.claimed),
                    rat(r.exact), flags_text(r.flags)});
    }
    coeffs.write(os);
    os << "\nInternal consistency\n\n";
    TextTable checks({"check", "result", "first failure"});
    for (const auto& c : report.checks) {
        checks.add({c.name, c.passed ? "pass" : "FAIL", c.detail.empty() ? "-" : c.detail});
    }
    checks.write(os);
    std::size_t claim_rows = 0;
    for (const auto& r : report.moments) {
        claim_rows += std::count(r.flags.begin(), r.flags.end(), formulas::flag_claim_mismatch);
    }
    for (const auto& r : report.coefficients) {
        claim_rows += r.flags.empty() ? 0 : 1;
    }
    os << "\nclaim mismatches: " << claim_rows << "\n";
    os << "internal consistency: " << (report.internally_consistent() ? "PASS" : "FAIL") << '\n';
}

inline int run_verify(const RunConfig& cfg, const stats::EnsembleOptions& opts, std::ostream& os) {
    const unsigned k_max = cfg.k_max.value_or(8);
    const unsigned n_max = cfg.n_max.value_or(6);
    if (n_max == 0) {
        throw UsageError("--n-max must be >= 1");
    }
    const auto report = formulas::discrepancy_report(k_max, n_max, opts);
    switch (cfg.format) {
        case Format::text:
            write_report_text(os, report);
            break;
        case Format::csv:
            io::write_report_csv(os, report);
            break;
        case Format::json:
            emit_json(os, cfg.command, io::to_json(report));
            break;
    }
    return report.internally_consistent() ? exit_ok : exit_inconsistent;
}

inline void run_validate(const RunConfig& cfg, std::ostream& os) {
    const unsigned k_max = cfg.k_max.value_or(4);
    std::vector<asms::Asm> matrices;
    if (!cfg.input || *cfg.input == "-") {
        matrices = asms::read_all_text(std::cin);
    } else {
        std::ifstream in(*cfg.input);
        if (!in) {
            throw UsageError("cannot open " + *cfg.input);
        }
        matrices = asms::read_all_text(in);
    }
    if (matrices.empty()) {
        throw UsageError("no matrix in input");
    }
    std::vector<std::string> header{"index", "n"};
    for (unsigned k = 0; k <= k_max; ++k) {
        header.push_back("E" + std::to_string(k));
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t idx = 0; idx < matrices.size(); ++idx) {
        std::vector<std::string> row{std::to_string(idx), std::to_string(matrices[idx].size())};
        for (unsigned k = 0; k <= k_max; ++k) {
            row.push_back(asms::observable(matrices[idx], k).value.str());
        }
        rows.push_back(std::move(row));
    }
    switch (cfg.format) {
        case Format::text: {
            TextTable table(header);
            for (auto& r : rows) {
                table.add(r);
            }
            table.write(os);
            break;
        }
        case Format::csv:
            os << io::join(header, ',') << '\n';
            for (const auto& r : rows) {
                os << io::join(r, ',') << '\n';
            }
            break;
        case Format::json: {
            io::json out = io::json::array();
            for (std::size_t idx = 0; idx < matrices.size(); ++idx) {
                io::json obs = io::json::array();
                for (unsigned k = 0; k <= k_max; ++k) {
                    obs.push_back(rows[idx][2 + k]);
                }
                out.push_back({{"n", matrices[idx].size()}, {"matrix", io::to_json(matrices[idx])}, {"observables", obs}});
            }
            emit_json(os, cfg.command, {{"k_max", k_max}, {"matrices", out}});
            break;
        }
    }
}

}  // namespace detail

/// Executes one command, writing the artifact to os and diagnostics to err.
inline int run(const RunConfig& cfg, std::ostream& os, std::ostream& err) {
    try {
        stats::EnsembleOptions opts;
        opts.enumeration.cap = resolve_cap(cfg);
        opts.threads = std::max(1u, cfg.threads);
        switch (cfg.command) {
            case Command::count: detail::run_count(cfg, os); break;
            case Command::enumerate: detail::run_enumerate(cfg, opts, os); break;
            case Command::density: detail::run_density(cfg, opts, os); break;
            case Command::dist: detail::run_dist(cfg, opts, os); break;
            case Command::cumulants: detail::run_cumulants(cfg, opts, os); break;
            case Command::egf: detail::run_egf(cfg, os); break;
            case Command::asympt: detail::run_asympt(cfg, os); break;
            case Command::verify: return detail::run_verify(cfg, opts, os);
            case Command::validate: detail::run_validate(cfg, os); break;
        }
        return exit_ok;
    } catch (const asms::EnumerationCapError& e) {
        err << "error: " << e.what() << '\n';
        return exit_cap;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const asms::AsmError& e) {
        err << "invalid matrix: " << e.what() << '\n';
        return exit_usage;
    }
}

/// Runs into a file when config.output is set, otherwise into os.
inline int run_to_destination(const RunConfig& cfg, std::ostream& os, std::ostream& err) {
    if (!cfg.output || *cfg.output == "-") {
        return run(cfg, os, err);
    }
    std::ostringstream buffer;
    const int status = run(cfg, buffer, err);
    std::ofstream file(*cfg.output, std::ios::binary);
    if (!file) {
        err << "error: cannot write " << *cfg.output << '\n';
        return exit_usage;
    }
    file << buffer.str();
    return status;
}

}  // namespace asmstat::cli
