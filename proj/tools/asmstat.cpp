// asmstat: enumeration, exact statistics and closed-form verification for
// alternating sign matrices.

#include "asmstat/cli/run.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <map>
#include <string>

namespace {

using asmstat::cli::Command;
using asmstat::cli::Format;
using asmstat::cli::RunConfig;

struct Flags {
    unsigned n = 0;
    unsigned k = 0;
    unsigned k_max = 0;
    unsigned n_max = 0;
    unsigned n_from = 0;
    std::size_t cap = 0;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration and moment statistics of alternating sign matrices"};
    app.require_subcommand(1);

    RunConfig cfg;
    Flags flags;
    std::string format = "text";
    std::string output;
    std::string input;

    const std::map<std::string, Format> formats{{"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};

    struct Sub {
        const char* name;
        const char* help;
        Command command;
    };
    const Sub subs[] = {
        {"count", "A_n from the product formula", Command::count},
        {"enumerate", "list every n x n ASM", Command::enumerate},
        {"density", "exact mean density rho_n", Command::density},
        {"dist", "exact law of E_k", Command::dist},
        {"cumulants", "exact cumulants kappa1..kappa4 of E_k", Command::cumulants},
        {"egf", "coefficients of the generating function, as polynomials in n", Command::egf},
        {"asympt", "expansion coefficients of E[E_k] in powers of n", Command::asympt},
        {"verify", "cross-check every closed form and report discrepancies", Command::verify},
        {"validate", "read ASMs in text form and evaluate E_0..E_kmax", Command::validate},
    };

    for (const auto& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
        sub->add_option("-o,--output", output, "write the artifact to this file");
        sub->add_option("--cap", flags.cap, "enumeration cap (default 8, or $ASMSTAT_ENUM_CAP)");
        sub->add_option("--threads", cfg.threads, "worker threads for enumeration")->check(CLI::Range(1u, 256u));
        switch (s.command) {
            case Command::count:
                sub->add_option("--n", flags.n, "matrix size");
                sub->add_option("--n-max", flags.n_max, "table size when --n is absent (default 10)");
                break;
            case Command::enumerate:
            case Command::density:
                sub->add_option("--n", flags.n, "matrix size");
                break;
            case Command::dist:
                sub->add_option("--n", flags.n, "matrix size");
                sub->add_option("--k", flags.k, "observable order");
                break;
            case Command::cumulants:
                sub->add_option("--n", flags.n, "matrix size (last row of the table)");
                sub->add_option("--k", flags.k, "observable order");
                sub->add_option("--n-from", flags.n_from, "first matrix size of the table (default n)");
                break;
            case Command::egf:
                sub->add_option("--k-max", flags.k_max, "highest order (default 8)");
                break;
            case Command::asympt:
                sub->add_option("--k", flags.k, "single observable order");
                sub->add_option("--k-max", flags.k_max, "all orders 0..k-max (default 8)");
                break;
            case Command::verify:
                sub->add_option("--k-max", flags.k_max, "highest observable order (default 8)");
                sub->add_option("--n-max", flags.n_max, "largest matrix size (default 6)");
                break;
            case Command::validate:
                sub->add_option("-i,--input", input, "input file, '-' for stdin");
                sub->add_option("--k-max", flags.k_max, "highest observable order (default 4)");
                break;
        }
        sub->callback([&cfg, &s] { cfg.command = s.command; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return asmstat::cli::exit_usage;
    }

    CLI::App* sub = app.get_subcommands().front();
    const auto given = [sub](const char* name) { return sub->get_option_no_throw(name) && sub->count(name) > 0; };
    if (given("--n")) cfg.n = flags.n;
    if (given("--k")) cfg.k = flags.k;
    if (given("--k-max")) cfg.k_max = flags.k_max;
    if (given("--n-max")) cfg.n_max = flags.n_max;
    if (given("--n-from")) cfg.n_from = flags.n_from;
    if (given("--cap")) cfg.cap = flags.cap;
    if (given("--output")) cfg.output = output;
    if (given("--input")) cfg.input = input;
    cfg.format = formats.at(format);

    return asmstat::cli::run_to_destination(cfg, std::cout, std::cerr);
}
