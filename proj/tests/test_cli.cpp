#include "asmstat/cli/run.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace asmstat::cli;

namespace {

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome invoke(const RunConfig& cfg) {
    std::ostringstream out;
    std::ostringstream err;
    const int status = run(cfg, out, err);
    return {status, out.str(), err.str()};
}

RunConfig config(Command c) {
    RunConfig cfg;
    cfg.command = c;
    return cfg;
}

// Restores the cap variable on scope exit.
class CapEnv {
public:
    explicit CapEnv(const char* value) {
        if (const char* old = std::getenv(cap_env_var)) {
            saved_ = old;
        }
        ::setenv(cap_env_var, value, 1);
    }
    ~CapEnv() {
        if (saved_) {
            ::setenv(cap_env_var, saved_->c_str(), 1);
        } else {
            ::unsetenv(cap_env_var);
        }
    }

private:
    std::optional<std::string> saved_;
};

}  // namespace

TEST(Cli, CountExample) {
    auto cfg = config(Command::count);
    cfg.n = 7;
    const auto r = invoke(cfg);
    EXPECT_EQ(r.status, exit_ok);
    EXPECT_EQ(r.out, "218348\n");

    cfg.n.reset();
    cfg.n_max = 4;
    cfg.format = Format::csv;
    EXPECT_EQ(invoke(cfg).out, "n,count\n1,1\n2,2\n3,7\n4,42\n");
}

TEST(Cli, DistCsvExample) {
    auto cfg = config(Command::dist);
    cfg.n = 3;
    cfg.k = 2;
    cfg.format = Format::csv;
    const auto r = invoke(cfg);
    EXPECT_EQ(r.status, exit_ok);
    EXPECT_EQ(r.out, "value,multiplicity\n0,1\n2,2\n4,1\n6,2\n8,1\n");
}

TEST(Cli, VerifyDefaultsPass) {
    const auto r = invoke(config(Command::verify));
    EXPECT_EQ(r.status, exit_ok) << r.err;
    EXPECT_NE(r.out.find("internal consistency: PASS"), std::string::npos);
    EXPECT_NE(r.out.find("claim_mismatch"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    for (const Command c : {Command::enumerate, Command::density, Command::dist, Command::cumulants}) {
        auto cfg = config(c);
        cfg.k = 2;
        const auto r = invoke(cfg);
        EXPECT_EQ(r.status, exit_usage) << command_name(c);
        EXPECT_NE(r.err.find("--n"), std::string::npos);
    }
    auto no_k = config(Command::dist);
    no_k.n = 3;
    EXPECT_EQ(invoke(no_k).status, exit_usage);

    auto zero = config(Command::count);
    zero.n = 0;
    EXPECT_EQ(invoke(zero).status, exit_usage);

    auto bad_from = config(Command::cumulants);
    bad_from.n = 3;
    bad_from.k = 2;
    bad_from.n_from = 4;
    EXPECT_EQ(invoke(bad_from).status, exit_usage);
}

TEST(Cli, CapExceeded) {
    auto cfg = config(Command::dist);
    cfg.n = 9;
    cfg.k = 2;
    const auto r = invoke(cfg);
    EXPECT_EQ(r.status, exit_cap);
    EXPECT_FALSE(r.err.empty());

    cfg.n = 5;
    cfg.cap = 4;
    EXPECT_EQ(invoke(cfg).status, exit_cap);
}

TEST(Cli, CapFromEnvironment) {
    auto cfg = config(Command::enumerate);
    cfg.n = 4;
    cfg.format = Format::csv;
    {
        CapEnv env("3");
        EXPECT_EQ(resolve_cap(cfg), 3u);
        EXPECT_EQ(invoke(cfg).status, exit_cap);
        cfg.cap = 4;  // flag wins over the environment
        EXPECT_EQ(invoke(cfg).status, exit_ok);
        cfg.cap.reset();
    }
    {
        CapEnv env("lots");
        EXPECT_EQ(invoke(cfg).status, exit_usage);
    }
    EXPECT_EQ(resolve_cap(cfg), asmstat::asms::default_enumeration_cap);
}

TEST(Cli, EnumerateCsv) {
    auto cfg = config(Command::enumerate);
    cfg.n = 3;
    cfg.format = Format::csv;
    const auto r = invoke(cfg);
    EXPECT_EQ(r.status, exit_ok);
    std::istringstream lines(r.out);
    std::string line;
    std::size_t count = 0;
    std::getline(lines, line);
    EXPECT_EQ(line, "index,entries");
    while (std::getline(lines, line)) {
        ++count;
    }
    EXPECT_EQ(count, 7u);
}

TEST(Cli, JsonCarriesCommand) {
    for (const Command c : {Command::count, Command::density, Command::dist, Command::cumulants, Command::egf,
                            Command::asympt, Command::enumerate}) {
        auto cfg = config(c);
        cfg.n = 3;
        cfg.k = 2;
        cfg.format = Format::json;
        const auto r = invoke(cfg);
        ASSERT_EQ(r.status, exit_ok) << command_name(c) << ": " << r.err;
        const auto parsed = asmstat::io::json::parse(r.out);
        EXPECT_EQ(parsed["command"], command_name(c));
    }
}

TEST(Cli, Deterministic) {
    for (const Format f : {Format::text, Format::csv, Format::json}) {
        auto cfg = config(Command::verify);
        cfg.k_max = 6;
        cfg.n_max = 5;
        cfg.format = f;
        const auto first = invoke(cfg);
        auto threaded = cfg;
        threaded.threads = 3;
        EXPECT_EQ(invoke(cfg).out, first.out);
        EXPECT_EQ(invoke(threaded).out, first.out);
    }
}

TEST(Cli, ValidateFromFile) {
    const auto dir = std::filesystem::temp_directory_path();
    const auto good = dir / "asmstat_cli_good.txt";
    const auto bad = dir / "asmstat_cli_bad.txt";
    {
        std::ofstream(good) << "0 1 0\n1 -1 1\n0 1 0\n\n1 0\n0 1\n";
        std::ofstream(bad) << "1 0\n1 0\n";
    }
    auto cfg = config(Command::validate);
    cfg.format = Format::csv;
    cfg.k_max = 2;
    cfg.input = good.string();
    const auto ok = invoke(cfg);
    EXPECT_EQ(ok.status, exit_ok) << ok.err;
    EXPECT_EQ(ok.out, "index,n,E0,E1,E2\n0,3,3,0,4\n1,2,2,0,0\n");

    cfg.input = bad.string();
    const auto rejected = invoke(cfg);
    EXPECT_EQ(rejected.status, exit_usage);
    EXPECT_NE(rejected.err.find("column 1 sums to 2"), std::string::npos);

    cfg.input = (dir / "asmstat_cli_missing.txt").string();
    EXPECT_EQ(invoke(cfg).status, exit_usage);
    std::filesystem::remove(good);
    std::filesystem::remove(bad);
}

TEST(Cli, OutputFile) {
    const auto path = std::filesystem::temp_directory_path() / "asmstat_cli_out.csv";
    auto cfg = config(Command::egf);
    cfg.k_max = 4;
    cfg.format = Format::csv;
    cfg.output = path.string();
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(run_to_destination(cfg, out, err), exit_ok);
    EXPECT_TRUE(out.str().empty());
    std::ifstream in(path);
    const auto rows = asmstat::io::read_egf_csv(in);
    ASSERT_EQ(rows.size(), 5u);
    EXPECT_TRUE(rows[4].matches_uniform);
    std::filesystem::remove(path);
}
