#include "asmstat/asms/asm.hpp"
#include "asmstat/asms/count.hpp"
#include "asmstat/asms/enumerate.hpp"
#include "asmstat/asms/monotone_triangle.hpp"
#include "asmstat/asms/observable.hpp"
#include "asmstat/asms/text_format.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>

using namespace asmstat::asms;
using asmstat::exact::BigInt;

namespace {

Asm make(const std::vector<std::vector<long long>>& rows) { return validate(rows); }

const std::vector<std::vector<long long>> diamond_rows{{0, 1, 0}, {1, -1, 1}, {0, 1, 0}};

std::string error_of(const std::vector<std::vector<long long>>& rows) {
    try {
        validate(rows);
    } catch (const AsmError& e) {
        return e.what();
    }
    return {};
}

std::vector<std::vector<long long>> to_rows(const oracle::Matrix& m) {
    std::vector<std::vector<long long>> out;
    for (const auto& row : m) {
        out.emplace_back(row.begin(), row.end());
    }
    return out;
}

}  // namespace

TEST(Validate, AcceptsAsms) {
    EXPECT_NO_THROW(make({{1, 0}, {0, 1}}));
    const Asm d = make(diamond_rows);
    EXPECT_EQ(d.size(), 3u);
    EXPECT_EQ(d(1, 1), -1);
}

TEST(Validate, Diagnostics) {
    EXPECT_EQ(error_of({{1, 0}, {1, 0}}), "column 1 sums to 2");
    EXPECT_EQ(error_of({{1, 0}, {0, 0}}), "row 2 sums to 0");
    EXPECT_EQ(error_of({{0, 0, 1}, {1, -1, 1}, {0, 1, -1}}).rfind("row 3", 0), 0u);
    // Row sums to 1 but starts with -1.
    EXPECT_NE(error_of({{-1, 1, 1}, {1, 0, 0}, {1, 0, 0}}).find("row 1: partial sum -1"), std::string::npos);
    EXPECT_NE(error_of({{2, -1}, {0, 1}}).find("not in {-1,0,1}"), std::string::npos);
    EXPECT_NE(error_of({{1, 0}, {0}}).find("row 2 has 1 entries"), std::string::npos);
    EXPECT_THROW(validate(std::vector<std::vector<long long>>{}), AsmError);
}

TEST(Validate, AgreesWithAlternationOracle) {
    // Every {-1,0,1} matrix of size 2 and 3: validate accepts exactly the oracle's ASMs.
    for (std::size_t n = 1; n <= 3; ++n) {
        std::size_t total = 1;
        for (std::size_t t = 0; t < n * n; ++t) {
            total *= 3;
        }
        for (std::size_t code = 0; code < total; ++code) {
            oracle::Matrix m(n, std::vector<int>(n));
            std::size_t c = code;
            for (std::size_t t = 0; t < n * n; ++t) {
                m[t / n][t % n] = static_cast<int>(c % 3) - 1;
                c /= 3;
            }
            const bool accepted = error_of(to_rows(m)).empty();
            ASSERT_EQ(accepted, oracle::is_asm(m)) << "n=" << n << " code=" << code;
        }
    }
}

TEST(MonotoneTriangle, FromAsm) {
    const auto id = to_monotone_triangle(make({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    EXPECT_EQ(id.rows, (std::vector<std::vector<int>>{{1}, {1, 2}, {1, 2, 3}}));
    const auto d = to_monotone_triangle(make(diamond_rows));
    EXPECT_EQ(d.rows, (std::vector<std::vector<int>>{{2}, {1, 3}, {1, 2, 3}}));
    EXPECT_EQ(from_monotone_triangle(d), make(diamond_rows));
}

TEST(MonotoneTriangle, RejectsInvalid) {
    EXPECT_THROW(from_monotone_triangle({{{3}, {1, 2}, {1, 2, 3}}}), AsmError);  // 3 not between 1 and 2
    EXPECT_THROW(from_monotone_triangle({{{1}, {2, 1}, {1, 2, 3}}}), AsmError);  // not increasing
    EXPECT_THROW(from_monotone_triangle({{{1}, {1, 2}, {1, 2, 4}}}), AsmError);  // outside 1..n
    EXPECT_THROW(from_monotone_triangle({{{1}, {1, 2, 3}}}), AsmError);          // wrong row length
    EXPECT_THROW(from_monotone_triangle({}), AsmError);
}

TEST(MonotoneTriangle, BijectionRoundTrip) {
    for (std::size_t n = 1; n <= 6; ++n) {
        AsmEnumerator e(n);
        while (e.next()) {
            const auto t = to_monotone_triangle(e.current());
            ASSERT_EQ(t, e.triangle());
            ASSERT_EQ(from_monotone_triangle(t), e.current());
        }
    }
}

TEST(Enumerate, SmallCases) {
    const auto one = enumerate(1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0], make({{1}}));

    const auto two = enumerate(2);
    ASSERT_EQ(two.size(), 2u);
    std::set<std::string> got;
    for (const auto& a : two) {
        got.insert(encode(a));
    }
    EXPECT_EQ(got, (std::set<std::string>{"1001", "0110"}));
}

TEST(Enumerate, MatchesBruteForce) {
    for (std::size_t n = 1; n <= 3; ++n) {
        std::set<std::string> expected;
        for (const auto& m : oracle::brute_force_asms(n)) {
            expected.insert(encode(validate(to_rows(m))));
        }
        std::set<std::string> got;
        std::size_t produced = 0;
        for_each_asm(n, [&](const Asm& a) {
            got.insert(encode(a));
            ++produced;
        });
        EXPECT_EQ(produced, expected.size()) << n;
        EXPECT_EQ(got, expected) << n;
    }
    // n = 3: the six permutations plus the diamond.
    EXPECT_EQ(oracle::brute_force_asms(3).size(), 7u);
}

TEST(Enumerate, CountsAndUniqueness) {
    const std::size_t expected[] = {1, 2, 7, 42, 429, 7436};
    for (std::size_t n = 1; n <= 6; ++n) {
        std::set<std::string> seen;
        std::size_t produced = 0;
        for_each_asm(n, [&](const Asm& a) {
            seen.insert(encode(a));
            ++produced;
        });
        EXPECT_EQ(produced, expected[n - 1]);
        EXPECT_EQ(seen.size(), produced);
        EXPECT_EQ(BigInt(produced), count_asm(static_cast<unsigned>(n)));
    }
}

TEST(Enumerate, LexicographicTriangleOrder) {
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<std::vector<std::vector<int>>> order;
        AsmEnumerator e(n);
        while (e.next()) {
            order.push_back(e.triangle().rows);
        }
        EXPECT_TRUE(std::is_sorted(order.begin(), order.end()));
        EXPECT_EQ(std::adjacent_find(order.begin(), order.end()), order.end());
    }
}

TEST(Enumerate, ShardsPartitionTheEnsemble) {
    const std::size_t n = 5;
    std::multiset<std::string> shards;
    for (int top = 1; top <= static_cast<int>(n); ++top) {
        EnumerationOptions opts;
        opts.top_value = top;
        for_each_asm(n, [&](const Asm& a) { shards.insert(encode(a)); }, opts);
    }
    std::multiset<std::string> full;
    for_each_asm(n, [&](const Asm& a) { full.insert(encode(a)); });
    EXPECT_EQ(shards, full);
}

TEST(Enumerate, CapAndArguments) {
    EXPECT_THROW(AsmEnumerator(9), EnumerationCapError);
    EXPECT_THROW(AsmEnumerator(0), std::invalid_argument);
    EnumerationOptions small;
    small.cap = 3;
    EXPECT_THROW(enumerate(4, small), EnumerationCapError);
    EXPECT_EQ(enumerate(3, small).size(), 7u);
    try {
        AsmEnumerator(9);
    } catch (const EnumerationCapError& e) {
        EXPECT_EQ(e.n(), 9u);
        EXPECT_EQ(e.cap(), default_enumeration_cap);
    }
    EnumerationOptions bad;
    bad.top_value = 7;
    EXPECT_THROW(AsmEnumerator(3, bad), std::invalid_argument);
}

TEST(Count, ProductFormula) {
    EXPECT_EQ(count_asm(1), 1);
    EXPECT_EQ(count_asm(3), 7);
    EXPECT_EQ(count_asm(7), 218348);
    EXPECT_EQ(count_asm(8), 10850216);
    EXPECT_EQ(count_asm(10), BigInt("129534272700"));
    EXPECT_EQ(count_asm(12), BigInt("12611311859677500"));
    EXPECT_THROW(count_asm(0), std::invalid_argument);
}

TEST(Observable, Examples) {
    const Asm d = make(diamond_rows);
    EXPECT_EQ(observable(d, 0).value, 3);
    EXPECT_EQ(observable(d, 1).value, 0);
    EXPECT_EQ(observable(d, 2).value, 4);
    EXPECT_EQ(observable(d, 2).k, 2u);

    // A_{i, sigma(i)} = 1 with sigma = (2,3,1).
    const Asm p = make({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    EXPECT_EQ(observable(p, 3).value, 6);
    EXPECT_EQ(observable(transpose(p), 3).value, -6);
    EXPECT_EQ(transpose(d), d);
}

TEST(Observable, AgreesWithOracleOnEnsemble) {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& m : oracle::brute_force_asms(n)) {
            const Asm a = validate(to_rows(m));
            for (unsigned k = 0; k <= 8; ++k) {
                ASSERT_EQ(observable(a, k).value, oracle::observable(m, k));
            }
        }
    }
}

TEST(Observable, PointwiseLineSumIdentities) {
    for (std::size_t n = 1; n <= 6; ++n) {
        const ObservableKernel e0(n, 0);
        const ObservableKernel e1(n, 1);
        for_each_asm(n, [&](const Asm& a) {
            ASSERT_EQ(e0(a), BigInt(n));
            ASSERT_EQ(e1(a), 0);
        });
    }
}

TEST(Observable, TranspositionParityAndBound) {
    for (std::size_t n = 1; n <= 6; ++n) {
        for_each_asm(n, [&](const Asm& a) {
            const Asm t = transpose(a);
            for (unsigned k = 0; k <= 6; ++k) {
                const BigInt v = observable(a, k).value;
                const BigInt vt = observable(t, k).value;
                ASSERT_EQ(vt, k % 2 == 0 ? v : BigInt(-v));
                ASSERT_LE(boost::multiprecision::abs(v), observable_bound(n, k));
            }
        });
    }
}

TEST(Symmetry, ClosureOfEnumeratedSet) {
    for (std::size_t n = 1; n <= 6; ++n) {
        std::set<std::string> all;
        for_each_asm(n, [&](const Asm& a) { all.insert(encode(a)); });
        std::set<std::string> transposed;
        std::set<std::string> reversed;
        for_each_asm(n, [&](const Asm& a) {
            transposed.insert(encode(transpose(a)));
            reversed.insert(encode(reverse_rows(a)));
        });
        EXPECT_EQ(transposed, all) << n;
        EXPECT_EQ(reversed, all) << n;
    }
}

TEST(TextFormat, RoundTripAndErrors) {
    const Asm d = make(diamond_rows);
    EXPECT_EQ(to_text(d), "0 1 0\n1 -1 1\n0 1 0\n");
    EXPECT_EQ(parse_text(to_text(d)), d);

    std::stringstream stream;
    for (const auto& a : enumerate(4)) {
        write_text(stream, a);
        stream << '\n';
    }
    EXPECT_EQ(read_all_text(stream), enumerate(4));

    EXPECT_THROW(parse_text("1 0\n1 0\n"), AsmError);
    EXPECT_THROW(parse_text("1 x\n0 1\n"), AsmError);
    EXPECT_THROW(parse_text("1 0 0\n0 1 0\n"), AsmError);
    EXPECT_THROW(parse_text("\n\n"), AsmError);
}
