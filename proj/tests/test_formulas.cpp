#include "asmstat/exact/rational.hpp"
#include "asmstat/formulas/asymptotic.hpp"
#include "asmstat/formulas/discrepancy.hpp"
#include "asmstat/formulas/egf.hpp"
#include "asmstat/formulas/moments.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace asmstat::formulas;
using asmstat::exact::BigInt;
using asmstat::exact::make_rational;
using asmstat::exact::parse_rational;
using asmstat::exact::Polynomial;
using asmstat::exact::Rational;

namespace {

Polynomial P(std::initializer_list<const char*> coeffs) {
    std::vector<Rational> out;
    for (const char* c : coeffs) {
        out.push_back(parse_rational(c));
    }
    return Polynomial(std::move(out));
}

// (1/n) sum_{i,j} (i-j)^k, literally.
Rational literal_mean(unsigned k, unsigned long n) {
    BigInt acc = 0;
    for (unsigned long i = 1; i <= n; ++i) {
        for (unsigned long j = 1; j <= n; ++j) {
            acc += asmstat::exact::ipow(BigInt(static_cast<long long>(i) - static_cast<long long>(j)), k);
        }
    }
    return make_rational(acc, BigInt(n));
}

bool has_flag(const std::vector<std::string>& flags, const char* f) {
    return std::find(flags.begin(), flags.end(), f) != flags.end();
}

}  // namespace

TEST(Moments, Examples) {
    EXPECT_EQ(expected_moment_uniform(2, 3), Rational(4));
    EXPECT_EQ(expected_moment_uniform(4, 3), Rational(12));
    EXPECT_EQ(expected_moment_uniform(2, 2), Rational(1));
    EXPECT_EQ(expected_moment_uniform(0, 5), Rational(5));
    EXPECT_EQ(expected_moment_uniform(3, 4), Rational(0));
    EXPECT_EQ(expected_moment_direct(2, 3), Rational(4));
    EXPECT_EQ(expected_moment_direct(4, 3), Rational(12));
    EXPECT_THROW(expected_moment_uniform(2, 0), std::invalid_argument);
    EXPECT_THROW(expected_moment_direct(2, 0), std::invalid_argument);
}

TEST(Moments, Polynomials) {
    EXPECT_EQ(expected_moment_polynomial(0), P({"0", "1"}));
    EXPECT_EQ(expected_moment_polynomial(1), Polynomial());
    EXPECT_EQ(expected_moment_polynomial(2), P({"0", "-1/6", "0", "1/6"}));
    EXPECT_EQ(expected_moment_polynomial(4), P({"0", "1/10", "0", "-1/6", "0", "1/15"}));
}

TEST(Moments, PrintedClosedForms) {
    EXPECT_EQ(printed_closed_form_value(2, 2), Rational(1));
    EXPECT_EQ(printed_closed_form_value(2, 3), make_rational(8, 3));
    EXPECT_EQ(printed_closed_form_value(4, 3), make_rational(32, 3));
    EXPECT_FALSE(printed_closed_form_value(3, 3));
    EXPECT_FALSE(printed_closed_form(6));
}

TEST(Moments, UniformEqualsDirectEqualsLiteral) {
    for (unsigned k = 0; k <= 10; ++k) {
        const Polynomial p = expected_moment_polynomial(k);
        for (unsigned long n = 1; n <= 50; ++n) {
            const Rational direct = expected_moment_direct(k, n);
            ASSERT_EQ(expected_moment_uniform(k, n), direct) << k << "," << n;
            ASSERT_EQ(p(Rational(n)), direct) << k << "," << n;
            if (n <= 20) {
                ASSERT_EQ(literal_mean(k, n), direct) << k << "," << n;
            }
        }
    }
}

TEST(Egf, Coefficients) {
    const auto e = egf_expansion(4);
    ASSERT_EQ(e.size(), 5u);
    EXPECT_EQ(e[0], P({"0", "1"}));
    EXPECT_TRUE(e[1].is_zero());
    EXPECT_EQ(e[2], P({"0", "-1/6", "0", "1/6"}));
    EXPECT_TRUE(e[3].is_zero());
    EXPECT_EQ(e[4], P({"0", "1/10", "0", "-1/6", "0", "1/15"}));
}

TEST(Egf, EqualsMomentPolynomial) {
    const auto e = egf_expansion(12);
    ASSERT_EQ(e.size(), 13u);
    for (unsigned k = 0; k <= 12; ++k) {
        EXPECT_EQ(e[k], expected_moment_polynomial(k)) << k;
    }
}

TEST(Asymptotic, LeadingTerm) {
    EXPECT_EQ(asymptotic_leading(2), make_rational(1, 6));
    EXPECT_EQ(asymptotic_leading(4), make_rational(1, 15));
    EXPECT_EQ(asymptotic_leading(0), Rational(1));
    EXPECT_THROW(asymptotic_leading(3), std::domain_error);
    for (unsigned k = 0; k <= 12; k += 2) {
        const Polynomial p = expected_moment_polynomial(k);
        EXPECT_EQ(p.degree(), static_cast<int>(k) + 1);
        EXPECT_EQ(p.leading_coefficient(), make_rational(2, BigInt(k + 1) * (k + 2))) << k;
        EXPECT_EQ(p.leading_coefficient(), asymptotic_leading(k));
    }
}

TEST(Asymptotic, Parity) {
    for (unsigned k = 0; k <= 12; ++k) {
        const Polynomial p = expected_moment_polynomial(k);
        if (k % 2 == 1) {
            EXPECT_TRUE(p.is_zero()) << k;
        } else {
            EXPECT_TRUE(p.has_parity(1)) << k;
            for (int d = 0; d <= p.degree(); d += 2) {
                EXPECT_EQ(p.coefficient(d), Rational(0)) << k << " degree " << d;
            }
        }
    }
}

TEST(Asymptotic, PrintedCoefficients) {
    EXPECT_EQ(asymptotic_coefficient_paper(2, 1), Rational(0));
    EXPECT_EQ(asymptotic_coefficient_paper(1, 1), make_rational(-1, 6));
    EXPECT_EQ(asymptotic_coefficient_paper(0, 1), Rational(0));
    EXPECT_THROW(asymptotic_coefficient_paper(2, 0), std::invalid_argument);
}

TEST(Asymptotic, ExactCoefficients) {
    EXPECT_EQ(asymptotic_coefficient_exact(2, 1), make_rational(-1, 6));
    EXPECT_EQ(asymptotic_coefficient_exact(4, 1), make_rational(-1, 6));
    EXPECT_EQ(asymptotic_coefficient_exact(4, 2), make_rational(1, 10));
    EXPECT_EQ(asymptotic_coefficient_exact(4, 3), Rational(0));
    EXPECT_THROW(asymptotic_coefficient_exact(3, 1), std::domain_error);
    EXPECT_THROW(asymptotic_coefficient_exact(4, 0), std::invalid_argument);
    EXPECT_THROW(asymptotic_coefficient_exact(4, 4), std::invalid_argument);
}

TEST(Asymptotic, ExactExpansionRebuildsPolynomial) {
    for (unsigned k = 0; k <= 12; k += 2) {
        Polynomial rebuilt;
        for (const auto& term : asymptotic_expansion_exact(k)) {
            if (term.exponent >= 0) {
                rebuilt = rebuilt + Polynomial::monomial(term.coefficient, static_cast<std::size_t>(term.exponent));
            }
        }
        EXPECT_EQ(rebuilt, expected_moment_polynomial(k)) << k;
    }
}

TEST(Report, RowsAndFlags) {
    const auto report = discrepancy_report(4, 4);
    EXPECT_TRUE(report.internally_consistent());
    EXPECT_EQ(report.moments.size(), 5u * 4u);

    const MomentRow* agree = report.find_moment(2, 2);
    ASSERT_NE(agree, nullptr);
    EXPECT_EQ(agree->uniform, Rational(1));
    EXPECT_EQ(*agree->printed_claim, Rational(1));
    EXPECT_EQ(*agree->ensemble, Rational(1));
    EXPECT_TRUE(agree->flags.empty());

    const MomentRow* k2 = report.find_moment(2, 3);
    ASSERT_NE(k2, nullptr);
    EXPECT_EQ(k2->uniform, Rational(4));
    EXPECT_EQ(*k2->printed_claim, make_rational(8, 3));
    EXPECT_EQ(*k2->ensemble, Rational(4));
    EXPECT_TRUE(has_flag(k2->flags, flag_claim_mismatch));
    EXPECT_FALSE(has_flag(k2->flags, flag_ensemble_differs));

    const MomentRow* k4 = report.find_moment(4, 3);
    ASSERT_NE(k4, nullptr);
    EXPECT_EQ(k4->direct, Rational(12));
    EXPECT_EQ(*k4->printed_claim, make_rational(32, 3));
    EXPECT_EQ(*k4->ensemble, make_rational(76, 7));
    EXPECT_TRUE(has_flag(k4->flags, flag_claim_mismatch));
    EXPECT_TRUE(has_flag(k4->flags, flag_ensemble_differs));

    const CoefficientRow* c = report.find_coefficient(2, 1);
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->exponent, 1);
    EXPECT_EQ(c->claimed, Rational(0));
    EXPECT_EQ(c->exact, make_rational(-1, 6));
    EXPECT_TRUE(has_flag(c->flags, flag_claim_mismatch));

    for (const auto& check : report.checks) {
        EXPECT_TRUE(check.passed) << check.name << ": " << check.detail;
    }
}

TEST(Report, EnsembleColumnRespectsCap) {
    asmstat::stats::EnsembleOptions opts;
    opts.enumeration.cap = 3;
    const auto report = discrepancy_report(2, 5, opts);
    EXPECT_EQ(report.cap, 3u);
    EXPECT_TRUE(report.find_moment(2, 3)->ensemble);
    EXPECT_FALSE(report.find_moment(2, 4)->ensemble);
    EXPECT_TRUE(report.internally_consistent());
}
