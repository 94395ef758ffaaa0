#include <gtest/gtest.h>

#include "slr/slr.hpp"

using namespace slr;

TEST(Polynomial, SmallShapes) {
    auto p2 = p_polynomial({2}, 2);
    EXPECT_EQ(p2.terms.size(), 3u);
    EXPECT_EQ(p2.terms.at({2, 0}), 1);
    EXPECT_EQ(p2.terms.at({1, 1}), 2);
    EXPECT_EQ(p2.terms.at({0, 2}), 1);
    auto p21 = p_polynomial({2, 1}, 2);
    EXPECT_EQ(p21.terms.size(), 2u);
    EXPECT_EQ(p21.terms.at({2, 1}), 1);
    EXPECT_EQ(p21.terms.at({1, 2}), 1);
    EXPECT_EQ(p_polynomial({1}, 1).terms.at({1}), 1);
    EXPECT_THROW(p_polynomial({2, 1}, 1), ValidationError);
}

TEST(Polynomial, SymmetricAndMonicOnLeadingTerm) {
    for (int s = 1; s <= 6; ++s)
        for (const auto& lambda : strict_partitions_of(s)) {
            auto p = p_polynomial(lambda, 3 > lambda.length() ? 3 : lambda.length());
            std::vector<int> lead = lambda.parts();
            lead.resize(p.n, 0);
            EXPECT_EQ(p.terms.rbegin()->first, lead);
            EXPECT_EQ(p.terms.rbegin()->second, 1);
            for (const auto& [e, c] : p.terms) {
                auto r = e;
                std::reverse(r.begin(), r.end());
                EXPECT_EQ(p.terms.at(r), c);
            }
        }
}

TEST(Monomial, Coefficients) {
    EXPECT_EQ(coeff_by_monomials({1}, {1}, {2}), 1);
    EXPECT_EQ(coeff_by_monomials({3, 1}, {}, {3, 1}), 1);
    EXPECT_EQ(coeff_by_monomials({2, 1}, {1}, {3, 1}), 1);
    EXPECT_EQ(coeff_by_monomials({3}, {1}, {3, 1}), 1);
    EXPECT_EQ(coeff_by_monomials({2}, {3}, {4, 1}), 2);
    EXPECT_EQ(coeff_by_monomials({1}, {1}, {3}), 0);
}

TEST(Monomial, MassConserved) {
    MonomialOracle o;
    for (int s = 2; s <= 7; ++s) {
        const int n = max_strict_length(s);
        for (int a = 1; a < s; ++a)
            for (const auto& lambda : strict_partitions_of(a))
                for (const auto& mu : strict_partitions_of(s - a)) {
                    if (lambda.length() > n || mu.length() > n) continue;
                    long long lhs = multiply(o.p(lambda, n), o.p(mu, n)).total(), rhs = 0;
                    for (const auto& [nu, b] : o.expand(lambda, mu)) rhs += b * o.p(nu, n).total();
                    EXPECT_EQ(lhs, rhs) << lambda << mu;
                }
    }
}

TEST(Monomial, FewerVariablesKeepShortTerms) {
    MonomialOracle o;
    auto full = o.expand({3, 1}, {2, 1});
    auto two = o.expand({3, 1}, {2, 1}, 2);
    for (const auto& [nu, b] : two) {
        EXPECT_LE(nu.length(), 2);
        EXPECT_EQ(full.at(nu), b);
    }
}

TEST(Monomial, MatchesPieri) {
    MonomialOracle o;
    for (int s = 1; s <= 8; ++s)
        for (const auto& nu : strict_partitions_of(s))
            for (int p = 1; p <= s; ++p)
                for (const auto& mu : strict_partitions_of(s - p))
                    EXPECT_EQ(o.coefficient(StrictPartition{p}, mu, nu), static_cast<long long>(pieri_coefficient(p, mu, nu)));
}

TEST(Rectification, Targets) {
    EXPECT_EQ(to_text(standard_by_rows({3, 1})), "1 2 3 / 4");
    EXPECT_EQ(to_text(standard_by_columns({3, 1})), "1 2 4 / 3");
    EXPECT_EQ(coeff_by_rectification({1}, {1}, {2}), 1);
    EXPECT_EQ(coeff_by_rectification({2, 1}, {1}, {3, 1}), coeff_by_monomials({2, 1}, {1}, {3, 1}));
}

TEST(Rectification, IndependentOfTarget) {
    for (int s = 2; s <= 8; ++s)
        for (const auto& nu : strict_partitions_of(s))
            for (int a = 1; a < s; ++a)
                for (const auto& lambda : strict_partitions_of(a)) {
                    if (count_standard_shifted(lambda) < 2) continue;
                    for (const auto& mu : strict_partitions_of(s - a))
                        EXPECT_EQ(rectification_count(lambda, mu, nu, standard_by_rows(lambda)).count,
                                  rectification_count(lambda, mu, nu, standard_by_columns(lambda)).count)
                            << lambda << mu << nu;
                }
}

TEST(Completion, Values) {
    for (int s = 1; s <= 6; ++s)
        for (const auto& nu : strict_partitions_of(s)) {
            std::vector<Tableau> w;
            EXPECT_EQ(coeff_by_completion(nu, {}, nu, &w), 1);
            ASSERT_EQ(w.size(), 1u);
            EXPECT_EQ(w[0], barely_yamanouchi_tableau(nu));
        }
    EXPECT_EQ(coeff_by_completion({1}, {1}, {2}), 1);
    EXPECT_EQ(coeff_by_completion({1}, {2}, {2}), 0);
}

TEST(Oracles, AgreeUpToSeven) {
    MonomialOracle o;
    for (int s = 0; s <= 7; ++s)
        for (const auto& nu : strict_partitions_of(s))
            for (int a = 0; a <= s; ++a)
                for (const auto& lambda : strict_partitions_of(a))
                    for (const auto& mu : strict_partitions_of(s - a)) {
                        long long rule = static_cast<long long>(coefficient_uncached(lambda, mu, nu));
                        EXPECT_EQ(o.coefficient(lambda, mu, nu), rule) << lambda << mu << nu;
                        EXPECT_EQ(coeff_by_rectification(lambda, mu, nu), rule) << lambda << mu << nu;
                        EXPECT_EQ(coeff_by_completion(lambda, mu, nu), rule) << lambda << mu << nu;
                    }
}
