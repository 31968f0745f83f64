#include <gtest/gtest.h>

#include <set>

#include "gcs/orbits.hpp"

using namespace gcs;

namespace {

FilledDiagram plus(std::vector<FilledRow> rows, int k) { return canonicalize(std::move(rows), k, Sign::Plus); }
FilledDiagram minus(std::vector<FilledRow> rows, int k) { return canonicalize(std::move(rows), k, Sign::Minus); }

GradingSpec ai(std::vector<int> d) {
    const int m = static_cast<int>(d.size());
    return GradingSpec::make(GradingCase::AI, m, DimensionVector(std::move(d)));
}
GradingSpec aii(std::vector<int> d) {
    const int m = static_cast<int>(d.size());
    return GradingSpec::make(GradingCase::AII, m, DimensionVector(std::move(d)));
}

// Every valid type II grading with 0 < |d| <= 6 for the moduli under test.
std::vector<GradingSpec> small_type_two() {
    std::vector<GradingSpec> out;
    const std::pair<GradingCase, int> cases[] = {{GradingCase::AII, 3}, {GradingCase::AII, 5}, {GradingCase::CII, 2},
                                                 {GradingCase::CII, 4}, {GradingCase::DII, 2}, {GradingCase::DII, 4}};
    for (const auto& [kind, m] : cases)
        for (int N = 0; N <= 6; ++N)
            for (auto& g : gradings_of_size(kind, m, N)) out.push_back(g);
    return out;
}

} // namespace

TEST(GradingSpec, Validation) {
    EXPECT_NO_THROW(aii({1, 0, 1}));
    EXPECT_THROW(aii({1, 1, 1}), InvalidGrading);
    EXPECT_THROW(aii({1, 2, 0}), InvalidGrading);
    EXPECT_THROW(GradingSpec::make(GradingCase::AII, 2, DimensionVector({1, 1})), InvalidGrading);
    EXPECT_NO_THROW(GradingSpec::make(GradingCase::CII, 4, DimensionVector({1, 2, 1, 2})));
    EXPECT_THROW(GradingSpec::make(GradingCase::CII, 4, DimensionVector({1, 1, 1, 1})), InvalidGrading);
    EXPECT_NO_THROW(GradingSpec::make(GradingCase::DII, 4, DimensionVector({1, 2, 2, 1})));
    EXPECT_THROW(GradingSpec::make(GradingCase::DII, 4, DimensionVector({1, 2, 1, 2})), InvalidGrading);
    EXPECT_THROW(GradingSpec::make(GradingCase::DII, 3, DimensionVector({1, 2, 1})), InvalidGrading);
    EXPECT_THROW(GradingSpec::make(GradingCase::AI, 3, DimensionVector({1, 2})), InvalidGrading);
    EXPECT_THROW(GradingSpec::make(GradingCase::AI, 2, DimensionVector({1, -1})), InvalidGrading);
    EXPECT_FALSE(GradingSpec::try_make(GradingCase::AII, 3, DimensionVector({1, 1, 1})).has_value());
}

TEST(GradingSpec, GradingsOfSizeAreValidAndSorted) {
    const auto gs = gradings_of_size(GradingCase::AII, 3, 4);
    std::vector<std::vector<int>> dims;
    for (const auto& g : gs) dims.push_back(g.dims().entries());
    EXPECT_EQ(dims, (std::vector<std::vector<int>>{{0, 4, 0}, {1, 2, 1}, {2, 0, 2}}));
    EXPECT_EQ(gradings_of_size(GradingCase::AI, 2, 3).size(), 4u);
}

TEST(Duality, FlipsConvention) {
    const auto d = duality(minus({{2, 1}}, 2));
    EXPECT_EQ(d, plus({{2, 2}}, 2));
    for (int k = 1; k <= 4; ++k)
        for (Sign s : {Sign::Plus, Sign::Minus})
            for (const auto& lam : enumerate_by_size(k, s, 5)) {
                const auto dual = duality(lam);
                EXPECT_EQ(duality(dual), lam);
                EXPECT_EQ(dimension_vector(dual), dimension_vector(lam));
                EXPECT_EQ(dual.shape(), lam.shape());
                EXPECT_EQ(dual.sign(), opposite(lam.sign()));
            }
}

TEST(Admissible, Examples) {
    EXPECT_TRUE(admissible(plus({{1, 1}, {1, 3}}, 3), aii({1, 0, 1})));
    EXPECT_FALSE(admissible(plus({{2, 1}}, 3), aii({1, 0, 1})));
    for (const auto& lam : enumerate_by_size(3, Sign::Plus, 4)) EXPECT_TRUE(admissible(lam, ai(dimension_vector(lam).entries())));
    EXPECT_EQ(enumerate_orbits(aii({1, 0, 1}), Sign::Plus).size(), 1u);
    EXPECT_EQ(enumerate_orbits(aii({1, 0, 1}), Sign::Minus).size(), 1u);
}

// The (+) and (-) parametrizations describe the same number of orbits.
TEST(Admissible, BothConventionsHaveEqualCounts) {
    for (const auto& g : small_type_two()) {
        const auto p = enumerate_orbits(g, Sign::Plus);
        const auto m = enumerate_orbits(g, Sign::Minus);
        EXPECT_EQ(p.size(), m.size()) << to_string(g.kind()) << " " << to_string(g.dims());
        std::set<FilledDiagram> dual;
        for (const auto& lam : m) dual.insert(duality(lam));
        EXPECT_EQ(dual, std::set<FilledDiagram>(p.begin(), p.end()));
    }
}

TEST(ComponentGroup, Orders) {
    EXPECT_EQ(component_group_order(plus({{4, 1}, {2, 1}}, 2), ai({3, 3})), 2);
    EXPECT_EQ(component_group_order(plus({{3, 1}}, 2), ai({2, 1})), 3);
    EXPECT_EQ(component_group_order(plus({{1, 1}, {1, 3}}, 3), aii({1, 0, 1})), 1);
    EXPECT_EQ(component_group_order(plus({}, 2), ai({0, 0})), 0);
}

TEST(Distinguished, AIExamples) {
    EXPECT_TRUE(is_distinguished_AI(plus({{2, 1}}, 2), 1, 2));
    EXPECT_FALSE(is_distinguished_AI(plus({{1, 1}, {1, 2}}, 2), 1, 2));
    EXPECT_TRUE(is_distinguished_AI(plus({}, 2), 1, 2));
    EXPECT_TRUE(is_distinguished_AI(plus({}, 2), 5, 2));
    // a must divide d_lambda
    EXPECT_FALSE(is_distinguished_AI(plus({{3, 1}}, 2), 2, 2));
}

TEST(Distinguished, TypeIIExamples) {
    EXPECT_TRUE(is_distinguished_II(plus({{1, 1}, {1, 3}}, 3), aii({1, 0, 1})));
    const auto big = plus({{1, 1}, {1, 1}, {1, 2}, {1, 2}, {1, 3}, {1, 3}}, 3);
    EXPECT_FALSE(is_distinguished_II(big, aii({2, 2, 2})));
    EXPECT_TRUE(is_distinguished_II(plus({}, 3), aii({0, 0, 0})));
}

TEST(PeelAI, Examples) {
    const auto p = peel_AI(plus({{1, 1}, {1, 2}}, 2), 1, 2);
    EXPECT_EQ(to_string(p.tau), "[(1)]");
    EXPECT_TRUE(p.residual.empty());
    EXPECT_EQ(p.braid_rank, 1);

    const auto q = peel_AI(plus({{2, 1}}, 2), 1, 2);
    EXPECT_EQ(to_string(q.tau), "[()]");
    EXPECT_EQ(q.residual, plus({{2, 1}}, 2));

    const auto e = peel_AI(plus({}, 3), 2, 3);
    EXPECT_EQ(e.tau.arity(), 1);
    EXPECT_EQ(e.tau.size(), 0);
    EXPECT_TRUE(e.residual.empty());

    EXPECT_THROW(peel_AI(plus({{3, 1}}, 2), 2, 2), PreconditionError);
}

TEST(PeelAI, RoundTripAndDistinguishedResidual) {
    for (int m = 1; m <= 4; ++m)
        for (Sign s : {Sign::Plus, Sign::Minus})
            for (int N = 0; N <= 6; ++N)
                for (const auto& lam : enumerate_by_size(m, s, N))
                    for (int a = 1; a <= std::max(N, 1); ++a) {
                        if (!divides(a, lam.part_gcd())) continue;
                        const auto p = peel_AI(lam, a, m);
                        EXPECT_EQ(reassemble_AI(p.tau, p.residual, a, m), lam);
                        EXPECT_TRUE(is_distinguished_AI(p.residual, a, m)) << to_string(lam) << " a=" << a;
                        EXPECT_EQ(p.tau.arity(), std::gcd(a, m));
                        EXPECT_EQ(p.residual.size() + a * (m / std::gcd(a, m)) * p.braid_rank, lam.size());
                    }
}

TEST(PeelII, Examples) {
    const auto g = aii({2, 2, 2});
    const auto big = plus({{1, 1}, {1, 1}, {1, 2}, {1, 2}, {1, 3}, {1, 3}}, 3);
    const auto p = peel_II(big, g);
    EXPECT_EQ(to_string(p.nu), "(1)");
    EXPECT_TRUE(p.residual.empty());
    EXPECT_EQ(p.k, 1);

    const auto lam = plus({{1, 1}, {1, 3}}, 3);
    const auto q = peel_II(lam, aii({1, 0, 1}));
    EXPECT_TRUE(q.nu.empty());
    EXPECT_EQ(q.residual, lam);
    EXPECT_EQ(q.k, 0);

    const auto e = peel_II(plus({}, 3), aii({0, 0, 0}));
    EXPECT_EQ(e.k, 0);
}

TEST(PeelII, RoundTripAndDistinguishedResidual) {
    for (const auto& g : small_type_two())
        for (Sign s : {Sign::Plus, Sign::Minus})
            for (const auto& lam : enumerate_orbits(g, s)) {
                const auto p = peel_II(lam, g);
                EXPECT_EQ(reassemble_II(p.nu, p.residual), lam);
                const auto sub = GradingSpec::make(g.kind(), g.modulus(), dimension_vector(p.residual));
                EXPECT_TRUE(admissible(p.residual, sub));
                EXPECT_TRUE(is_distinguished_II(p.residual, sub));
            }
}

TEST(DCheck, Stratum) {
    EXPECT_EQ(d_check_stratum(1, minus({}, 2), 2), 2);
    EXPECT_EQ(d_check_stratum(1, minus({{2, 1}}, 2), 2), 2);
    EXPECT_EQ(d_check_stratum(3, minus({}, 3), 3), 3);
    EXPECT_EQ(d_check_stratum(2, minus({}, 4), 4), 4);
}

TEST(DCheck, Dual) {
    EXPECT_EQ(d_check_dual(plus({{1, 1}, {1, 2}}, 2), 2), 2);
    EXPECT_EQ(d_check_dual(plus({{2, 1}, {2, 2}, {1, 1}}, 2), 2), 1);
    EXPECT_EQ(d_check_dual(plus({{1, 1}, {1, 2}, {1, 3}}, 3), 3), 3);
    EXPECT_THROW(d_check_dual(plus({{2, 1}}, 2), 2), NotApplicable);
}

TEST(StrataAI, Examples) {
    const auto g = ai({1, 1});
    const auto s1 = enumerate_strata_AI(g, 1);
    ASSERT_EQ(s1.size(), 3u);
    std::set<std::pair<int, std::string>> got;
    for (const auto& s : s1) got.insert({s.l, to_string(s.mu)});
    EXPECT_EQ(got, (std::set<std::pair<int, std::string>>{{0, "2_1"}, {0, "2_2"}, {1, "()"}}));
    for (const auto& s : s1) EXPECT_EQ(s.d_check, 2);

    const auto s2 = enumerate_strata_AI(g, 2);
    ASSERT_EQ(s2.size(), 1u);
    EXPECT_EQ(s2[0].l, 1);
    EXPECT_TRUE(s2[0].mu.empty());

    EXPECT_TRUE(enumerate_strata_AI(g, 3).empty());
    // stable case needs a uniform dimension vector
    EXPECT_TRUE(enumerate_strata_AI(ai({2, 0}), 2).empty());
}

TEST(StrataAI, BraidRank) {
    const auto g = ai({1, 1});
    EXPECT_EQ(braid_rank_AI(1, minus({{2, 1}}, 2), g), 0);
    EXPECT_EQ(braid_rank_AI(1, minus({}, 2), g), 1);
    EXPECT_EQ(braid_rank_AI(2, minus({}, 2), g), 1);
    EXPECT_THROW(braid_rank_AI(1, minus({{1, 1}}, 2), g), InconsistentStratum);
}

TEST(StrataII, Examples) {
    const auto z = enumerate_strata_II(aii({0, 0, 0}));
    ASSERT_EQ(z.size(), 1u);
    EXPECT_EQ(z[0].k, 0);

    const auto one = enumerate_strata_II(aii({1, 0, 1}));
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].k, 0);
    EXPECT_EQ(as_sign(one[0].mu, Sign::Plus), plus({{1, 1}, {1, 3}}, 3));

    const auto g = aii({2, 2, 2});
    const auto strata = enumerate_strata_II(g);
    std::size_t k0 = 0, k1 = 0;
    for (const auto& s : strata) {
        if (s.k == 0) {
            ++k0;
            EXPECT_TRUE(is_distinguished_II(s.mu, g));
            EXPECT_EQ(s.mu.size(), 6);
        }
        if (s.k == 1) {
            ++k1;
            EXPECT_TRUE(s.mu.empty());
        }
    }
    std::size_t dist = 0;
    for (const auto& lam : enumerate_orbits(g, Sign::Minus)) dist += is_distinguished_II(lam, g);
    EXPECT_EQ(k0, dist);
    EXPECT_EQ(k1, 1u);
}

TEST(StrataII, FullSupport) {
    const auto f = full_support_stratum_II(aii({2, 2, 2}));
    EXPECT_EQ(f.k, 1);
    EXPECT_TRUE(f.mu.empty());
    const auto h = full_support_stratum_II(aii({1, 0, 1}));
    EXPECT_EQ(h.k, 0);
    EXPECT_EQ(as_sign(h.mu, Sign::Plus), plus({{1, 1}, {1, 3}}, 3));
    EXPECT_EQ(full_support_stratum_II(aii({0, 0, 0})).k, 0);
}
