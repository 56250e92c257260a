#include <gtest/gtest.h>

#include <cliquanta/bounds.hpp>
#include <cliquanta/families.hpp>

#include "oracles.hpp"

using namespace cliquanta;

TEST(KruskalKatona, Examples) {
    EXPECT_EQ(kruskal_katona_bound(5, 7, 3), 4);
    for (unsigned n = 1; n <= 7; ++n)
        for (unsigned t = 0; t <= n; ++t) EXPECT_EQ(kruskal_katona_bound(n, n * (n - 1) / 2, t), binomial(n, t));
    EXPECT_EQ(kruskal_katona_bound(6, 0, 2), 0);
    EXPECT_THROW(kruskal_katona_bound(4, 7, 2), parameter_error);
}

TEST(KruskalKatona, HoldsOnRandomGraphs) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto g = random_graph(8, 0.5, seed);
        auto prof = oracle::profile(g);
        for (std::size_t t = 0; t < prof.size(); ++t)
            ASSERT_LE(big_int(prof[t]), kruskal_katona_bound(8, g.size(), t));
    }
}

TEST(WeightCap, Values) {
    EXPECT_EQ(vertex_weight_cap(1), rational(3, 2));
    EXPECT_EQ(vertex_weight_cap(2), rational(7, 3));
    EXPECT_EQ(vertex_weight_cap(4), rational(31, 5));
    for (std::size_t r = 1; r <= 9; ++r) {
        auto w = oracle::weights(complete(r + 1));
        for (const auto& x : w) EXPECT_EQ(x, vertex_weight_cap(r));
    }
    EXPECT_THROW(vertex_weight_cap(0), parameter_error);
}

TEST(CutlerRadcliffe, Values) {
    EXPECT_EQ(cutler_radcliffe_bound(7, 2), 16);
    EXPECT_EQ(cutler_radcliffe_bound(7, 2), oracle::total(extremal_graph(7, 2).g));
    for (std::size_t r = 1; r <= 10; ++r) EXPECT_EQ(cutler_radcliffe_bound(r + 1, r), pow2(static_cast<unsigned>(r + 1)));
    EXPECT_EQ(cutler_radcliffe_bound(10, 4), 63);
    EXPECT_EQ(cutler_radcliffe_bound(10, 4), oracle::total(extremal_graph(10, 4).g));
}

TEST(CutlerRadcliffe, HoldsOnRandomBoundedDegreeGraphs) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t r = 1 + seed % 4;
        auto g = random_bounded_degree(8, r, seed);
        ASSERT_LE(big_int(oracle::total(g)), cutler_radcliffe_bound(8, r));
    }
}

TEST(Independence, Counts) {
    EXPECT_EQ(independence_count(complete_bipartite(3, 3)), 15);
    for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(independence_count(complete(n)), n + 1);
    EXPECT_EQ(independence_count(cycle(4)), 7);
}

TEST(KahnZhao, Reports) {
    auto c4 = kahn_zhao_check(cycle(4));
    EXPECT_EQ(c4.observed, 2401);
    EXPECT_EQ(c4.bound, 2401);
    EXPECT_TRUE(c4.tight());
    EXPECT_EQ(c4.slack(), 0);

    auto c5 = kahn_zhao_check(cycle(5));
    EXPECT_EQ(c5.observed, 14641);
    EXPECT_EQ(c5.bound, 16807);
    EXPECT_TRUE(c5.holds());
    EXPECT_FALSE(c5.tight());
    EXPECT_EQ(c5.slack(), 2166);

    for (std::size_t d = 1; d <= 8; ++d) EXPECT_TRUE(kahn_zhao_check(complete_bipartite(d, d)).tight()) << d;
}

TEST(KahnZhao, RejectsIrregularAndEdgeless) {
    try {
        kahn_zhao_check(path(3));
        FAIL();
    } catch (const parameter_error& e) {
        std::string what = e.what();
        EXPECT_NE(what.find("vertex 0"), std::string::npos);
        EXPECT_NE(what.find("vertex 1"), std::string::npos);
    }
    EXPECT_THROW(kahn_zhao_check(graph(4)), parameter_error);
    EXPECT_THROW(kahn_zhao_check(graph()), parameter_error);
}

TEST(HFunction, Values) {
    EXPECT_EQ(h_function({3, 2, 1}), 0);
    EXPECT_GT(h_function({12, 12, 0}), 0);
    EXPECT_GT(h_function({3, 3, 0}), 0);
    // hand evaluation at (r,s,p) = (3,0,0): 16 + 1 - 1 - 4 * (7/3 + 3/2 - 1)
    EXPECT_EQ(h_function({3, 0, 0}), rational(16) - 4 * (rational(7, 3) + rational(3, 2) - 1));
    EXPECT_THROW(h_function({2, 0, 0}), parameter_error);
    EXPECT_THROW(h_function({4, 5, 0}), parameter_error);
}

TEST(HFunction, GluedCliqueWeightIsMaxWeightOfColex) {
    for (std::size_t r = 2; r <= 9; ++r)
        for (std::size_t p = 0; p + 1 < r; ++p) {
            auto w = oracle::weights(colex_graph(r + 1, r * (r - 1) / 2 + p + 1));
            EXPECT_EQ(*std::max_element(w.begin(), w.end()), glued_clique_weight(r, p)) << r << " " << p;
        }
}

TEST(Region, Membership) {
    EXPECT_TRUE(lemma31_region(12, 5, 8));
    EXPECT_FALSE(lemma31_region(3, 2, 1));
    EXPECT_FALSE(lemma31_region(7, 0, 4));
    EXPECT_TRUE(lemma31_region(7, 0, 3));
    EXPECT_TRUE(lemma31_region(3, 3, 1));
    EXPECT_FALSE(lemma31_region(3, 0, 2));
    EXPECT_TRUE(lemma31_region(4, 4, 1));
    EXPECT_FALSE(lemma31_region(4, 4, 2));
    EXPECT_EQ(lemma31_p_max(13), 8u);
    EXPECT_THROW(lemma31_region(2, 0, 0), parameter_error);
}

TEST(Thresholds, PiecewiseValues) {
    auto t3 = assertion_thresholds(3);
    EXPECT_EQ(t3.weight, rational(19, 6));
    EXPECT_EQ(t3.p_cap, 0u);
    EXPECT_EQ(assertion_thresholds(5).p_cap, 1u);
    EXPECT_EQ(assertion_thresholds(8).p_cap, 2u);
    EXPECT_EQ(assertion_thresholds(15).p_cap, 4u);
    // 7 <= r <= 11 uses p = r - 4
    auto t9 = assertion_thresholds(9);
    EXPECT_EQ(t9.weight, rational(511, 9) + rational(127, 7) - rational(63, 6));
    // 4 <= r <= 6 uses p = r - 3
    auto t5 = assertion_thresholds(5);
    EXPECT_EQ(t5.weight, rational(31, 5) + rational(15, 4) - rational(7, 3));
    // r >= 12 with 2r/3 integral: r = 12, p = 8
    auto t12 = assertion_thresholds(12);
    EXPECT_EQ(t12.weight, rational(4095, 12) + rational(1023, 10) - rational(511, 9));
}

TEST(ClosedForms, CompleteMinusMatching) {
    for (unsigned r = 0; r <= 12; ++r)
        for (unsigned t = 0; 2 * t <= r; ++t) {
            auto k = total_cliques(complete_minus_matching(r, t));
            EXPECT_EQ(k, pow_big(3, t) * pow2(r - 2 * t));
            if (t >= 1) {
                EXPECT_EQ(k, 2 * total_cliques(complete_minus_matching(r - 1, t - 1)) -
                                 total_cliques(complete_minus_matching(r - 2, t - 1)));
            }
        }
}
