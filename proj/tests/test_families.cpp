#include <gtest/gtest.h>

#include <cliquanta/families.hpp>

#include "oracles.hpp"

using namespace cliquanta;

TEST(Families, BasicShapes) {
    EXPECT_EQ(complete(4).size(), 6u);
    auto c5 = cycle(5);
    EXPECT_EQ(c5.order(), 5u);
    EXPECT_EQ(c5.size(), 5u);
    EXPECT_TRUE(is_regular(c5));
    EXPECT_EQ(c5.degree(0), 2u);
    auto k33 = complete_bipartite(3, 3);
    EXPECT_EQ(k33.size(), 9u);
    EXPECT_EQ(min_degree(k33), 3u);
    EXPECT_EQ(max_degree(k33), 3u);
    EXPECT_THROW(cycle(2), graph_error);
}

TEST(Families, ExtremalGraphs) {
    auto x = extremal_graph(10, 4);
    EXPECT_EQ(x.params.a, 2u);
    EXPECT_EQ(x.params.b, 0u);
    EXPECT_EQ(x.g, disjoint_union(complete(5), complete(5)));

    auto y = extremal_graph(7, 2);
    EXPECT_EQ(y.params.a, 2u);
    EXPECT_EQ(y.params.b, 1u);
    EXPECT_EQ(y.g, disjoint_union(disjoint_union(complete(3), complete(3)), complete(1)));

    auto z = extremal_graph(3, 5);
    EXPECT_EQ(z.params.a, 0u);
    EXPECT_EQ(z.params.b, 3u);
    EXPECT_EQ(z.g, complete(3));
    EXPECT_THROW(extremal_graph(3, 0), graph_error);
}

TEST(Families, ColexOrder) {
    // 1-based listing {1,2},{1,3},{2,3},{1,4},{2,4},{3,4},{1,5},{2,5},{3,5},{4,5}
    const std::vector<edge> expected{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3},
                                     {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}};
    for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_EQ(colex_edge(k), expected[k]) << k;
}

TEST(Families, ColexOrderMatchesOracleSort) {
    // colex: compare by larger element, then smaller
    std::vector<edge> pairs;
    for (vertex j = 1; j < 12; ++j)
        for (vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
    std::sort(pairs.begin(), pairs.end(),
              [](const edge& a, const edge& b) { return a.v != b.v ? a.v < b.v : a.u < b.u; });
    for (std::size_t k = 0; k < pairs.size(); ++k) EXPECT_EQ(colex_edge(k), pairs[k]);
}

TEST(Families, ColexGraphs) {
    auto c = colex_graph(5, 7);
    std::vector<vertex> k4{0, 1, 2, 3};
    EXPECT_EQ(induced_subgraph(c, k4), complete(4));
    EXPECT_EQ(c.degree(4), 1u);
    EXPECT_TRUE(c.adjacent(4, 0));
    colex_spec spec{5, 7};
    EXPECT_EQ(spec.r(), 4u);
    EXPECT_EQ(spec.s(), 1u);
    EXPECT_EQ(colex_graph(6, 0).size(), 0u);
    EXPECT_EQ(colex_graph(6, 15), complete(6));
    EXPECT_THROW(colex_graph(4, 7), graph_error);
}

TEST(Families, CompleteMinusMatching) {
    auto a = complete_minus_matching(4, 1);
    EXPECT_EQ(a.size(), 5u);
    EXPECT_FALSE(a.adjacent(0, 1));
    auto b = complete_minus_matching(6, 3);
    EXPECT_EQ(b.size(), 12u);
    EXPECT_TRUE(is_regular(b));
    EXPECT_EQ(b.degree(0), 4u);
    EXPECT_EQ(complete_minus_matching(5, 0), complete(5));
    EXPECT_THROW(complete_minus_matching(3, 2), graph_error);
}

TEST(Families, FigureOne) {
    auto g = figure1_graph();
    std::vector<vertex> a{0, 1, 2, 3};
    EXPECT_EQ(induced_subgraph(g, a), complete(4));
}

TEST(Families, RandomBoundedDegreeRespectsBound) {
    for (std::size_t r : {1u, 2u, 5u}) {
        auto g = random_bounded_degree(500, r, r);
        EXPECT_LE(max_degree(g), r);
        EXPECT_EQ(g, random_bounded_degree(500, r, r));
    }
}

TEST(Gadgets, ValidLemmaNineGadget) {
    // P = {u1,u2}, Q = {w1,w2}; cross edges u1w1, u2w2
    gamma_spec s{1, 2, 0, {{0, 0}, {1, 1}}, 0};
    EXPECT_EQ(gamma_violation(s), "");
    auto gad = gamma_gadget(s);
    EXPECT_EQ(gad.g.order(), 4u);
    EXPECT_EQ(gad.g.size(), 4u);
    EXPECT_EQ(gad.marked.size(), 2u);
}

TEST(Gadgets, RejectsDegreeCapViolation) {
    gamma_spec s{2, 1, 0, {{0, 0}, {1, 0}, {2, 0}, {3, 0}}, 0};
    auto why = gamma_violation(s);
    EXPECT_NE(why.find("d_P(w) <= p"), std::string::npos) << why;
    EXPECT_THROW(gamma_gadget(s), gadget_error);
}

TEST(Gadgets, ValidLemmaTenGadget) {
    // p=2, t=1: P = K_4 - u1u2; w adjacent to u1,u2,u3; one more cross edge
    gamma_spec s{2, 2, 1, {{0, 0}, {1, 0}, {2, 0}, {3, 1}}, 0};
    EXPECT_EQ(gamma_violation(s), "");
    auto gad = gamma_gadget(s);
    EXPECT_FALSE(gad.g.adjacent(0, 1));
    EXPECT_TRUE(gad.g.adjacent(2, 3));
    EXPECT_EQ(gad.marked, (std::vector<edge>{{0, 4}, {1, 4}}));
    // w must see exactly u1..u_{p+t}
    gamma_spec bad{2, 2, 1, {{0, 0}, {1, 0}, {3, 0}, {2, 1}}, 0};
    EXPECT_NE(gamma_violation(bad), "");
}

TEST(Gadgets, PlacementSweepOnlyEmitsValidSpecs) {
    std::size_t seen = 0;
    for_each_gamma_placement(2, 3, 0, [&](const gamma_spec& s) {
        ++seen;
        EXPECT_EQ(gamma_violation(s), "");
    });
    // oracle: all 4-subsets of the 4x3 cross grid passing the degree caps
    std::size_t expected = 0;
    for (unsigned mask = 0; mask < (1u << 12); ++mask) {
        if (__builtin_popcount(mask) != 4) continue;
        std::vector<int> dp(3, 0), dq(4, 0);
        for (unsigned k = 0; k < 12; ++k)
            if ((mask >> k) & 1u) {
                ++dq[k / 3];
                ++dp[k % 3];
            }
        bool ok = std::all_of(dp.begin(), dp.end(), [](int x) { return x <= 2; }) &&
                  std::all_of(dq.begin(), dq.end(), [](int x) { return x <= 2; });
        expected += ok;
    }
    EXPECT_EQ(seen, expected);
}
