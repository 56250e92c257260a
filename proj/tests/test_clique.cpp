#include <gtest/gtest.h>

#include <set>

#include <cliquanta/clique.hpp>
#include <cliquanta/families.hpp>
#include <cliquanta/io.hpp>

#include "oracles.hpp"

using namespace cliquanta;

namespace {

std::vector<big_int> big(std::initializer_list<int> xs) {
    std::vector<big_int> out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

std::vector<big_int> big(const std::vector<std::uint64_t>& xs) {
    std::vector<big_int> out;
    for (auto x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST(CliqueProfile, GoldenValues) {
    EXPECT_EQ(count_cliques(complete(4)).counts, big({1, 4, 6, 4, 1}));
    EXPECT_EQ(count_cliques(complete(4)).total(), 16);
    EXPECT_EQ(count_cliques(figure1_graph()).total(), 24);
    EXPECT_EQ(count_cliques(cycle(5)).counts, big({1, 5, 5}));
    EXPECT_EQ(total_cliques(graph()), 1);
    EXPECT_EQ(total_cliques(extremal_graph(2 * 4 + 2, 3).g), 34);
    EXPECT_EQ(total_cliques(complete_minus_matching(6, 2)), 36);
    EXPECT_EQ(brute_force_profile(complete(5)).counts, big({1, 5, 10, 10, 5, 1}));
}

TEST(CliqueProfile, MatchesSubsetOracleOnRandomGraphs) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const std::size_t n = 1 + seed % 18;
        const double p = 0.15 + 0.7 * static_cast<double>(seed % 11) / 10.0;
        auto g = random_graph(n, std::min(p, 0.95), seed);
        auto expected = big(oracle::profile(g));
        ASSERT_EQ(count_cliques(g).counts, expected) << encode_graph6(g);
        ASSERT_EQ(brute_force_profile(g).counts, expected) << encode_graph6(g);
    }
}

TEST(CliqueProfile, SweepAndSearchPathsAgree) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto g = random_graph(40, 0.5, seed);
        kernel_options search_only{0};
        kernel_options sweep_all{20};
        auto a = count_cliques(g, nullptr, search_only);
        auto b = count_cliques(g, nullptr, sweep_all);
        auto c = count_cliques(g);
        ASSERT_EQ(a, b);
        ASSERT_EQ(a, c);
    }
}

TEST(CliqueProfile, WideNeighborhoodsAndOverflow) {
    // K_70: later-degree 69 needs multiword masks; the total 2^70 overflows 64 bits
    auto p = count_cliques(complete(70));
    EXPECT_EQ(p.total(), pow2(70));
    for (unsigned t = 0; t <= 70; ++t) ASSERT_EQ(p.at(t), binomial(70, t));
    // K_{70,70}: later-degrees above 64 with few cliques
    auto g = complete_bipartite(70, 70);
    EXPECT_EQ(count_cliques(g).counts, big({1, 140, 4900}));
    // plus a matching inside one side: each matching edge adds 1 edge and 70 triangles
    std::vector<edge> extra;
    for (vertex i = 0; i + 1 < 70; i += 2) extra.emplace_back(i, i + 1);
    auto h = add_edges(g, extra);
    EXPECT_EQ(count_cliques(h).counts, big({1, 140, 4900 + 35, 35 * 70}));
    EXPECT_EQ(count_cliques(h), count_cliques(h, nullptr, kernel_options{0}));
}

TEST(CliqueProfile, StatsTrackPredictedWork) {
    auto g = random_bounded_degree(2000, 5, 1);
    kernel_stats st;
    count_cliques(g, &st);
    EXPECT_GT(st.predicted_work, 0);
    EXPECT_LE(st.max_later_degree, 5u);
    EXPECT_DOUBLE_EQ(static_cast<double>(st.observed_work()), st.predicted_work);
}

TEST(DegeneracyOrder, LaterDegreeEqualsDegeneracy) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = random_graph(1 + seed % 12, 0.4, seed);
        const auto n = g.order();
        auto order = degeneracy_order(g);
        ASSERT_EQ(std::set<vertex>(order.begin(), order.end()).size(), n);
        std::vector<std::size_t> pos(n);
        for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
        std::size_t later_max = 0;
        for (vertex u = 0; u < n; ++u) {
            std::size_t later = 0;
            for (vertex v : g.neighbors(u)) later += pos[v] > pos[u];
            later_max = std::max(later_max, later);
        }
        // oracle: degeneracy = max over vertex subsets of the minimum degree
        auto adj = oracle::masks(g);
        std::size_t degeneracy = 0;
        for (std::uint32_t s = 1; s < (1u << n); ++s) {
            std::size_t least = n;
            for (std::size_t v = 0; v < n; ++v)
                if ((s >> v) & 1u) least = std::min<std::size_t>(least, __builtin_popcount(adj[v] & s));
            degeneracy = std::max(degeneracy, least);
        }
        ASSERT_EQ(later_max, degeneracy) << encode_graph6(g);
    }
}

TEST(VertexWeights, FigureOne) {
    auto w = weight_map(figure1_graph());
    EXPECT_EQ(w[0], rational(15, 4));
    EXPECT_EQ(w[1], rational(15, 4));
    EXPECT_EQ(w[2], rational(65, 12));
    EXPECT_EQ(w[3], rational(65, 12));
    EXPECT_EQ(w[4], rational(7, 3));
    EXPECT_EQ(w[5], rational(7, 3));
}

TEST(VertexWeights, SmallCases) {
    EXPECT_EQ(vertex_weight(graph(3), 1), 1);
    EXPECT_EQ(vertex_weight(path(2), 0), rational(3, 2));
    auto vp = vertex_profile(complete(4), 2);
    EXPECT_EQ(vp, big({0, 1, 3, 3, 1}));
    EXPECT_EQ(vertex_profile(figure1_graph(), 4), big({0, 1, 2, 1}));
    EXPECT_EQ(vertex_profile(graph(2), 0), big({0, 1}));
}

TEST(VertexWeights, MatchOracle) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto g = random_graph(1 + seed % 14, 0.5, seed);
        ASSERT_EQ(weight_map(g), oracle::weights(g));
    }
}

TEST(EdgeCounts, Examples) {
    EXPECT_EQ(edge_clique_count(complete(3), edge(0, 1)), 2);
    EXPECT_EQ(edge_clique_count(figure1_graph(), edge(2, 3)), 6);
    EXPECT_THROW(edge_clique_count(figure1_graph(), edge(0, 4)), graph_error);
    std::vector<edge> tri{{0, 1}, {1, 2}, {0, 2}};
    EXPECT_EQ(edges_union_clique_count(complete(3), tri), 4);
    std::vector<edge> one{{2, 3}};
    EXPECT_EQ(edges_union_clique_count(figure1_graph(), one), 6);
}

TEST(EdgeCounts, UnionMatchesSubsetOracle) {
    // Figure 1, E* = {3,5},{4,5}: cliques {3,5}, {4,5}, {3,4,5}
    std::vector<edge> es{{2, 4}, {3, 4}};
    auto g = figure1_graph();
    auto adj = oracle::masks(g);
    std::uint64_t expected = 0;
    for (std::uint32_t s = 0; s < 64; ++s)
        if (oracle::is_clique_mask(adj, s) &&
            std::any_of(es.begin(), es.end(), [&](const edge& e) { return (s >> e.u & 1u) && (s >> e.v & 1u); }))
            ++expected;
    EXPECT_EQ(expected, 3u);
    EXPECT_EQ(edges_union_clique_count(g, es), expected);
}

TEST(MaximalCliques, Examples) {
    using sets = std::vector<std::vector<vertex>>;
    EXPECT_EQ(maximal_cliques(delete_edge(complete(4), edge(0, 1))), (sets{{0, 2, 3}, {1, 2, 3}}));
    EXPECT_EQ(maximal_cliques(cycle(5)), (sets{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}));
    EXPECT_EQ(maximal_cliques(figure1_graph()), (sets{{0, 1, 2, 3}, {2, 3, 4}, {2, 3, 5}}));
    EXPECT_EQ(maximal_cliques(graph(2)), (sets{{0}, {1}}));
}

TEST(MaximalCliques, MatchOracle) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto g = random_graph(1 + seed % 15, 0.45, seed);
        auto adj = oracle::masks(g);
        const auto n = g.order();
        std::vector<std::vector<vertex>> expected;
        for (std::uint32_t s = 1; s < (1u << n); ++s) {
            if (!oracle::is_clique_mask(adj, s)) continue;
            bool maximal = true;
            for (std::size_t v = 0; v < n && maximal; ++v)
                if (!((s >> v) & 1u) && oracle::is_clique_mask(adj, s | (1u << v))) maximal = false;
            if (!maximal) continue;
            std::vector<vertex> c;
            for (std::size_t v = 0; v < n; ++v)
                if ((s >> v) & 1u) c.push_back(static_cast<vertex>(v));
            expected.push_back(c);
        }
        std::sort(expected.begin(), expected.end());
        ASSERT_EQ(maximal_cliques(g), expected) << encode_graph6(g);
    }
}

TEST(ListCliques, CountsMatchProfile) {
    auto g = random_graph(16, 0.5, 4);
    auto p = count_cliques(g);
    std::vector<std::uint64_t> seen(p.counts.size(), 0);
    for_each_clique(g, 16, [&](const std::vector<vertex>& c) { ++seen[c.size()]; });
    for (std::size_t t = 1; t < p.counts.size(); ++t) EXPECT_EQ(big_int(seen[t]), p.counts[t]);
}
