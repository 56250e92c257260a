#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include <cliquanta/canonical.hpp>
#include <cliquanta/families.hpp>

#include "oracles.hpp"

using namespace cliquanta;

TEST(Canonical, InvariantUnderRelabeling) {
    std::mt19937_64 rng(7);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const std::size_t n = 1 + seed % 10;
        auto g = random_graph(n, 0.2 + 0.6 * static_cast<double>(seed % 5) / 4.0, seed);
        auto perm = oracle::random_permutation(n, rng);
        auto h = relabel(g, perm);
        auto a = canonical(g);
        auto b = canonical(h);
        ASSERT_EQ(a.graph6, b.graph6) << encode_graph6(g);
        ASSERT_EQ(a.automorphisms, b.automorphisms);
        // the labeling reproduces the canonical graph
        auto back = relabel(g, [&] {
            std::vector<vertex> inv(n);
            for (std::size_t i = 0; i < n; ++i) inv[a.labeling[i]] = static_cast<vertex>(i);
            return inv;
        }());
        ASSERT_EQ(encode_graph6(back), a.graph6);
    }
}

TEST(Canonical, AutomorphismCounts) {
    EXPECT_EQ(canonical(cycle(5)).automorphisms, 10u);
    EXPECT_EQ(canonical(complete(6)).automorphisms, 720u);
    EXPECT_EQ(canonical(graph(4)).automorphisms, 24u);
    EXPECT_EQ(canonical(complete_bipartite(3, 3)).automorphisms, 72u);
    EXPECT_EQ(canonical(path(4)).automorphisms, 2u);
    EXPECT_EQ(canonical(figure1_graph()).automorphisms, 8u);
}

TEST(Canonical, SingleFormForAllEdgeRemovals) {
    std::set<std::string> forms;
    for (const auto& e : complete(4).edges()) forms.insert(canonical(delete_edge(complete(4), e)).graph6);
    EXPECT_EQ(forms.size(), 1u);
}

TEST(Canonical, AgreesWithBruteForceInvariant) {
    // equal canonical forms iff equal brute-force codes, over all graphs on 5 vertices
    // and random graphs on 7
    std::map<std::string, std::uint64_t> seen;
    std::map<std::uint64_t, std::string> back;
    auto check = [&](const graph& g) {
        auto f = canonical(g).graph6;
        auto c = oracle::canonical_code(g);
        auto [it, fresh] = seen.emplace(f, c);
        ASSERT_EQ(it->second, c) << f;
        auto [jt, fresh2] = back.emplace(c, f);
        ASSERT_EQ(jt->second, f) << f;
    };
    for (std::uint64_t bits = 0; bits < (1u << 10); ++bits) check(oracle::from_bits(5, bits));
    EXPECT_EQ(seen.size(), 34u);
    for (std::uint64_t seed = 0; seed < 300; ++seed) check(random_graph(7, 0.5, seed));
}

TEST(Canonical, ColoredForms) {
    // P3 with an endpoint colored differs from P3 with the middle colored
    auto p3 = path(3);
    auto a = canonical(p3, {1, 0, 0});
    auto b = canonical(p3, {0, 0, 1});
    auto c = canonical(p3, {0, 1, 0});
    EXPECT_EQ(a, b);
    EXPECT_FALSE(a == c);
    EXPECT_EQ(canonical(p3, {0, 1, 0}).automorphisms, 2u);
    EXPECT_EQ(canonical(p3, {1, 0, 0}).automorphisms, 1u);
    EXPECT_THROW(canonical(p3, {0, 1}), graph_error);
}

TEST(Canonical, OrderCap) {
    EXPECT_NO_THROW(canonical(cycle(16)));
    EXPECT_THROW(canonical(cycle(17)), graph_error);
    EXPECT_TRUE(isomorphic(cycle(6), relabel(cycle(6), std::vector<vertex>{3, 1, 5, 0, 2, 4})));
    EXPECT_FALSE(isomorphic(cycle(6), repeat(complete(3), 2)));
}
