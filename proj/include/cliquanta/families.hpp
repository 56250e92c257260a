#pragma once

// Named graph families: complete, cycles, bipartite, the extremal unions
// aK_{r+1} ∪ K_b, colex graphs, K_r - tK_2, the six-vertex worked example,
// and the P/Q cross-edge gadgets used by the edge clique-count lemmas.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "graph.hpp"

namespace cliquanta {

inline graph complete(std::size_t n) {
    std::vector<edge> es;
    for (vertex v = 1; v < n; ++v)
        for (vertex u = 0; u < v; ++u) es.emplace_back(u, v);
    return graph::from_edges(n, es);
}

inline graph empty_graph(std::size_t n) { return graph(n); }

inline graph cycle(std::size_t n) {
    if (n < 3) throw graph_error("cycle needs n >= 3, got n=" + std::to_string(n));
    std::vector<edge> es;
    for (vertex u = 0; u < n; ++u) es.emplace_back(u, static_cast<vertex>((u + 1) % n));
    return graph::from_edges(n, es);
}

inline graph path(std::size_t n) {
    std::vector<edge> es;
    for (vertex u = 0; u + 1 < n; ++u) es.emplace_back(u, u + 1);
    return graph::from_edges(n, es);
}

/// Parts {0..a-1} and {a..a+b-1}.
inline graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<edge> es;
    for (vertex u = 0; u < a; ++u)
        for (vertex w = 0; w < b; ++w) es.emplace_back(u, static_cast<vertex>(a + w));
    return graph::from_edges(a + b, es);
}

/// copies disjoint copies of g.
inline graph repeat(const graph& g, std::size_t copies) {
    graph out;
    for (std::size_t i = 0; i < copies; ++i) out = disjoint_union(out, g);
    return out;
}

/// n = a(r+1) + b with 0 <= b <= r.
struct extremal_params {
    std::size_t n = 0;
    std::size_t r = 1;
    std::size_t a = 0;
    std::size_t b = 0;

    static extremal_params of(std::size_t n, std::size_t r) {
        if (r < 1) throw graph_error("degree bound r must be >= 1");
        return {n, r, n / (r + 1), n % (r + 1)};
    }
    friend bool operator==(const extremal_params&, const extremal_params&) = default;
};

struct extremal_graph_result {
    graph g;
    extremal_params params;
};

/// aK_{r+1} ∪ K_b.
inline extremal_graph_result extremal_graph(std::size_t n, std::size_t r) {
    auto p = extremal_params::of(n, r);
    return {disjoint_union(repeat(complete(r + 1), p.a), complete(p.b)), p};
}

/// m = C(r,2) + s with 0 <= s < r (for m >= 1).
struct colex_spec {
    std::size_t n = 0;
    std::size_t m = 0;

    std::size_t r() const { return decompose().first; }
    std::size_t s() const { return decompose().second; }

    std::pair<std::size_t, std::size_t> decompose() const {
        std::size_t r = 1;
        while ((r + 1) * r / 2 <= m) ++r;
        return {r, m - r * (r - 1) / 2};
    }
};

/// The k-th (0-based) pair in colex order, as 0-based vertices.
inline edge colex_edge(std::size_t k) {
    std::size_t j = 1;
    while (j * (j + 1) / 2 <= k) ++j;
    const std::size_t i = k - j * (j - 1) / 2;
    return {static_cast<vertex>(i), static_cast<vertex>(j)};
}

/// Vertices {1..n} of the colex graph are 0..n-1 here.
inline graph colex_graph(const colex_spec& spec) {
    const auto limit = spec.n * (spec.n - (spec.n > 0 ? 1 : 0)) / 2;
    if (spec.m > limit)
        throw graph_error("colex graph: m=" + std::to_string(spec.m) + " exceeds C(" +
                          std::to_string(spec.n) + ",2)=" + std::to_string(limit));
    std::vector<edge> es;
    es.reserve(spec.m);
    for (std::size_t k = 0; k < spec.m; ++k) es.push_back(colex_edge(k));
    return graph::from_edges(spec.n, es);
}

inline graph colex_graph(std::size_t n, std::size_t m) { return colex_graph(colex_spec{n, m}); }

/// K_r minus the matching {0-1, 2-3, ..., (2t-2)-(2t-1)}.
inline graph complete_minus_matching(std::size_t r, std::size_t t) {
    if (2 * t > r)
        throw graph_error("matching of size t=" + std::to_string(t) + " does not fit in K_" +
                          std::to_string(r));
    std::vector<edge> es;
    for (vertex v = 1; v < r; ++v)
        for (vertex u = 0; u < v; ++u)
            if (!(u % 2 == 0 && v == u + 1 && v < 2 * t)) es.emplace_back(u, v);
    return graph::from_edges(r, es);
}

/// The six-vertex example graph: a K_4 on {1,2,3,4} with 5 and 6 both
/// joined to 3 and 4 (1-based labels; stored 0-based).
inline graph figure1_graph() {
    return graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3},
                                 {2, 4}, {2, 5}, {3, 4}, {3, 5}});
}

/// G(n, prob) with a fixed seed.
inline graph random_graph(std::size_t n, double prob, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(prob);
    std::vector<edge> es;
    for (vertex v = 1; v < n; ++v)
        for (vertex u = 0; u < v; ++u)
            if (coin(rng)) es.emplace_back(u, v);
    return graph::from_edges(n, es);
}

/// Random graph with maximum degree <= r: about n*r/2 attempts at joining two
/// uniformly chosen vertices, each kept when both endpoints still have room.
inline graph random_bounded_degree(std::size_t n, std::size_t r, std::uint64_t seed) {
    if (n < 2) return graph(n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<vertex> pick(0, static_cast<vertex>(n - 1));
    std::vector<std::vector<vertex>> adj(n);
    const std::size_t attempts = n * r / 2 + n;
    for (std::size_t k = 0; k < attempts; ++k) {
        vertex u = pick(rng), v = pick(rng);
        if (u == v || adj[u].size() >= r || adj[v].size() >= r) continue;
        if (std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end()) continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return graph::from_adjacency(std::move(adj));
}

// ---------------------------------------------------------------------------
// Cross-edge gadgets
// ---------------------------------------------------------------------------

class gadget_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A cross edge between P-vertex p_index (0..2p-1) and Q-vertex q_index (0..q-1).
struct cross_edge {
    std::size_t p_index = 0;
    std::size_t q_index = 0;

    friend bool operator==(const cross_edge&, const cross_edge&) = default;
    friend auto operator<=>(const cross_edge&, const cross_edge&) = default;
};

/// t = 0: P = K_{2p}, every Q-vertex has at most p neighbors in P and every
///        P-vertex at most p neighbors in Q.
/// t >= 1: P = K_{2p} - tK_2 with the missing matching u1u2, ..., u_{2t-1}u_{2t};
///        the designated Q-vertex w has N_P(w) = {u_1, ..., u_{p+t}}.
struct gamma_spec {
    std::size_t p = 1;
    std::size_t q = 1;
    std::size_t t = 0;
    std::vector<cross_edge> cross;
    std::size_t designated = 0;  // Q-index of w (t >= 1)
};

struct gamma_gadget_result {
    graph g;
    std::vector<edge> marked;  // every cross edge (t = 0) or e_i = u_i w, i = 1..2t
    std::size_t p_size = 0;    // P-vertices are 0..p_size-1, Q follows
};

inline vertex gadget_p_vertex(std::size_t i) { return static_cast<vertex>(i); }
inline vertex gadget_q_vertex(const gamma_spec& s, std::size_t j) {
    return static_cast<vertex>(2 * s.p + j);
}

/// Returns an empty string when the hypotheses hold, else the violated one.
inline std::string gamma_violation(const gamma_spec& s) {
    if (s.p < 1) return "p >= 1 required";
    if (s.q < 1) return "q >= 1 required";
    if (s.t > s.p) return "t <= p required";
    if (s.cross.size() != 2 * s.p)
        return "exactly 2p=" + std::to_string(2 * s.p) + " cross edges required, got " +
               std::to_string(s.cross.size());
    auto sorted = s.cross;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return "duplicate cross edge; exactly 2p distinct cross edges required";
    std::vector<std::size_t> dq(2 * s.p, 0);  // d_Q(u)
    std::vector<std::size_t> dp(s.q, 0);      // d_P(w)
    for (const auto& c : s.cross) {
        if (c.p_index >= 2 * s.p || c.q_index >= s.q) return "cross edge endpoint out of range";
        ++dq[c.p_index];
        ++dp[c.q_index];
    }
    if (s.t == 0) {
        for (std::size_t j = 0; j < s.q; ++j)
            if (dp[j] > s.p)
                return "d_P(w) <= p violated at Q-vertex " + std::to_string(j) + " (d_P=" +
                       std::to_string(dp[j]) + ", p=" + std::to_string(s.p) + ")";
        for (std::size_t i = 0; i < 2 * s.p; ++i)
            if (dq[i] > s.p)
                return "d_Q(u) <= p violated at P-vertex " + std::to_string(i) + " (d_Q=" +
                       std::to_string(dq[i]) + ", p=" + std::to_string(s.p) + ")";
        return {};
    }
    if (s.designated >= s.q) return "designated Q-vertex out of range";
    std::vector<char> hit(2 * s.p, 0);
    for (const auto& c : s.cross)
        if (c.q_index == s.designated) hit[c.p_index] = 1;
    for (std::size_t i = 0; i < 2 * s.p; ++i)
        if (static_cast<bool>(hit[i]) != (i < s.p + s.t))
            return "N_P(w) = {u_1..u_" + std::to_string(s.p + s.t) +
                   "} violated (P-vertex " + std::to_string(i) + ")";
    return {};
}

inline gamma_gadget_result gamma_gadget(const gamma_spec& s) {
    if (auto why = gamma_violation(s); !why.empty()) throw gadget_error(why);
    const std::size_t np = 2 * s.p;
    std::vector<edge> es;
    for (vertex v = 1; v < np; ++v)
        for (vertex u = 0; u < v; ++u)
            if (!(u % 2 == 0 && v == u + 1 && v < 2 * s.t)) es.emplace_back(u, v);
    for (std::size_t a = 1; a < s.q; ++a)
        for (std::size_t b = 0; b < a; ++b) es.emplace_back(gadget_q_vertex(s, b), gadget_q_vertex(s, a));
    std::vector<edge> marked;
    for (const auto& c : s.cross) {
        edge e(gadget_p_vertex(c.p_index), gadget_q_vertex(s, c.q_index));
        es.push_back(e);
        if (s.t == 0) marked.push_back(e);
    }
    if (s.t > 0)
        for (std::size_t i = 0; i < 2 * s.t; ++i)
            marked.emplace_back(gadget_p_vertex(i), gadget_q_vertex(s, s.designated));
    std::sort(marked.begin(), marked.end());
    return {graph::from_edges(np + s.q, es), std::move(marked), np};
}

/// Every valid cross-edge placement for (p, q, t) with its gadget. Placements
/// are generated in lexicographic order of the sorted cross list; callers
/// that need isomorph rejection dedupe by canonical form (see enumerate.hpp).
inline void for_each_gamma_placement(std::size_t p, std::size_t q, std::size_t t,
                                     const std::function<void(const gamma_spec&)>& f) {
    if (p < 1 || q < 1 || t > p) throw gadget_error("placement sweep needs p >= 1, q >= 1, t <= p");
    gamma_spec base{p, q, t, {}, 0};
    std::vector<cross_edge> fixed;
    std::vector<cross_edge> pool;
    if (t == 0) {
        for (std::size_t i = 0; i < 2 * p; ++i)
            for (std::size_t j = 0; j < q; ++j) pool.push_back({i, j});
    } else {
        // w is Q-vertex 0 without loss of generality (Q is complete).
        for (std::size_t i = 0; i < p + t; ++i) fixed.push_back({i, 0});
        for (std::size_t i = 0; i < 2 * p; ++i)
            for (std::size_t j = 1; j < q; ++j) pool.push_back({i, j});
    }
    const std::size_t need = 2 * p - fixed.size();
    if (need > pool.size()) return;
    std::vector<std::size_t> pick(need);
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t depth, std::size_t start) {
        if (depth == need) {
            gamma_spec s = base;
            s.cross = fixed;
            for (auto k : pick) s.cross.push_back(pool[k]);
            std::sort(s.cross.begin(), s.cross.end());
            if (gamma_violation(s).empty()) f(s);
            return;
        }
        for (std::size_t k = start; k + (need - depth) <= pool.size(); ++k) {
            pick[depth] = k;
            choose(depth + 1, k + 1);
        }
    };
    choose(0, 0);
}

}  // namespace cliquanta
