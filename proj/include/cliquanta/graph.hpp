#pragma once

// Immutable simple undirected graphs on vertices 0..n-1.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cliquanta {

using vertex = std::uint32_t;

class graph_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Undirected edge, stored with u < v.
struct edge {
    vertex u = 0;
    vertex v = 0;

    constexpr edge() = default;
    constexpr edge(vertex a, vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend constexpr bool operator==(const edge&, const edge&) = default;
    friend constexpr auto operator<=>(const edge&, const edge&) = default;
};

inline std::string to_string(const edge& e, bool one_based = false) {
    const vertex off = one_based ? 1 : 0;
    return "{" + std::to_string(e.u + off) + "," + std::to_string(e.v + off) + "}";
}

class graph {
public:
    /// K_0.
    graph() = default;

    /// Edgeless graph on n vertices.
    explicit graph(std::size_t n) : adj_(n) {}

    /// Builds from an edge list; duplicates collapse, self-loops and
    /// out-of-range endpoints are rejected naming the offending edge.
    static graph from_edges(std::size_t n, std::span<const edge> edges) {
        graph g(n);
        for (const auto& e : edges) {
            if (e.u == e.v)
                throw graph_error("self-loop " + to_string(e) + " rejected");
            if (e.v >= n)
                throw graph_error("edge " + to_string(e) + " has endpoint out of range for n=" +
                                  std::to_string(n));
            g.adj_[e.u].push_back(e.v);
            g.adj_[e.v].push_back(e.u);
        }
        g.normalize();
        return g;
    }

    static graph from_edges(std::size_t n, std::initializer_list<std::pair<vertex, vertex>> pairs) {
        std::vector<edge> es;
        es.reserve(pairs.size());
        for (auto [a, b] : pairs) {
            if (a == b)
                throw graph_error("self-loop {" + std::to_string(a) + "," + std::to_string(b) +
                                  "} rejected");
            es.emplace_back(a, b);
        }
        return from_edges(n, es);
    }

    /// Takes ownership of adjacency lists; they are sorted and deduplicated.
    /// Symmetry and irreflexivity are checked.
    static graph from_adjacency(std::vector<std::vector<vertex>> adj) {
        graph g;
        g.adj_ = std::move(adj);
        const auto n = g.adj_.size();
        for (std::size_t u = 0; u < n; ++u)
            for (vertex v : g.adj_[u])
                if (v >= n || v == u)
                    throw graph_error("invalid neighbor " + std::to_string(v) + " of vertex " +
                                      std::to_string(u));
        g.normalize();
        for (std::size_t u = 0; u < n; ++u)
            for (vertex v : g.adj_[u])
                if (!std::binary_search(g.adj_[v].begin(), g.adj_[v].end(), static_cast<vertex>(u)))
                    throw graph_error("asymmetric adjacency between " + std::to_string(u) +
                                      " and " + std::to_string(v));
        return g;
    }

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return m_; }
    bool empty() const noexcept { return adj_.empty(); }

    std::span<const vertex> neighbors(vertex u) const { return adj_[u]; }
    std::size_t degree(vertex u) const { return adj_[u].size(); }

    bool adjacent(vertex u, vertex v) const {
        if (u >= order() || v >= order() || u == v) return false;
        const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
        const vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
        return std::binary_search(a.begin(), a.end(), other);
    }

    bool has_edge(const edge& e) const { return adjacent(e.u, e.v); }

    /// Neighborhood as a bitmask; requires n <= 64.
    std::uint64_t row_mask(vertex u) const {
        std::uint64_t m = 0;
        for (vertex v : adj_[u]) m |= std::uint64_t{1} << v;
        return m;
    }

    std::vector<edge> edges() const {
        std::vector<edge> out;
        out.reserve(m_);
        for (vertex u = 0; u < order(); ++u)
            for (vertex v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    const std::vector<std::vector<vertex>>& adjacency() const noexcept { return adj_; }

    friend bool operator==(const graph& a, const graph& b) { return a.adj_ == b.adj_; }

private:
    void normalize() {
        std::size_t total = 0;
        for (auto& row : adj_) {
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
            total += row.size();
        }
        m_ = total / 2;
    }

    std::vector<std::vector<vertex>> adj_;
    std::size_t m_ = 0;
};

inline void check_vertex(const graph& g, vertex u) {
    if (u >= g.order())
        throw graph_error("vertex " + std::to_string(u) + " out of range for n=" +
                          std::to_string(g.order()));
}

inline std::size_t max_degree(const graph& g) {
    std::size_t d = 0;
    for (vertex u = 0; u < g.order(); ++u) d = std::max(d, g.degree(u));
    return d;
}

inline std::size_t min_degree(const graph& g) {
    if (g.empty()) return 0;
    std::size_t d = g.order();
    for (vertex u = 0; u < g.order(); ++u) d = std::min(d, g.degree(u));
    return d;
}

/// Subgraph induced on S, relabeled by increasing original index.
inline graph induced_subgraph(const graph& g, std::span<const vertex> s) {
    std::vector<vertex> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (vertex u : sorted) check_vertex(g, u);

    std::vector<std::vector<vertex>> adj(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        auto nb = g.neighbors(sorted[i]);
        // merge-walk the two sorted ranges
        std::size_t j = 0;
        for (vertex w : nb) {
            while (j < sorted.size() && sorted[j] < w) ++j;
            if (j == sorted.size()) break;
            if (sorted[j] == w) adj[i].push_back(static_cast<vertex>(j));
        }
    }
    return graph::from_adjacency(std::move(adj));
}

inline graph complement(const graph& g) {
    const auto n = g.order();
    std::vector<std::vector<vertex>> adj(n);
    for (vertex u = 0; u < n; ++u) {
        auto nb = g.neighbors(u);
        std::size_t j = 0;
        for (vertex v = 0; v < n; ++v) {
            while (j < nb.size() && nb[j] < v) ++j;
            if (v == u || (j < nb.size() && nb[j] == v)) continue;
            adj[u].push_back(v);
        }
    }
    return graph::from_adjacency(std::move(adj));
}

inline graph delete_edges(const graph& g, std::span<const edge> es) {
    auto adj = g.adjacency();
    for (const auto& e : es) {
        if (!g.has_edge(e)) throw graph_error("cannot delete absent edge " + to_string(e));
        std::erase(adj[e.u], e.v);
        std::erase(adj[e.v], e.u);
    }
    return graph::from_adjacency(std::move(adj));
}

inline graph delete_edge(const graph& g, const edge& e) {
    return delete_edges(g, std::span<const edge>(&e, 1));
}

inline graph add_edges(const graph& g, std::span<const edge> es) {
    auto adj = g.adjacency();
    for (const auto& e : es) {
        if (e.u == e.v || e.v >= g.order())
            throw graph_error("cannot add invalid edge " + to_string(e));
        if (g.has_edge(e)) throw graph_error("cannot add present edge " + to_string(e));
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return graph::from_adjacency(std::move(adj));
}

inline graph add_edge(const graph& g, const edge& e) {
    return add_edges(g, std::span<const edge>(&e, 1));
}

/// G1's vertices keep their labels; G2's are shifted by |V(G1)|.
inline graph disjoint_union(const graph& a, const graph& b) {
    auto adj = a.adjacency();
    const auto shift = static_cast<vertex>(a.order());
    for (vertex u = 0; u < b.order(); ++u) {
        std::vector<vertex> row;
        row.reserve(b.degree(u));
        for (vertex v : b.neighbors(u)) row.push_back(v + shift);
        adj.push_back(std::move(row));
    }
    return graph::from_adjacency(std::move(adj));
}

/// A graph whose local vertex i stands for the external label labels[i].
struct labeled_graph {
    graph g;
    std::vector<vertex> labels;

    friend bool operator==(const labeled_graph&, const labeled_graph&) = default;
};

/// Wraps G[S] with labels = sorted S.
inline labeled_graph induced_labeled(const graph& g, std::span<const vertex> s) {
    std::vector<vertex> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return {induced_subgraph(g, sorted), std::move(sorted)};
}

/// Union of two labeled graphs that agree on the subgraph induced by their
/// shared labels. The result is labeled by the sorted union of labels.
inline labeled_graph union_on_labels(const labeled_graph& a, const labeled_graph& b) {
    auto check_labels = [](const labeled_graph& x) {
        if (x.labels.size() != x.g.order())
            throw graph_error("label count does not match vertex count");
        auto s = x.labels;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw graph_error("duplicate vertex label");
    };
    check_labels(a);
    check_labels(b);

    std::vector<vertex> all = a.labels;
    all.insert(all.end(), b.labels.begin(), b.labels.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    auto index_of = [&](vertex label) {
        return static_cast<vertex>(std::lower_bound(all.begin(), all.end(), label) - all.begin());
    };

    // shared labels: position in a and in b
    std::vector<std::pair<vertex, vertex>> shared;
    for (vertex i = 0; i < a.labels.size(); ++i)
        for (vertex j = 0; j < b.labels.size(); ++j)
            if (a.labels[i] == b.labels[j]) shared.emplace_back(i, j);
    for (std::size_t x = 0; x < shared.size(); ++x)
        for (std::size_t y = x + 1; y < shared.size(); ++y) {
            bool in_a = a.g.adjacent(shared[x].first, shared[y].first);
            bool in_b = b.g.adjacent(shared[x].second, shared[y].second);
            if (in_a != in_b)
                throw graph_error("graphs disagree on shared labels " +
                                  to_string(edge(a.labels[shared[x].first],
                                                 a.labels[shared[y].first])));
        }

    std::vector<edge> es;
    for (const auto* part : {&a, &b})
        for (const auto& e : part->g.edges())
            es.emplace_back(index_of(part->labels[e.u]), index_of(part->labels[e.v]));
    return {graph::from_edges(all.size(), es), std::move(all)};
}

/// Applies a permutation: vertex u of g becomes perm[u].
inline graph relabel(const graph& g, std::span<const vertex> perm) {
    if (perm.size() != g.order()) throw graph_error("permutation size mismatch");
    std::vector<std::vector<vertex>> adj(g.order());
    for (vertex u = 0; u < g.order(); ++u)
        for (vertex v : g.neighbors(u)) adj[perm[u]].push_back(perm[v]);
    return graph::from_adjacency(std::move(adj));
}

inline bool is_regular(const graph& g) {
    return g.empty() || min_degree(g) == max_degree(g);
}

/// Connected components as sorted vertex lists, ordered by smallest vertex.
inline std::vector<std::vector<vertex>> connected_components(const graph& g) {
    std::vector<int> seen(g.order(), 0);
    std::vector<std::vector<vertex>> comps;
    std::vector<vertex> stack;
    for (vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<vertex> comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            vertex u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (vertex v : g.neighbors(u))
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_clique(const graph& g, std::span<const vertex> s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

}  // namespace cliquanta
