#pragma once

// Canonical labeling for small graphs.
//
// Ordered-partition refinement (neighbor counts per cell, iterated to a
// fixpoint) followed by a backtracking search over individualizations. The
// canonical labeling is the leaf whose relabeled adjacency rows are
// lexicographically largest. Leaves with equal rows yield automorphisms,
// which prune sibling branches in the same orbit and, via orbit-stabilizer
// along the first path, give the order of the automorphism group.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "graph.hpp"
#include "io.hpp"

namespace cliquanta {

inline constexpr std::size_t canonical_max_order = 16;

struct canonical_form {
    std::string graph6;               // graph6 of the canonically relabeled graph
    std::uint64_t automorphisms = 1;  // |Aut(G)| (color-preserving when colored)
    std::vector<vertex> labeling;     // labeling[i] = original vertex placed at position i

    friend bool operator==(const canonical_form& a, const canonical_form& b) {
        return a.graph6 == b.graph6;
    }
};

namespace detail {

using small_rows = std::array<std::uint32_t, 32>;
using perm = std::array<std::uint8_t, 32>;

class canonizer {
public:
    canonizer(const small_rows& rows, std::size_t n, const std::vector<std::uint32_t>& colors)
        : rows_(rows), n_(n) {
        // initial ordered partition: color classes in increasing color order
        std::vector<std::uint32_t> keys(colors.begin(), colors.end());
        keys.resize(n, 0);
        std::vector<std::uint32_t> distinct = keys;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (auto c : distinct) {
            std::uint32_t cell = 0;
            for (std::size_t v = 0; v < n; ++v)
                if (keys[v] == c) cell |= 1u << v;
            initial_.push_back(cell);
        }
    }

    void run() {
        if (n_ == 0) return;
        std::vector<vertex> prefix;
        search(initial_, prefix);
    }

    const std::vector<vertex>& best_order() const { return best_order_; }
    const small_rows& best_rows() const { return best_rows_; }

    std::uint64_t group_order() const {
        std::uint64_t order = 1;
        for (std::size_t k = 0; k < first_prefix_.size(); ++k) {
            std::vector<vertex> fixed(first_prefix_.begin(), first_prefix_.begin() + static_cast<long>(k));
            auto orbit = orbits(fixed);
            auto root = find(orbit, first_prefix_[k]);
            std::uint64_t size = 0;
            for (std::size_t v = 0; v < n_; ++v)
                if (find(orbit, static_cast<vertex>(v)) == root) ++size;
            order *= size;
        }
        return order;
    }

private:
    static constexpr int no_jump = 1 << 30;

    void refine(std::vector<std::uint32_t>& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t ci = 0; ci < cells.size(); ++ci) {
                if (std::popcount(cells[ci]) <= 1) continue;
                // signature of v: neighbor counts in every cell
                std::vector<std::pair<std::vector<std::uint8_t>, vertex>> sig;
                for (std::uint32_t c = cells[ci]; c; c &= c - 1) {
                    auto v = static_cast<vertex>(std::countr_zero(c));
                    std::vector<std::uint8_t> s(cells.size());
                    for (std::size_t cj = 0; cj < cells.size(); ++cj)
                        s[cj] = static_cast<std::uint8_t>(std::popcount(rows_[v] & cells[cj]));
                    sig.emplace_back(std::move(s), v);
                }
                std::sort(sig.begin(), sig.end());
                if (sig.front().first == sig.back().first) continue;
                std::vector<std::uint32_t> parts;
                for (std::size_t i = 0; i < sig.size(); ++i) {
                    if (i == 0 || sig[i].first != sig[i - 1].first) parts.push_back(0);
                    parts.back() |= 1u << sig[i].second;
                }
                cells.erase(cells.begin() + static_cast<long>(ci));
                cells.insert(cells.begin() + static_cast<long>(ci), parts.begin(), parts.end());
                changed = true;
                break;
            }
        }
    }

    small_rows leaf_rows(const std::vector<vertex>& order) const {
        small_rows out{};
        std::array<std::uint8_t, 32> pos{};
        for (std::size_t i = 0; i < n_; ++i) pos[order[i]] = static_cast<std::uint8_t>(i);
        for (std::size_t i = 0; i < n_; ++i) {
            std::uint32_t r = 0;
            for (std::uint32_t m = rows_[order[i]]; m; m &= m - 1)
                r |= 1u << (n_ - 1 - pos[static_cast<std::size_t>(std::countr_zero(m))]);
            out[i] = r;
        }
        return out;
    }

    // union-find orbits of the group generated by the stored generators that
    // fix every vertex in `fixed`
    std::vector<vertex> orbits(const std::vector<vertex>& fixed) const {
        std::vector<vertex> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        for (const auto& g : generators_) {
            bool fixes = std::all_of(fixed.begin(), fixed.end(), [&](vertex v) { return g[v] == v; });
            if (!fixes) continue;
            for (std::size_t v = 0; v < n_; ++v) {
                auto a = find(parent, static_cast<vertex>(v));
                auto b = find(parent, g[v]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        return parent;
    }

    static vertex find(std::vector<vertex>& parent, vertex v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    static vertex find(const std::vector<vertex>& parent, vertex v) {
        while (parent[v] != v) v = parent[v];
        return v;
    }

    static std::size_t common_prefix(const std::vector<vertex>& a, const std::vector<vertex>& b) {
        std::size_t k = 0;
        while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
        return k;
    }

    void add_generator(const std::vector<vertex>& from, const std::vector<vertex>& to) {
        perm g{};
        for (std::size_t i = 0; i < n_; ++i) g[from[i]] = static_cast<std::uint8_t>(to[i]);
        bool identity = true;
        for (std::size_t v = 0; v < n_; ++v) identity = identity && g[v] == v;
        if (!identity) generators_.push_back(g);
    }

    int leaf(const std::vector<std::uint32_t>& cells, const std::vector<vertex>& prefix) {
        std::vector<vertex> order;
        order.reserve(n_);
        for (auto c : cells) order.push_back(static_cast<vertex>(std::countr_zero(c)));
        auto rows = leaf_rows(order);
        if (!have_leaf_) {
            have_leaf_ = true;
            first_rows_ = best_rows_ = rows;
            first_order_ = best_order_ = order;
            first_prefix_ = best_prefix_ = prefix;
            return no_jump;
        }
        if (rows == first_rows_) {
            add_generator(first_order_, order);
            return static_cast<int>(common_prefix(prefix, first_prefix_));
        }
        if (rows == best_rows_) {
            add_generator(best_order_, order);
            return static_cast<int>(common_prefix(prefix, best_prefix_));
        }
        if (rows > best_rows_) {
            best_rows_ = rows;
            best_order_ = order;
            best_prefix_ = prefix;
        }
        return no_jump;
    }

    int search(std::vector<std::uint32_t> cells, std::vector<vertex>& prefix) {
        refine(cells);
        if (cells.size() == n_) return leaf(cells, prefix);
        const auto depth = static_cast<int>(prefix.size());
        std::size_t target = 0;
        while (std::popcount(cells[target]) == 1) ++target;

        std::vector<vertex> explored;
        for (std::uint32_t c = cells[target]; c; c &= c - 1) {
            auto v = static_cast<vertex>(std::countr_zero(c));
            if (!explored.empty()) {
                auto orbit = orbits(prefix);
                auto rv = find(orbit, v);
                bool pruned = std::any_of(explored.begin(), explored.end(),
                                          [&](vertex w) { return find(orbit, w) == rv; });
                if (pruned) continue;
            }
            explored.push_back(v);
            auto child = cells;
            child[target] &= ~(1u << v);
            child.insert(child.begin() + static_cast<long>(target), 1u << v);
            prefix.push_back(v);
            int r = search(std::move(child), prefix);
            prefix.pop_back();
            if (r < depth) return r;
        }
        return no_jump;
    }

    small_rows rows_{};
    std::size_t n_ = 0;
    std::vector<std::uint32_t> initial_;
    std::vector<perm> generators_;
    bool have_leaf_ = false;
    small_rows first_rows_{}, best_rows_{};
    std::vector<vertex> first_order_, best_order_, first_prefix_, best_prefix_;
};

inline small_rows rows_of(const graph& g) {
    small_rows rows{};
    for (vertex u = 0; u < g.order(); ++u)
        for (vertex v : g.neighbors(u)) rows[u] |= 1u << v;
    return rows;
}

inline graph graph_from_rows(const small_rows& rows, std::size_t n) {
    std::vector<std::vector<vertex>> adj(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::uint32_t m = rows[u]; m; m &= m - 1) adj[u].push_back(static_cast<vertex>(std::countr_zero(m)));
    return graph::from_adjacency(std::move(adj));
}

/// graph6 of the relabeling `order` (position i holds original vertex order[i]).
inline std::string graph6_of_order(const small_rows& rows, std::size_t n, const std::vector<vertex>& order) {
    std::vector<std::uint8_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = static_cast<std::uint8_t>(i);
    small_rows relabeled{};
    for (std::size_t u = 0; u < n; ++u)
        for (std::uint32_t m = rows[u]; m; m &= m - 1)
            relabeled[pos[u]] |= 1u << pos[static_cast<std::size_t>(std::countr_zero(m))];
    return encode_graph6(graph_from_rows(relabeled, n));
}

inline canonical_form canonize_rows(const small_rows& rows, std::size_t n,
                                    const std::vector<std::uint32_t>& colors = {}) {
    canonizer c(rows, n, colors);
    c.run();
    canonical_form out;
    if (n == 0) {
        out.graph6 = encode_graph6(graph());
        return out;
    }
    out.labeling = c.best_order();
    out.graph6 = graph6_of_order(rows, n, out.labeling);
    out.automorphisms = c.group_order();
    return out;
}

}  // namespace detail

/// Canonical form of G; with `colors`, only color-preserving relabelings are
/// considered and equal forms mean color-preserving isomorphism (for equal
/// color multisets).
inline canonical_form canonical(const graph& g, const std::vector<std::uint32_t>& colors = {}) {
    if (g.order() > canonical_max_order)
        throw graph_error("canonical form limited to n <= " + std::to_string(canonical_max_order) +
                          ", got n=" + std::to_string(g.order()));
    if (!colors.empty() && colors.size() != g.order())
        throw graph_error("color vector size does not match vertex count");
    return detail::canonize_rows(detail::rows_of(g), g.order(), colors);
}

inline bool isomorphic(const graph& a, const graph& b) {
    return a.order() == b.order() && a.size() == b.size() && canonical(a).graph6 == canonical(b).graph6;
}

/// The graph relabeled into canonical position order.
inline graph canonical_graph(const graph& g) { return decode_graph6(canonical(g).graph6); }

}  // namespace cliquanta
