#pragma once

// Split and edge-deletion counting identities, and a divide-and-conquer
// counter driven by clique separators.
//
// A split writes G as the union of G1 and G2 with H = G1 ∩ G2. When no clique
// of G has edges from both E(G1)\E(H) and E(G2)\E(H), every clique lies in
// G1 or G2 and
//     k(G)   = k(G1) + k(G2) - k(H),
//     w_G(u) = w_G1(u) + w_G2(u) - w_H(u)   for u in V(H).

#include <algorithm>
#include <cmath>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "clique.hpp"
#include "graph.hpp"
#include "numeric.hpp"

namespace cliquanta {

/// Rejection of a split; `offending` is a clique of the parent (parent labels)
/// that uses edges private to both sides, or the edge that breaks G = G1 ∪ G2.
class split_rejected : public std::invalid_argument {
public:
    split_rejected(const std::string& what, std::vector<vertex> offending)
        : std::invalid_argument(what), offending(std::move(offending)) {}
    std::vector<vertex> offending;
};

/// G1, G2 and H carry parent labels.
struct split_witness {
    labeled_graph g1;
    labeled_graph g2;
    labeled_graph h;
};

namespace detail {

inline std::vector<edge> labeled_edges(const labeled_graph& x) {
    std::vector<edge> out;
    for (const auto& e : x.g.edges()) out.emplace_back(x.labels[e.u], x.labels[e.v]);
    std::sort(out.begin(), out.end());
    return out;
}

inline labeled_graph labeled_from_edges(std::vector<vertex> labels, const std::vector<edge>& es) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    auto idx = [&](vertex l) {
        return static_cast<vertex>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
    };
    std::vector<edge> local;
    for (const auto& e : es) local.emplace_back(idx(e.u), idx(e.v));
    return {graph::from_edges(labels.size(), local), std::move(labels)};
}

inline double subset_work(const graph& g) {
    auto order = degeneracy_order(g);
    std::vector<vertex> pos(g.order());
    for (vertex i = 0; i < g.order(); ++i) pos[order[i]] = i;
    double w = 0;
    for (vertex u = 0; u < g.order(); ++u) {
        int d = 0;
        for (vertex v : g.neighbors(u)) d += pos[v] > pos[u];
        w += std::ldexp(1.0, d);
    }
    return w;
}

}  // namespace detail

/// Graphs up to this much subset work get the exact maximal-clique check.
inline constexpr double exact_split_check_limit = 1 << 20;

/// Validates G = G1 ∪ G2 for explicitly given parts (parent labels) and the
/// no-crossing-clique hypothesis.
inline split_witness validate_split(const graph& g, const labeled_graph& g1, const labeled_graph& g2) {
    for (const auto* part : {&g1, &g2}) {
        if (part->labels.size() != part->g.order()) throw graph_error("label count mismatch in split part");
        for (vertex l : part->labels) check_vertex(g, l);
    }
    auto e1 = detail::labeled_edges(g1);
    auto e2 = detail::labeled_edges(g2);
    for (const auto& e : e1)
        if (!g.has_edge(e)) throw split_rejected("edge " + to_string(e) + " of G1 is not in G", {e.u, e.v});
    for (const auto& e : e2)
        if (!g.has_edge(e)) throw split_rejected("edge " + to_string(e) + " of G2 is not in G", {e.u, e.v});

    std::vector<char> covered(g.order(), 0);
    for (vertex l : g1.labels) covered[l] = 1;
    for (vertex l : g2.labels) covered[l] = 1;
    for (vertex u = 0; u < g.order(); ++u)
        if (!covered[u]) throw split_rejected("vertex " + std::to_string(u) + " is in neither part", {u});
    for (const auto& e : g.edges())
        if (!std::binary_search(e1.begin(), e1.end(), e) && !std::binary_search(e2.begin(), e2.end(), e))
            throw split_rejected("edge " + to_string(e) + " of G is in neither part", {e.u, e.v});

    std::vector<vertex> shared;
    {
        auto a = g1.labels;
        auto b = g2.labels;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
    }
    std::vector<edge> eh;
    std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(), std::back_inserter(eh));
    auto in = [](const std::vector<edge>& s, const edge& e) { return std::binary_search(s.begin(), s.end(), e); };

    if (detail::subset_work(g) > exact_split_check_limit) {
        // Only the separator certificate is accepted here: H induced and
        // complete, and no G edge between the two private vertex sets.
        std::vector<char> side(g.order(), 0);  // 1: only G1, 2: only G2, 3: both
        for (vertex l : g1.labels) side[l] |= 1;
        for (vertex l : g2.labels) side[l] |= 2;
        for (const auto& e : g.edges())
            if ((side[e.u] | side[e.v]) == 3 && side[e.u] != 3 && side[e.v] != 3)
                throw split_rejected("edge " + to_string(e) + " joins the private sides", {e.u, e.v});
        if (!is_clique(g, shared) || eh.size() != shared.size() * (shared.size() - (shared.empty() ? 0 : 1)) / 2)
            throw split_rejected("graph too large for the exact check and H is not a complete separator",
                                 shared);
    } else {
        for (const auto& c : maximal_cliques(g)) {
            std::optional<edge> only1;
            std::optional<edge> only2;
            for (std::size_t i = 0; i < c.size() && !(only1 && only2); ++i)
                for (std::size_t j = i + 1; j < c.size(); ++j) {
                    edge e(c[i], c[j]);
                    if (in(eh, e)) continue;
                    if (!only1 && in(e1, e)) only1 = e;
                    else if (!only2 && in(e2, e) && !in(e1, e)) only2 = e;
                }
            if (only1 && only2) {
                std::vector<vertex> bad{only1->u, only1->v, only2->u, only2->v};
                std::sort(bad.begin(), bad.end());
                bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
                throw split_rejected("clique uses edges " + to_string(*only1) + " (G1 only) and " +
                                         to_string(*only2) + " (G2 only)",
                                     std::move(bad));
            }
        }
    }
    return {g1, g2, detail::labeled_from_edges(shared, eh)};
}

/// Induced split: G1 = G[A], G2 = G[B], requires A ∪ B = V(G).
inline split_witness validate_split(const graph& g, std::span<const vertex> a, std::span<const vertex> b) {
    return validate_split(g, induced_labeled(g, a), induced_labeled(g, b));
}

inline big_int count_via_split(const split_witness& w) {
    return total_cliques(w.g1.g) + total_cliques(w.g2.g) - total_cliques(w.h.g);
}

/// u is a parent label in V(H).
inline rational weight_via_split(const split_witness& w, vertex u) {
    auto local = [u](const labeled_graph& x) -> std::optional<vertex> {
        auto it = std::find(x.labels.begin(), x.labels.end(), u);
        if (it == x.labels.end()) return std::nullopt;
        return static_cast<vertex>(it - x.labels.begin());
    };
    auto in_h = local(w.h);
    if (!in_h) throw graph_error("vertex " + std::to_string(u) + " is not in the intersection H");
    return vertex_weight(w.g1.g, *local(w.g1)) + vertex_weight(w.g2.g, *local(w.g2)) -
           vertex_weight(w.h.g, *in_h);
}

/// (k(G - e), k(e; G)).
inline std::pair<big_int, big_int> count_via_edge_deletion(const graph& g, const edge& e) {
    if (!g.has_edge(e)) throw graph_error("edge " + to_string(e) + " is not in the graph");
    return {total_cliques(delete_edge(g, e)), edge_clique_count(g, e)};
}

struct clique_separator {
    std::vector<vertex> separator;                // sorted; empty when G is disconnected
    std::vector<std::vector<vertex>> components;  // components of G - S, by smallest vertex

    std::size_t largest_side() const {
        std::size_t m = 0;
        for (const auto& c : components) m = std::max(m, c.size() + separator.size());
        return m;
    }
};

struct separator_options {
    std::size_t max_clique = 8;
    /// Above this order only the empty separator (components) is tried.
    std::size_t max_search_order = 512;
};

namespace detail {

inline std::vector<std::vector<vertex>> components_without(const graph& g, const std::vector<vertex>& removed) {
    std::vector<char> gone(g.order(), 0);
    for (vertex v : removed) gone[v] = 1;
    std::vector<char> seen(g.order(), 0);
    std::vector<std::vector<vertex>> comps;
    std::vector<vertex> stack;
    for (vertex s = 0; s < g.order(); ++s) {
        if (gone[s] || seen[s]) continue;
        std::vector<vertex> comp;
        stack.assign(1, s);
        seen[s] = 1;
        while (!stack.empty()) {
            vertex u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (vertex v : g.neighbors(u))
                if (!gone[v] && !seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace detail

/// The clique S (|S| <= max_clique, S = ∅ allowed) whose removal disconnects
/// G and minimizes the largest side |C ∪ S|; ties go to smaller |S|, then to
/// the lexicographically smallest S.
inline std::optional<clique_separator> find_clique_separator(const graph& g, separator_options opts = {}) {
    std::optional<clique_separator> best;
    auto consider = [&](const std::vector<vertex>& s) {
        auto comps = detail::components_without(g, s);
        if (comps.size() < 2) return;
        clique_separator c{s, std::move(comps)};
        if (!best) {
            best = std::move(c);
            return;
        }
        auto key = [](const clique_separator& x) {
            return std::make_tuple(x.largest_side(), x.separator.size(), x.separator);
        };
        if (key(c) < key(*best)) best = std::move(c);
    };
    consider({});
    if (g.order() <= opts.max_search_order)
        for_each_clique(g, opts.max_clique, consider);
    return best;
}

struct decomposition_node {
    enum class kind { leaf, split, edge_delete };

    kind type = kind::leaf;
    std::vector<vertex> vertices;   // root labels of this node's graph
    std::vector<vertex> separator;  // split nodes (root labels)
    std::optional<edge> deleted;    // edge_delete nodes (root labels)
    big_int total = 0;
    std::vector<decomposition_node> children;
};

inline const char* to_string(decomposition_node::kind k) {
    switch (k) {
        case decomposition_node::kind::leaf: return "leaf";
        case decomposition_node::kind::split: return "split";
        case decomposition_node::kind::edge_delete: return "edge_delete";
    }
    return "?";
}

struct decompose_options {
    /// Graphs with at most this many vertices are counted directly.
    std::size_t leaf_order = 4;
    separator_options separators{};
    /// When no separator exists, peel an edge: k(G) = k(G - e) + k(e;G).
    bool edge_deletion = false;
};

namespace detail {

inline decomposition_node decompose_rec(const graph& g, const std::vector<vertex>& labels,
                                        const decompose_options& opts) {
    decomposition_node node;
    node.vertices = labels;
    auto leaf = [&] {
        node.type = decomposition_node::kind::leaf;
        node.total = total_cliques(g);
        return node;
    };
    if (g.order() <= opts.leaf_order) return leaf();

    if (auto sep = find_clique_separator(g, opts.separators)) {
        node.type = decomposition_node::kind::split;
        for (vertex v : sep->separator) node.separator.push_back(labels[v]);
        big_int sum = 0;
        for (const auto& comp : sep->components) {
            std::vector<vertex> side = comp;
            side.insert(side.end(), sep->separator.begin(), sep->separator.end());
            std::sort(side.begin(), side.end());
            std::vector<vertex> child_labels;
            for (vertex v : side) child_labels.push_back(labels[v]);
            node.children.push_back(decompose_rec(induced_subgraph(g, side), child_labels, opts));
            sum += node.children.back().total;
        }
        // each extra side re-counts the 2^|S| cliques of the separator
        node.total = sum - big_int(sep->components.size() - 1) * pow2(static_cast<unsigned>(sep->separator.size()));
        return node;
    }

    if (opts.edge_deletion && g.size() > 0) {
        // edge with the fewest common neighbors, then smallest
        auto es = g.edges();
        auto best = es.front();
        std::size_t best_common = common_neighbors(g, best.u, best.v).size();
        for (const auto& e : es) {
            auto c = common_neighbors(g, e.u, e.v).size();
            if (c < best_common) {
                best = e;
                best_common = c;
            }
        }
        node.type = decomposition_node::kind::edge_delete;
        node.deleted = edge(labels[best.u], labels[best.v]);
        node.children.push_back(decompose_rec(delete_edge(g, best), labels, opts));
        decomposition_node through;
        through.type = decomposition_node::kind::leaf;
        for (vertex v : common_neighbors(g, best.u, best.v)) through.vertices.push_back(labels[v]);
        through.total = edge_clique_count(g, best);
        node.children.push_back(std::move(through));
        node.total = node.children[0].total + node.children[1].total;
        return node;
    }
    return leaf();
}

}  // namespace detail

struct decomposition_result {
    big_int total;
    decomposition_node tree;
};

inline decomposition_result decompose_count(const graph& g, decompose_options opts = {}) {
    std::vector<vertex> labels(g.order());
    for (vertex i = 0; i < g.order(); ++i) labels[i] = i;
    auto tree = detail::decompose_rec(g, labels, opts);
    return {tree.total, std::move(tree)};
}

namespace detail {

inline std::vector<vertex> positions_of(const std::vector<vertex>& labels, const std::vector<vertex>& wanted) {
    std::vector<vertex> out;
    for (vertex l : wanted) {
        auto it = std::find(labels.begin(), labels.end(), l);
        if (it == labels.end()) throw graph_error("decomposition node refers to an unknown vertex");
        out.push_back(static_cast<vertex>(it - labels.begin()));
    }
    return out;
}

inline bool tree_consistent_rec(const graph& current, const decomposition_node& node) {
    using kind = decomposition_node::kind;
    switch (node.type) {
        case kind::leaf:
            return node.children.empty() && total_cliques(current) == node.total;
        case kind::split: {
            big_int sum = 0;
            for (const auto& c : node.children) {
                auto sub = induced_subgraph(current, positions_of(node.vertices, c.vertices));
                if (!tree_consistent_rec(sub, c)) return false;
                sum += c.total;
            }
            if (node.children.empty()) return false;
            return node.total == sum - big_int(node.children.size() - 1) *
                                           pow2(static_cast<unsigned>(node.separator.size()));
        }
        case kind::edge_delete: {
            if (node.children.size() != 2 || !node.deleted) return false;
            auto ends = positions_of(node.vertices, {node.deleted->u, node.deleted->v});
            edge local(ends[0], ends[1]);
            if (!current.has_edge(local)) return false;
            if (!tree_consistent_rec(delete_edge(current, local), node.children[0])) return false;
            auto common = common_neighbors(current, local.u, local.v);
            if (positions_of(node.vertices, node.children[1].vertices) != common) return false;
            if (node.children[1].total != edge_clique_count(current, local)) return false;
            return node.total == node.children[0].total + node.children[1].total;
        }
    }
    return false;
}

}  // namespace detail

/// Re-derives every node: leaves by direct count, split nodes by
/// inclusion-exclusion over their sides, edge-deletion nodes by
/// k(G) = k(G - e) + k(e;G).
inline bool tree_consistent(const graph& root, const decomposition_node& node) {
    if (node.vertices.size() != root.order()) return false;
    return detail::tree_consistent_rec(root, node);
}

}  // namespace cliquanta
