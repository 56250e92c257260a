#pragma once

// Isomorph-free generation of small graphs by canonical augmentation: grow
// one vertex at a time and keep a child only when deleting the new vertex
// gives the same class as deleting the child's canonically last vertex.
// Children of one parent are deduplicated and visited in increasing order of
// canonical graph6, which makes the stream order deterministic.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"

namespace cliquanta {

class cap_exceeded : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t enumerate_max_order = 10;

namespace detail {

/// Hereditary filter evaluated on every intermediate graph with k vertices
/// (target order n); must hold for all induced subgraphs of accepted graphs.
using prune_fn = std::function<bool(const small_rows&, std::size_t k)>;

struct augmenter {
    std::size_t target;
    std::size_t max_deg;
    prune_fn keep;
    const std::function<void(const graph&)>& visit;

    std::string deletion_class(const small_rows& rows, std::size_t n, std::size_t drop) const {
        small_rows sub{};
        std::size_t i = 0;
        for (std::size_t u = 0; u < n; ++u) {
            if (u == drop) continue;
            std::uint32_t r = 0;
            std::size_t j = 0;
            for (std::size_t v = 0; v < n; ++v) {
                if (v == drop) continue;
                if ((rows[u] >> v) & 1u) r |= 1u << j;
                ++j;
            }
            sub[i++] = r;
        }
        return canonize_rows(sub, n - 1).graph6;
    }

    void grow(const small_rows& rows, std::size_t k, const std::string& parent_form) {
        if (k == target) {
            visit(graph_from_rows(rows, k));
            return;
        }
        std::uint32_t open = 0;  // vertices that can take another neighbor
        for (std::size_t v = 0; v < k; ++v)
            if (static_cast<std::size_t>(std::popcount(rows[v])) < max_deg) open |= 1u << v;

        std::map<std::string, small_rows> children;
        // every subset S of open vertices with |S| <= max_deg becomes N(new)
        for (std::uint32_t s = open;; s = (s - 1) & open) {
            if (static_cast<std::size_t>(std::popcount(s)) <= max_deg) {
                small_rows child = rows;
                child[k] = s;
                for (std::uint32_t m = s; m; m &= m - 1) child[std::countr_zero(m)] |= 1u << k;
                if (!keep || keep(child, k + 1)) {
                    auto form = canonize_rows(child, k + 1);
                    if (!children.contains(form.graph6)) {
                        auto last = form.labeling.back();
                        bool accept = last == k ||
                                      deletion_class(child, k + 1, last) == parent_form;
                        if (accept) {
                            // store the child in canonical labeling
                            small_rows canon{};
                            std::vector<std::uint8_t> pos(k + 1);
                            for (std::size_t i = 0; i <= k; ++i) pos[form.labeling[i]] = static_cast<std::uint8_t>(i);
                            for (std::size_t u = 0; u <= k; ++u)
                                for (std::uint32_t m = child[u]; m; m &= m - 1)
                                    canon[pos[u]] |= 1u << pos[static_cast<std::size_t>(std::countr_zero(m))];
                            children.emplace(std::move(form.graph6), canon);
                        }
                    }
                }
            }
            if (s == 0) break;
        }
        for (const auto& [form, child] : children) grow(child, k + 1, form);
    }
};

inline void augment(std::size_t n, std::size_t max_deg, prune_fn keep,
                    const std::function<void(const graph&)>& visit) {
    augmenter a{n, max_deg, std::move(keep), visit};
    small_rows empty{};
    a.grow(empty, 0, encode_graph6(graph()));
}

}  // namespace detail

/// One representative per isomorphism class of n-vertex graphs with maximum
/// degree <= max_deg, streamed to visit.
inline void for_each_graph(std::size_t n, std::size_t max_deg,
                           const std::function<void(const graph&)>& visit) {
    if (n > enumerate_max_order)
        throw cap_exceeded("graph enumeration limited to n <= " + std::to_string(enumerate_max_order) +
                           ", got n=" + std::to_string(n));
    detail::augment(n, max_deg, nullptr, visit);
}

inline std::vector<graph> enumerate_graphs(std::size_t n, std::size_t max_deg) {
    std::vector<graph> out;
    for_each_graph(n, max_deg, [&](const graph& g) { out.push_back(g); });
    return out;
}

/// Largest n accepted by the regular-graph generator for degree d.
inline std::size_t regular_max_order(std::size_t d) { return d <= 3 ? 12 : 10; }

/// One representative per class of d-regular graphs on n vertices. nd odd
/// yields nothing. Intermediate graphs are pruned by the count of edges
/// still owed: an induced k-vertex subgraph of a d-regular n-vertex graph has
/// total degree deficit <= d(n-k) and each vertex deficit <= n-k.
inline void for_each_regular(std::size_t n, std::size_t d,
                             const std::function<void(const graph&)>& visit) {
    if (n > regular_max_order(d))
        throw cap_exceeded("regular enumeration limited to n <= " + std::to_string(regular_max_order(d)) +
                           " for d=" + std::to_string(d) + ", got n=" + std::to_string(n));
    if (n == 0) {
        if (d == 0) visit(graph());
        return;
    }
    if ((n * d) % 2 != 0 || d >= n) return;
    auto keep = [n, d](const detail::small_rows& rows, std::size_t k) {
        std::size_t owed = 0;
        for (std::size_t v = 0; v < k; ++v) {
            auto deficit = d - static_cast<std::size_t>(std::popcount(rows[v]));
            if (deficit > n - k) return false;
            owed += deficit;
        }
        return owed <= d * (n - k);
    };
    detail::augment(n, d, keep, [&](const graph& g) {
        if (min_degree(g) == d) visit(g);
    });
}

inline std::vector<graph> enumerate_regular(std::size_t n, std::size_t d) {
    std::vector<graph> out;
    for_each_regular(n, d, [&](const graph& g) { out.push_back(g); });
    return out;
}

}  // namespace cliquanta
