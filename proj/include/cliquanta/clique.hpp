#pragma once

// Exact clique counting, vertex clique weights, edge clique counts and
// maximal clique listing.
//
// Every nonempty clique is charged to its earliest vertex in a degeneracy
// (smallest-last) order, so the counting kernel only ever looks inside the
// later-neighborhood N+(u) of a single vertex. For |N+(u)| small the kernel
// sweeps all 2^|N+(u)| subsets with an O(1) update each; for larger
// neighborhoods it switches to a branching search that closes out any
// candidate set that is itself a clique with binomial coefficients.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iterator>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "graph.hpp"
#include "numeric.hpp"

namespace cliquanta {

/// counts[t] = number of t-vertex cliques; counts[0] = 1 for the empty clique.
struct clique_profile {
    std::vector<big_int> counts{1};

    big_int total() const {
        big_int s = 0;
        for (const auto& c : counts) s += c;
        return s;
    }
    big_int total_nonempty() const { return total() - 1; }
    std::size_t clique_number() const { return counts.size() - 1; }
    big_int at(std::size_t t) const { return t < counts.size() ? counts[t] : big_int(0); }

    friend bool operator==(const clique_profile&, const clique_profile&) = default;
};

/// Instrumentation of the counting kernel.
struct kernel_stats {
    std::uint64_t subsets_swept = 0;  // subset-sweep updates
    std::uint64_t search_nodes = 0;   // branching-search nodes
    double predicted_work = 0;        // sum over u of 2^{d+(u)}
    std::size_t max_later_degree = 0;

    std::uint64_t observed_work() const { return subsets_swept + search_nodes; }
};

struct kernel_options {
    /// Later-neighborhoods up to this size use the full subset sweep.
    unsigned sweep_limit = 12;
};

/// Smallest-last order: repeatedly removes a minimum-degree vertex and lists
/// vertices in removal order, so each vertex has at most degeneracy(G)
/// neighbors after it.
inline std::vector<vertex> degeneracy_order(const graph& g) {
    const auto n = g.order();
    std::vector<vertex> order;
    order.reserve(n);
    if (n == 0) return order;
    const auto maxd = max_degree(g);
    std::vector<std::size_t> deg(n);
    std::vector<std::vector<vertex>> buckets(maxd + 1);
    for (vertex u = 0; u < n; ++u) {
        deg[u] = g.degree(u);
        buckets[deg[u]].push_back(u);
    }
    std::vector<char> removed(n, 0);
    std::size_t d = 0;
    for (std::size_t step = 0; step < n; ++step) {
        d = d > 0 ? d - 1 : 0;
        while (true) {
            while (buckets[d].empty()) ++d;
            vertex u = buckets[d].back();
            buckets[d].pop_back();
            if (removed[u] || deg[u] != d) continue;  // stale entry
            removed[u] = 1;
            order.push_back(u);
            for (vertex v : g.neighbors(u))
                if (!removed[v]) {
                    --deg[v];
                    buckets[deg[v]].push_back(v);
                }
            break;
        }
    }
    return order;
}

namespace detail {

/// Fixed-capacity word mask for local neighborhoods beyond 64 vertices.
class wide_mask {
public:
    explicit wide_mask(std::size_t nbits = 0) : w_((nbits + 63) / 64, 0) {}
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }
    bool none() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }
    wide_mask operator&(const wide_mask& o) const {
        wide_mask r;
        r.w_.resize(w_.size());
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }
    bool subset_of(const wide_mask& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    /// Bits strictly above i.
    wide_mask above(std::size_t i) const {
        wide_mask r = *this;
        std::size_t wi = i >> 6;
        for (std::size_t k = 0; k < wi; ++k) r.w_[k] = 0;
        std::uint64_t keep = (i & 63) == 63 ? 0 : ~std::uint64_t{0} << ((i & 63) + 1);
        r.w_[wi] &= keep;
        return r;
    }
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            auto x = w_[k];
            while (x) {
                f(k * 64 + static_cast<std::size_t>(std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }

private:
    std::vector<std::uint64_t> w_;
};

inline std::size_t mask_count(std::uint64_t m) { return static_cast<std::size_t>(std::popcount(m)); }
inline std::size_t mask_count(const wide_mask& m) { return m.count(); }
inline bool mask_none(std::uint64_t m) { return m == 0; }
inline bool mask_none(const wide_mask& m) { return m.none(); }
inline bool mask_subset(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }
inline bool mask_subset(const wide_mask& a, const wide_mask& b) { return a.subset_of(b); }
inline std::uint64_t mask_above(std::uint64_t m, std::size_t i) {
    return i >= 63 ? 0 : m & (~std::uint64_t{0} << (i + 1));
}
inline wide_mask mask_above(const wide_mask& m, std::size_t i) { return m.above(i); }
template <class F>
void mask_for_each(std::uint64_t m, F&& f) {
    while (m) {
        f(static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
    }
}
template <class F>
void mask_for_each(const wide_mask& m, F&& f) {
    m.for_each(std::forward<F>(f));
}
inline void mask_set(std::uint64_t& m, std::size_t i) { m |= std::uint64_t{1} << i; }
inline void mask_set(wide_mask& m, std::size_t i) { m.set(i); }

/// Per-size counters: 64-bit fast path, spilling to big integers on overflow.
class count_accumulator {
public:
    void add(std::size_t t, std::uint64_t x) {
        grow(t);
        auto& s = small_[t];
        if (s > std::numeric_limits<std::uint64_t>::max() - x) {
            big_[t] += s;
            s = x;
        } else {
            s += x;
        }
    }
    void add(std::size_t t, const big_int& x) {
        grow(t);
        big_[t] += x;
    }
    clique_profile finish() const {
        clique_profile p;
        p.counts.assign(small_.size(), 0);
        for (std::size_t t = 0; t < small_.size(); ++t) p.counts[t] = big_[t] + small_[t];
        while (p.counts.size() > 1 && p.counts.back() == 0) p.counts.pop_back();
        if (p.counts.empty()) p.counts.push_back(1);
        return p;
    }

private:
    void grow(std::size_t t) {
        if (t >= small_.size()) {
            small_.resize(t + 1, 0);
            big_.resize(t + 1, 0);
        }
    }
    std::vector<std::uint64_t> small_;
    std::vector<big_int> big_;
};

inline const std::array<std::array<std::uint64_t, 65>, 65>& small_binomials() {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, 65>, 65> c{};
        for (std::size_t n = 0; n <= 64; ++n) {
            c[n][0] = 1;
            for (std::size_t k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
        return c;
    }();
    return table;
}

/// Adds C(p, j) to counts[base + j] for j = 1..p: all nonempty extensions of
/// the current clique by a candidate set that is itself complete.
inline void add_complete_extensions(count_accumulator& acc, std::size_t base, std::size_t p) {
    if (p <= 64) {
        const auto& c = small_binomials();
        for (std::size_t j = 1; j <= p; ++j) acc.add(base + j, c[p][j]);
    } else {
        for (std::size_t j = 1; j <= p; ++j)
            acc.add(base + j, binomial(static_cast<unsigned>(p), static_cast<unsigned>(j)));
    }
}

template <class Mask>
struct local_search {
    const std::vector<Mask>& adj;  // adj[i] = local neighbors of i
    count_accumulator& acc;
    kernel_stats& stats;

    bool candidates_complete(const Mask& cand) const {
        bool ok = true;
        mask_for_each(cand, [&](std::size_t v) {
            if (!ok) return;
            Mask others = cand;
            // cand \ {v} must be inside N(v)
            Mask nv = adj[v];
            mask_set(nv, v);
            if (!mask_subset(others, nv)) ok = false;
        });
        return ok;
    }

    // The current clique has `size` vertices; `cand` holds the vertices that
    // may extend it (all later than its last vertex).
    void run(std::size_t size, const Mask& cand) {
        ++stats.search_nodes;
        acc.add(size, std::uint64_t{1});
        if (mask_none(cand)) return;
        if (candidates_complete(cand)) {
            add_complete_extensions(acc, size, mask_count(cand));
            return;
        }
        mask_for_each(cand, [&](std::size_t v) { run(size + 1, mask_above(cand, v) & adj[v]); });
    }
};

}  // namespace detail

/// Counts cliques of every size exactly, the empty clique included.
inline clique_profile count_cliques(const graph& g, kernel_stats* stats_out = nullptr,
                                    kernel_options opts = {}) {
    kernel_stats stats;
    detail::count_accumulator acc;
    acc.add(0, std::uint64_t{1});
    const auto n = g.order();
    if (n == 0) {
        if (stats_out) *stats_out = stats;
        return acc.finish();
    }

    const auto order = degeneracy_order(g);
    std::vector<vertex> pos(n);
    for (vertex i = 0; i < n; ++i) pos[order[i]] = i;

    std::vector<int> local_index(n, -1);
    std::vector<vertex> later;
    std::vector<std::uint64_t> small_adj;
    std::vector<std::uint8_t> sweep_flag;

    for (vertex u : order) {
        later.clear();
        for (vertex v : g.neighbors(u))
            if (pos[v] > pos[u]) later.push_back(v);
        const std::size_t d = later.size();
        stats.max_later_degree = std::max(stats.max_later_degree, d);
        stats.predicted_work += std::ldexp(1.0, static_cast<int>(d));
        for (std::size_t i = 0; i < d; ++i) local_index[later[i]] = static_cast<int>(i);

        if (d <= 64) {
            small_adj.assign(d, 0);
            for (std::size_t i = 0; i < d; ++i)
                for (vertex w : g.neighbors(later[i]))
                    if (int j = local_index[w]; j >= 0) small_adj[i] |= std::uint64_t{1} << j;

            if (d <= opts.sweep_limit) {
                // Subset sweep: a mask is a clique iff mask minus its lowest
                // element is a clique adjacent to that element.
                const std::size_t full = std::size_t{1} << d;
                sweep_flag.assign(full, 0);
                sweep_flag[0] = 1;
                std::array<std::uint64_t, 66> local_counts{};
                local_counts[1] = 1;  // {u}
                for (std::size_t mask = 1; mask < full; ++mask) {
                    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
                    const std::size_t rest = mask & (mask - 1);
                    if (sweep_flag[rest] && (small_adj[low] & rest) == rest) {
                        sweep_flag[mask] = 1;
                        ++local_counts[static_cast<std::size_t>(std::popcount(mask)) + 1];
                    }
                }
                stats.subsets_swept += full;
                for (std::size_t t = 1; t <= d + 1; ++t)
                    if (local_counts[t]) acc.add(t, local_counts[t]);
            } else {
                std::uint64_t all = d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
                detail::local_search<std::uint64_t> search{small_adj, acc, stats};
                search.run(1, all);
            }
        } else {
            std::vector<detail::wide_mask> wide(d, detail::wide_mask(d));
            for (std::size_t i = 0; i < d; ++i)
                for (vertex w : g.neighbors(later[i]))
                    if (int j = local_index[w]; j >= 0) wide[i].set(static_cast<std::size_t>(j));
            detail::wide_mask all(d);
            for (std::size_t i = 0; i < d; ++i) all.set(i);
            detail::local_search<detail::wide_mask> search{wide, acc, stats};
            search.run(1, all);
        }

        for (vertex v : later) local_index[v] = -1;
    }
    if (stats_out) *stats_out = stats;
    return acc.finish();
}

inline big_int total_cliques(const graph& g) { return count_cliques(g).total(); }

/// Reference counter: tests all 2^n vertex subsets. Limited to n <= 25.
inline clique_profile brute_force_profile(const graph& g) {
    const auto n = g.order();
    if (n > 25) throw graph_error("brute-force clique count limited to n <= 25, got n=" + std::to_string(n));
    std::vector<std::uint32_t> rows(n, 0);
    for (vertex u = 0; u < n; ++u)
        for (vertex v : g.neighbors(u)) rows[u] |= std::uint32_t{1} << v;
    std::vector<std::uint64_t> counts(n + 1, 0);
    const std::uint32_t full = n == 32 ? ~0u : (std::uint32_t{1} << n);
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        bool complete = true;
        for (std::uint32_t rest = mask; rest && complete; rest &= rest - 1) {
            auto u = static_cast<unsigned>(std::countr_zero(rest));
            if ((mask & ~(rows[u] | (std::uint32_t{1} << u))) != 0) complete = false;
        }
        if (complete) ++counts[static_cast<std::size_t>(std::popcount(mask))];
    }
    clique_profile p;
    p.counts.assign(counts.begin(), counts.end());
    while (p.counts.size() > 1 && p.counts.back() == 0) p.counts.pop_back();
    return p;
}

/// k_i(u;G) for i = 0..: index i holds the number of i-cliques containing u
/// (index 0 is always 0).
inline std::vector<big_int> vertex_profile(const graph& g, vertex u) {
    check_vertex(g, u);
    auto local = count_cliques(induced_subgraph(g, g.neighbors(u)));
    std::vector<big_int> out(local.counts.size() + 1, 0);
    for (std::size_t j = 0; j < local.counts.size(); ++j) out[j + 1] = local.counts[j];
    return out;
}

/// w_G(u) = sum over i >= 1 of k_i(u;G) / i.
inline rational vertex_weight(const graph& g, vertex u) {
    auto prof = vertex_profile(g, u);
    rational w = 0;
    for (std::size_t i = 1; i < prof.size(); ++i) w += rational(prof[i], big_int(i));
    return w;
}

inline std::vector<rational> weight_map(const graph& g) {
    std::vector<rational> out;
    out.reserve(g.order());
    for (vertex u = 0; u < g.order(); ++u) out.push_back(vertex_weight(g, u));
    return out;
}

inline std::vector<vertex> common_neighbors(const graph& g, vertex u, vertex v) {
    std::vector<vertex> out;
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// k(e;G): cliques containing both endpoints of e.
inline big_int edge_clique_count(const graph& g, const edge& e) {
    if (!g.has_edge(e)) throw graph_error("edge " + to_string(e) + " is not in the graph");
    return total_cliques(induced_subgraph(g, common_neighbors(g, e.u, e.v)));
}

/// Number of cliques containing at least one edge of es, as k(G) - k(G - es).
inline big_int edges_union_clique_count(const graph& g, std::span<const edge> es) {
    if (es.empty()) throw graph_error("edge set must be nonempty");
    std::vector<edge> unique(es.begin(), es.end());
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    for (const auto& e : unique)
        if (!g.has_edge(e)) throw graph_error("edge " + to_string(e) + " is not in the graph");
    return total_cliques(g) - total_cliques(delete_edges(g, unique));
}

/// Calls f(clique) for every inclusion-maximal clique (sorted vertex list).
/// Bron-Kerbosch with Tomita pivoting, seeded along a degeneracy order.
inline void for_each_maximal_clique(const graph& g,
                                    const std::function<void(const std::vector<vertex>&)>& f) {
    const auto n = g.order();
    if (n == 0) {
        f({});  // the empty clique is maximal in K_0
        return;
    }
    const auto order = degeneracy_order(g);
    std::vector<vertex> pos(n);
    for (vertex i = 0; i < n; ++i) pos[order[i]] = i;

    auto intersect = [&](const std::vector<vertex>& s, vertex v) {
        std::vector<vertex> out;
        auto nb = g.neighbors(v);
        std::set_intersection(s.begin(), s.end(), nb.begin(), nb.end(), std::back_inserter(out));
        return out;
    };

    std::vector<vertex> r;
    std::function<void(std::vector<vertex>, std::vector<vertex>)> expand =
        [&](std::vector<vertex> p, std::vector<vertex> x) {
            if (p.empty()) {
                if (x.empty()) {
                    auto c = r;
                    std::sort(c.begin(), c.end());
                    f(c);
                }
                return;
            }
            // pivot maximizing |P ∩ N(pivot)| over P ∪ X
            vertex pivot = p.front();
            std::size_t best = 0;
            for (const auto* set : {&p, &x})
                for (vertex w : *set) {
                    auto c = intersect(p, w).size();
                    if (c > best || (c == best && w < pivot)) {
                        best = c;
                        pivot = w;
                    }
                }
            std::vector<vertex> branch;
            auto pn = g.neighbors(pivot);
            std::set_difference(p.begin(), p.end(), pn.begin(), pn.end(), std::back_inserter(branch));
            for (vertex v : branch) {
                r.push_back(v);
                expand(intersect(p, v), intersect(x, v));
                r.pop_back();
                p.erase(std::lower_bound(p.begin(), p.end(), v));
                x.insert(std::lower_bound(x.begin(), x.end(), v), v);
            }
        };

    for (vertex v : order) {
        std::vector<vertex> p;
        std::vector<vertex> x;
        for (vertex w : g.neighbors(v)) (pos[w] > pos[v] ? p : x).push_back(w);
        r.assign(1, v);
        expand(std::move(p), std::move(x));
    }
}

/// All maximal cliques, each sorted, in lexicographic order.
inline std::vector<std::vector<vertex>> maximal_cliques(const graph& g) {
    std::vector<std::vector<vertex>> out;
    for_each_maximal_clique(g, [&](const std::vector<vertex>& c) { out.push_back(c); });
    std::sort(out.begin(), out.end());
    return out;
}

/// Calls f(clique) for every nonempty clique with at most max_size vertices
/// (sorted vertex lists; order follows the degeneracy order of the first vertex).
inline void for_each_clique(const graph& g, std::size_t max_size,
                            const std::function<void(const std::vector<vertex>&)>& f) {
    const auto n = g.order();
    const auto order = degeneracy_order(g);
    std::vector<vertex> pos(n);
    for (vertex i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<vertex> current;
    std::function<void(const std::vector<vertex>&)> grow = [&](const std::vector<vertex>& cand) {
        auto c = current;
        std::sort(c.begin(), c.end());
        f(c);
        if (current.size() >= max_size) return;
        for (vertex v : cand) {
            std::vector<vertex> next;
            for (vertex w : cand)
                if (pos[w] > pos[v] && g.adjacent(v, w)) next.push_back(w);
            current.push_back(v);
            grow(next);
            current.pop_back();
        }
    };
    if (max_size == 0) return;
    for (vertex u : order) {
        std::vector<vertex> cand;
        for (vertex v : g.neighbors(u))
            if (pos[v] > pos[u]) cand.push_back(v);
        current.assign(1, u);
        grow(cand);
    }
}

}  // namespace cliquanta
