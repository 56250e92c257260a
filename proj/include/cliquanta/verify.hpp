#pragma once

// Certificate-producing sweeps. Each checker runs one claim over an explicit
// parameter range and returns a certificate with the verdict, the graphs that
// attain equality, any counterexamples, and the number of objects examined.
//
// Checkers never spawn threads. Work is split into independent tasks handed
// to opts.run, which the caller may execute on any number of workers; results
// are merged in task order, so certificates do not depend on scheduling.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "canonical.hpp"
#include "clique.hpp"
#include "decomposition.hpp"
#include "enumerate.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "numeric.hpp"

namespace cliquanta {

using json = nlohmann::ordered_json;

enum class verdict { verified, refuted, partial };

inline const char* to_string(verdict v) {
    switch (v) {
        case verdict::verified: return "verified";
        case verdict::refuted: return "refuted";
        case verdict::partial: return "partial";
    }
    return "?";
}

struct certificate {
    std::string claim;
    json params = json::object();
    verdict result = verdict::verified;
    std::vector<std::string> witnesses;        // extremal graphs found (graph6)
    std::vector<std::string> equality_cases;   // graphs or tuples attaining equality
    std::vector<std::string> counterexamples;  // nonempty iff refuted
    std::uint64_t classes_examined = 0;
    std::uint64_t runtime_ms = 0;
    json details = json::object();

    void refute(std::string witness) {
        result = verdict::refuted;
        if (std::find(counterexamples.begin(), counterexamples.end(), witness) == counterexamples.end())
            counterexamples.push_back(std::move(witness));
    }

    json to_json(bool with_runtime = true) const {
        json j;
        j["claim"] = claim;
        j["params"] = params;
        j["verdict"] = to_string(result);
        j["witnesses"] = witnesses;
        j["equality_cases"] = equality_cases;
        j["counterexamples"] = counterexamples;
        j["classes_examined"] = classes_examined;
        if (with_runtime) j["runtime_ms"] = runtime_ms;
        j["details"] = details;
        return j;
    }
};

using task_list = std::vector<std::function<void()>>;
using task_runner = std::function<void(task_list&)>;

inline void run_serial(task_list& tasks) {
    for (auto& t : tasks) t();
}

struct verify_options {
    task_runner run = run_serial;
    /// Stop after this much wall time and report a partial verdict.
    std::optional<std::chrono::milliseconds> budget;
    /// Added to the bound under test; a negative value turns a true bound into
    /// a false one (used to exercise the refutation path).
    long long bound_delta = 0;
    std::size_t chunk = 32;
};

namespace detail {

class sweep_clock {
public:
    explicit sweep_clock(const verify_options& o)
        : start_(std::chrono::steady_clock::now()), budget_(o.budget) {}

    bool expired() const {
        return budget_ && std::chrono::steady_clock::now() - start_ >= *budget_;
    }
    std::uint64_t elapsed_ms() const {
        return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                              std::chrono::steady_clock::now() - start_)
                                              .count());
    }

private:
    std::chrono::steady_clock::time_point start_;
    std::optional<std::chrono::milliseconds> budget_;
};

struct budget_stop {};

/// Applies f to every item through the task runner; slot i stays empty when
/// the budget ran out before item i was reached.
template <class R, class T, class F>
std::vector<std::optional<R>> sweep(const std::vector<T>& items, F f, const verify_options& o,
                                    const sweep_clock& clock) {
    std::vector<std::optional<R>> out(items.size());
    task_list tasks;
    const std::size_t chunk = std::max<std::size_t>(1, o.chunk);
    for (std::size_t lo = 0; lo < items.size(); lo += chunk) {
        const std::size_t hi = std::min(items.size(), lo + chunk);
        tasks.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) {
                if (clock.expired()) return;
                out[i] = f(items[i]);
            }
        });
    }
    o.run(tasks);
    return out;
}

/// Index of the first unfinished slot (items.size() when all finished).
template <class R>
std::size_t frontier(const std::vector<std::optional<R>>& rs) {
    std::size_t i = 0;
    while (i < rs.size() && rs[i]) ++i;
    return i;
}

inline void mark_partial(certificate& c, json frontier) {
    if (c.result != verdict::refuted) c.result = verdict::partial;
    c.details["frontier"] = std::move(frontier);
}

inline std::string form_of(const graph& g) { return canonical(g).graph6; }

inline std::vector<std::string> sorted_unique(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline void finish(certificate& c, const sweep_clock& clock) { c.runtime_ms = clock.elapsed_ms(); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Counting identities on one graph
// ---------------------------------------------------------------------------

/// k(G) = 1 + sum of vertex weights, and k(G) = k(G - e) + k(e;G) for every edge.
inline certificate verify_identities(const graph& g, const verify_options& opts = {}) {
    detail::sweep_clock clock(opts);
    certificate c;
    c.claim = "identities";
    c.params = {{"n", g.order()}, {"m", g.size()}};
    const auto total = total_cliques(g);
    rational sum = 1;
    for (const auto& w : weight_map(g)) sum += w;
    c.details["total"] = to_string(total);
    c.details["one_plus_weight_sum"] = to_fraction_string(sum);
    const std::string g6 = encode_graph6(g);
    if (sum != rational(total)) {
        c.refute(g6);
        c.details["weight_identity"] = "violated";
    }
    const auto es = g.edges();
    auto rows = detail::sweep<bool>(
        es,
        [&](const edge& e) {
            auto [without, with] = count_via_edge_deletion(g, e);
            return without + with == total;
        },
        opts, clock);
    std::size_t checked = 0;
    for (std::size_t i = 0; i < rows.size() && rows[i]; ++i, ++checked)
        if (!*rows[i]) {
            c.refute(g6);
            if (!c.details.contains("edge_identity_violation"))
                c.details["edge_identity_violation"] = to_string(es[i]);
        }
    c.details["edges_checked"] = checked;
    c.classes_examined = 1;
    if (checked < es.size()) detail::mark_partial(c, {{"edges_checked", checked}});
    detail::finish(c, clock);
    return c;
}

// ---------------------------------------------------------------------------
// Maximum clique count under a degree bound
// ---------------------------------------------------------------------------

/// The graphs the characterization names as attaining the bound for (n, r):
/// aK_{r+1} ∪ K_b, and for r = 2 also (a-1)K_3 ∪ C_4 when b = 1 and
/// (a-1)K_3 ∪ C_5 when b = 2.
inline std::vector<graph> expected_maximizers(std::size_t n, std::size_t r) {
    auto [g, p] = extremal_graph(n, r);
    std::vector<graph> out{g};
    if (r == 2 && p.a >= 1 && (p.b == 1 || p.b == 2))
        out.push_back(disjoint_union(repeat(complete(3), p.a - 1), cycle(p.b + 3)));
    return out;
}

inline certificate verify_extremal(std::size_t n, std::size_t r, const verify_options& opts = {}) {
    detail::sweep_clock clock(opts);
    certificate c;
    c.claim = "thm-1.2";
    c.params = {{"n", n}, {"r", r}};
    if (opts.bound_delta != 0) c.params["bound_delta"] = opts.bound_delta;
    if (r < 1) throw parameter_error("degree bound r must be >= 1");

    std::vector<graph> classes;
    try {
        for_each_graph(n, r, [&](const graph& g) {
            if (clock.expired()) throw detail::budget_stop{};
            classes.push_back(g);
        });
    } catch (const detail::budget_stop&) {
        detail::mark_partial(c, {{"stage", "enumeration"}, {"classes_generated", classes.size()}});
        detail::finish(c, clock);
        return c;
    }

    struct row {
        big_int total;
        std::vector<rational> tri_weights;     // degree-2 vertices on a triangle
        std::vector<rational> plain_weights;   // degree-2 vertices on no triangle
    };
    auto rows = detail::sweep<row>(
        classes,
        [&](const graph& g) {
            row out{total_cliques(g), {}, {}};
            if (r == 2) {
                for (vertex u = 0; u < g.order(); ++u) {
                    if (g.degree(u) != 2) continue;
                    const auto& nb = g.neighbors(u);
                    (g.adjacent(nb[0], nb[1]) ? out.tri_weights : out.plain_weights)
                        .push_back(vertex_weight(g, u));
                }
            }
            return out;
        },
        opts, clock);
    const auto done = detail::frontier(rows);

    const big_int bound = cutler_radcliffe_bound(n, r) + opts.bound_delta;
    big_int best = -1;
    for (std::size_t i = 0; i < done; ++i) best = std::max(best, rows[i]->total);
    std::vector<std::string> maximizers, attaining;
    std::set<std::string> tri_seen, plain_seen;
    for (std::size_t i = 0; i < done; ++i) {
        const auto& x = *rows[i];
        const auto g6 = encode_graph6(classes[i]);
        if (x.total == best) maximizers.push_back(g6);
        if (x.total == bound) attaining.push_back(g6);
        if (x.total > bound) c.refute(g6);
        for (const auto& w : x.tri_weights) {
            tri_seen.insert(to_fraction_string(w));
            if (w != rational(7, 3)) c.refute(g6);
        }
        for (const auto& w : x.plain_weights) {
            plain_seen.insert(to_fraction_string(w));
            if (w != rational(2)) c.refute(g6);
        }
    }
    c.classes_examined = done;
    c.witnesses = maximizers;
    c.equality_cases = attaining;
    c.details["bound"] = to_string(bound);
    c.details["max_observed"] = to_string(best);
    if (r == 2) {
        c.details["degree2_weights"] = {{"on_triangle", std::vector<std::string>(tri_seen.begin(), tri_seen.end())},
                                        {"off_triangle", std::vector<std::string>(plain_seen.begin(), plain_seen.end())}};
    }

    if (done < classes.size()) {
        detail::mark_partial(c, {{"stage", "classes"}, {"classes_checked", done}});
        detail::finish(c, clock);
        return c;
    }

    std::vector<std::string> expected;
    for (const auto& g : expected_maximizers(n, r)) expected.push_back(detail::form_of(g));
    expected = detail::sorted_unique(std::move(expected));
    std::vector<std::string> found;
    for (const auto& g6 : attaining) found.push_back(detail::form_of(decode_graph6(g6)));
    found = detail::sorted_unique(std::move(found));
    c.details["expected_maximizers"] = expected;
    if (opts.bound_delta == 0 && best != bound) {
        c.result = verdict::refuted;
        for (const auto& g6 : maximizers) c.refute(g6);
    }
    if (opts.bound_delta == 0 && found != expected) {
        c.details["maximizer_mismatch"] = true;
        // graphs that attain the bound but are not named, or named ones that were missed
        for (const auto& f : found)
            if (!std::binary_search(expected.begin(), expected.end(), f)) c.refute(f);
        for (const auto& e : expected)
            if (!std::binary_search(found.begin(), found.end(), e)) c.refute(e);
    }
    detail::finish(c, clock);
    return c;
}

// ---------------------------------------------------------------------------
// Independent sets in regular graphs
// ---------------------------------------------------------------------------

inline certificate verify_kahn_zhao(std::size_t n, std::size_t d, const verify_options& opts = {}) {
    detail::sweep_clock clock(opts);
    certificate c;
    c.claim = "thm-1.1";
    c.params = {{"n", n}, {"d", d}};
    if (opts.bound_delta != 0) c.params["bound_delta"] = opts.bound_delta;
    if (d < 1) throw parameter_error("degree d must be >= 1");
    if ((n * d) % 2 != 0) {
        c.details["vacuous"] = "no d-regular graph exists when nd is odd";
        detail::finish(c, clock);
        return c;
    }
    const auto classes = enumerate_regular(n, d);

    struct row {
        big_int lhs;
        big_int rhs;
    };
    auto rows = detail::sweep<row>(
        classes,
        [&](const graph& g) {
            auto rep = kahn_zhao_check(g);
            return row{numerator(rep.observed), numerator(rep.bound) + opts.bound_delta};
        },
        opts, clock);
    const auto done = detail::frontier(rows);
    std::vector<std::string> tight;
    for (std::size_t i = 0; i < done; ++i) {
        const auto g6 = encode_graph6(classes[i]);
        if (rows[i]->lhs > rows[i]->rhs) c.refute(g6);
        if (rows[i]->lhs == rows[i]->rhs) tight.push_back(g6);
    }
    c.classes_examined = done;
    c.equality_cases = tight;
    c.witnesses = tight;
    c.details["bound"] = to_string(pow_big(pow2(static_cast<unsigned>(d + 1)) - 1, static_cast<unsigned>(n)) +
                                   opts.bound_delta);
    if (done < classes.size()) {
        detail::mark_partial(c, {{"classes_checked", done}});
        detail::finish(c, clock);
        return c;
    }
    // equality holds exactly for disjoint copies of K_{d,d}
    std::vector<std::string> expected;
    if (n % (2 * d) == 0) expected.push_back(detail::form_of(repeat(complete_bipartite(d, d), n / (2 * d))));
    std::vector<std::string> found;
    for (const auto& g6 : tight) found.push_back(detail::form_of(decode_graph6(g6)));
    found = detail::sorted_unique(std::move(found));
    c.details["expected_equality"] = expected;
    if (opts.bound_delta == 0 && found != expected) {
        c.details["equality_mismatch"] = true;
        for (const auto& f : found)
            if (!std::binary_search(expected.begin(), expected.end(), f)) c.refute(f);
        for (const auto& e : expected)
            if (!std::binary_search(found.begin(), found.end(), e)) c.refute(e);
    }
    detail::finish(c, clock);
    return c;
}

// ---------------------------------------------------------------------------
// Cross-edge gadgets
// ---------------------------------------------------------------------------

namespace detail {

/// One representative per color-preserving isomorphism class of placements.
inline std::vector<gamma_spec> gamma_classes(std::size_t p, std::size_t q, std::size_t t,
                                             std::uint64_t& placements) {
    std::map<std::string, gamma_spec> reps;
    for_each_gamma_placement(p, q, t, [&](const gamma_spec& s) {
        ++placements;
        auto gad = gamma_gadget(s);
        // colors: 0 = P-vertices on a missing matching edge, 1 = other P,
        // 2 = the designated Q-vertex, 3 = other Q (t = 0 uses 1 and 3 only)
        std::vector<std::uint32_t> colors(gad.g.order());
        for (std::size_t i = 0; i < 2 * p; ++i) colors[i] = i < 2 * t ? 0 : 1;
        for (std::size_t j = 0; j < q; ++j) colors[2 * p + j] = (t > 0 && j == s.designated) ? 2 : 3;
        reps.try_emplace(canonical(gad.g, colors).graph6, s);
    });
    std::vector<gamma_spec> out;
    for (auto& [form, s] : reps) out.push_back(std::move(s));
    return out;
}

}  // namespace detail

inline constexpr std::size_t gamma_p_cap = 3;
inline constexpr std::size_t gamma_q_cap = 5;
inline constexpr std::size_t gamma_union_q_cap = 4;

/// k(e;Γ) <= 2^p for every cross edge e of every valid placement with
/// 1 <= p <= p_max, 1 <= q <= q_max.
inline certificate verify_lemma29(std::size_t p_max, std::size_t q_max, const verify_options& opts = {}) {
    if (p_max > gamma_p_cap || q_max > gamma_q_cap)
        throw cap_exceeded("gadget sweep limited to p <= " + std::to_string(gamma_p_cap) + ", q <= " +
                           std::to_string(gamma_q_cap));
    detail::sweep_clock clock(opts);
    certificate c;
    c.claim = "lem-2.9";
    c.params = {{"p_max", p_max}, {"q_max", q_max}};
    if (opts.bound_delta != 0) c.params["bound_delta"] = opts.bound_delta;
    json table = json::array();
    for (std::size_t p = 1; p <= p_max; ++p) {
        big_int p_best = 0;
        for (std::size_t q = 1; q <= q_max; ++q) {
            if (clock.expired()) {
                detail::mark_partial(c, {{"p", p}, {"q", q}});
                c.details["sweep"] = table;
                detail::finish(c, clock);
                return c;
            }
            std::uint64_t placements = 0;
            auto specs = detail::gamma_classes(p, q, 0, placements);
            const big_int bound = pow2(static_cast<unsigned>(p)) + opts.bound_delta;
            auto rows = detail::sweep<big_int>(
                specs,
                [&](const gamma_spec& s) {
                    auto gad = gamma_gadget(s);
                    big_int best = 0;
                    for (const auto& e : gad.marked) best = std::max(best, edge_clique_count(gad.g, e));
                    return best;
                },
                opts, clock);
            const auto done = detail::frontier(rows);
            big_int q_best = 0;
            for (std::size_t i = 0; i < done; ++i) {
                const auto g6 = encode_graph6(gamma_gadget(specs[i]).g);
                q_best = std::max(q_best, *rows[i]);
                if (*rows[i] > bound) c.refute(g6);
                if (*rows[i] == bound) c.equality_cases.push_back(g6);
            }
            p_best = std::max(p_best, q_best);
            c.classes_examined += done;
            table.push_back({{"p", p}, {"q", q}, {"placements", placements}, {"classes", specs.size()},
                             {"bound", to_string(bound)}, {"max_observed", to_string(q_best)}});
            if (done < specs.size()) {
                detail::mark_partial(c, {{"p", p}, {"q", q}, {"classes_checked", done}});
                c.details["sweep"] = table;
                detail::finish(c, clock);
                return c;
            }
        }
        c.details["max_observed_by_p"][std::to_string(p)] = to_string(p_best);
    }
    c.details["sweep"] = table;
    detail::finish(c, clock);
    return c;
}

/// 2^{p-t} + k(K_{p+t+1} - tK_2) - k(K_{p+t} - tK_2).
inline big_int lemma210_rhs(std::size_t p, std::size_t t) {
    return pow2(static_cast<unsigned>(p - t)) + total_cliques(complete_minus_matching(p + t + 1, t)) -
           total_cliques(complete_minus_matching(p + t, t));
}

/// Cliques meeting {u_i w : i <= 2t} are at most lemma210_rhs(p, t) for every
/// valid placement with 1 <= t <= p <= p_max, 1 <= q <= q_max.
inline certificate verify_lemma210(std::size_t p_max, std::size_t t_max, std::size_t q_max,
                                   const verify_options& opts = {}) {
    if (p_max > gamma_p_cap || q_max > gamma_union_q_cap)
        throw cap_exceeded("gadget sweep limited to p <= " + std::to_string(gamma_p_cap) + ", q <= " +
                           std::to_string(gamma_union_q_cap));
    detail::sweep_clock clock(opts);
    certificate c;
    c.claim = "lem-2.10";
    c.params = {{"p_max", p_max}, {"t_max", t_max}, {"q_max", q_max}};
    if (opts.bound_delta != 0) c.params["bound_delta"] = opts.bound_delta;
    json table = json::array();
    for (std::size_t p = 1; p <= p_max; ++p)
        for (std::size_t t = 1; t <= std::min(p, t_max); ++t)
            for (std::size_t q = 1; q <= q_max; ++q) {
                if (clock.expired()) {
                    detail::mark_partial(c, {{"p", p}, {"t", t}, {"q", q}});
                    c.details["sweep"] = table;
                    detail::finish(c, clock);
                    return c;
                }
                std::uint64_t placements = 0;
                auto specs = detail::gamma_classes(p, q, t, placements);
                const big_int rhs = lemma210_rhs(p, t) + opts.bound_delta;
                auto rows = detail::sweep<big_int>(
                    specs,
                    [&](const gamma_spec& s) {
                        auto gad = gamma_gadget(s);
                        return edges_union_clique_count(gad.g, gad.marked);
                    },
                    opts, clock);
                const auto done = detail::frontier(rows);
                big_int best = 0;
                for (std::size_t i = 0; i < done; ++i) {
                    const auto g6 = encode_graph6(gamma_gadget(specs[i]).g);
                    best = std::max(best, *rows[i]);
                    if (*rows[i] > rhs) c.refute(g6);
                    if (*rows[i] == rhs) c.equality_cases.push_back(g6);
                }
                c.classes_examined += done;
                table.push_back({{"p", p}, {"t", t}, {"q", q}, {"placements", placements},
                                 {"classes", specs.size()}, {"rhs", to_string(rhs)},
                                 {"max_observed", to_string(best)}});
                if (done < specs.size()) {
                    detail::mark_partial(c, {{"p", p}, {"t", t}, {"q", q}, {"classes_checked", done}});
                    c.details["sweep"] = table;
                    detail::finish(c, clock);
                    return c;
                }
            }
    c.details["sweep"] = table;
    detail::finish(c, clock);
    return c;
}

// ---------------------------------------------------------------------------
// Positivity of h(s,p,r)
// ---------------------------------------------------------------------------

inline constexpr std::size_t h_sweep_cap = 40;

inline std::string h_tuple(std::size_t r, std::size_t s, std::size_t p) {
    return "r=" + std::to_string(r) + ",s=" + std::to_string(s) + ",p=" + std::to_string(p);
}

/// h > 0 on the region for 3 <= r <= r_max, and h(3,2,1) = 0 exactly.
inline certificate verify_lemma31(std::size_t r_max, const verify_options& opts = {}) {
    if (r_max > h_sweep_cap) throw cap_exceeded("h sweep limited to r <= " + std::to_string(h_sweep_cap));
    if (r_max < 3) throw parameter_error("h sweep needs r_max >= 3");
    detail::sweep_clock clock(opts);
    certificate c;
    c.claim = "lem-3.1";
    c.params = {{"r_max", r_max}};
    std::vector<h_params> tuples;
    for (std::size_t r = 3; r <= r_max; ++r)
        for (std::size_t s = 0; s <= r; ++s)
            for (std::size_t p = 0; p <= lemma31_p_max(r); ++p)
                if (lemma31_region(r, s, p)) tuples.push_back({r, s, p});
    auto rows = detail::sweep<rational>(tuples, [](const h_params& x) { return h_function(x); }, opts, clock);
    const auto done = detail::frontier(rows);
    rational least = -1;
    std::string least_at;
    for (std::size_t i = 0; i < done; ++i) {
        const auto& x = tuples[i];
        const auto& h = *rows[i];
        if (least_at.empty() || h < least) {
            least = h;
            least_at = h_tuple(x.r, x.s, x.p);
        }
        if (h <= 0) c.refute(h_tuple(x.r, x.s, x.p));
    }
    c.classes_examined = done;
    c.details["min_in_region"] = {{"value", to_fraction_string(least)}, {"at", least_at}};
    if (done < tuples.size()) {
        detail::mark_partial(c, {{"tuples_checked", done}});
        detail::finish(c, clock);
        return c;
    }
    // the excluded boundary tuple
    const auto boundary = h_function({3, 2, 1});
    c.details["boundary"] = {{"at", h_tuple(3, 2, 1)}, {"value", to_fraction_string(boundary)}};
    if (boundary == 0) c.equality_cases.push_back(h_tuple(3, 2, 1));
    else c.refute(h_tuple(3, 2, 1));
    detail::finish(c, clock);
    return c;
}

// ---------------------------------------------------------------------------
// Colex bound on t-clique counts
// ---------------------------------------------------------------------------

inline constexpr std::size_t kruskal_katona_cap = 7;

inline certificate verify_kruskal_katona(std::size_t n_max, const verify_options& opts = {}) {
    if (n_max > kruskal_katona_cap)
        throw cap_exceeded("colex sweep limited to n <= " + std::to_string(kruskal_katona_cap));
    detail::sweep_clock clock(opts);
    certificate c;
    c.claim = "kruskal-katona";
    c.params = {{"n_max", n_max}};
    if (opts.bound_delta != 0) c.params["bound_delta"] = opts.bound_delta;
    std::uint64_t uniqueness_checked = 0;
    json uniqueness_failures = json::array();
    json spot = json::object();
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto classes = enumerate_graphs(n, n - 1);
        const std::size_t pairs = n * (n - 1) / 2;
        std::vector<clique_profile> colex(pairs + 1);
        std::vector<std::string> colex_form(pairs + 1);
        for (std::size_t m = 0; m <= pairs; ++m) {
            colex[m] = count_cliques(colex_graph(n, m));
            colex_form[m] = detail::form_of(colex_graph(n, m));
        }
        auto rows = detail::sweep<clique_profile>(classes, [](const graph& g) { return count_cliques(g); },
                                                  opts, clock);
        const auto done = detail::frontier(rows);
        for (std::size_t i = 0; i < done; ++i) {
            const auto& g = classes[i];
            const auto m = g.size();
            const auto& prof = *rows[i];
            const auto g6 = encode_graph6(g);
            const auto [r, s] = colex_spec{n, m}.decompose();
            for (std::size_t t = 1; t <= n; ++t) {
                const big_int bound = colex[m].at(t) + opts.bound_delta;
                if (prof.at(t) > bound) c.refute(g6);
                // uniqueness of the extremal graph when s >= t - 1; k_1 and k_2
                // are fixed by n and m, so only t >= 3 can single out a graph
                if (opts.bound_delta == 0 && t >= 3 && m >= 1 && s + 1 >= t && prof.at(t) == bound) {
                    ++uniqueness_checked;
                    if (detail::form_of(g) != colex_form[m])
                        uniqueness_failures.push_back({{"n", n}, {"m", m}, {"t", t}, {"graph6", g6}});
                }
            }
            if (n == 5 && m == 7 && prof.at(3) == colex[7].at(3)) spot["equality_graphs"].push_back(g6);
        }
        c.classes_examined += done;
        if (n == 5 && done == classes.size()) {
            spot["colex"] = encode_graph6(colex_graph(5, 7));
            spot["k3_bound"] = to_string(colex[7].at(3));
        }
        if (done < classes.size()) {
            detail::mark_partial(c, {{"n", n}, {"classes_checked", done}});
            detail::finish(c, clock);
            return c;
        }
    }
    c.details["uniqueness_checked"] = uniqueness_checked;
    c.details["uniqueness_failures"] = uniqueness_failures;
    for (const auto& f : uniqueness_failures) c.refute(f["graph6"].get<std::string>());
    if (!spot.empty()) {
        // (5,7,3): every equality graph should be the colex graph itself
        bool unique = spot.contains("equality_graphs") && spot["equality_graphs"].size() == 1 &&
                      detail::form_of(decode_graph6(spot["equality_graphs"][0].get<std::string>())) ==
                          detail::form_of(colex_graph(5, 7));
        spot["unique"] = unique;
        c.details["spot_5_7_3"] = spot;
        if (opts.bound_delta == 0 && !unique)
            for (const auto& g6 : spot["equality_graphs"]) c.refute(g6.get<std::string>());
    }
    detail::finish(c, clock);
    return c;
}

}  // namespace cliquanta
