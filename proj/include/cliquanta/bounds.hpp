#pragma once

// Closed-form bounds, all in exact arithmetic: colex (Kruskal-Katona) clique
// bounds, the vertex-weight cap, the maximum clique count under a degree
// bound, independent-set counts for regular graphs, and the h(s,p,r)
// inequality with its threshold tables.

#include <string>
#include <utility>
#include <vector>

#include "clique.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "numeric.hpp"

namespace cliquanta {

class parameter_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// slack = bound - observed; the bound holds iff slack >= 0.
struct bound_report {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    rational bound = 0;
    rational observed = 0;

    rational slack() const { return bound - observed; }
    bool holds() const { return observed <= bound; }
    bool tight() const { return observed == bound; }
};

/// k_t of the colex graph C(n, m).
inline big_int kruskal_katona_bound(std::size_t n, std::size_t m, std::size_t t) {
    if (m > n * (n - (n > 0 ? 1 : 0)) / 2)
        throw parameter_error("m=" + std::to_string(m) + " exceeds C(n,2) for n=" + std::to_string(n));
    return count_cliques(colex_graph(n, m)).at(t);
}

/// (2^{r+1} - 1) / (r + 1): the largest possible weight of a degree-r vertex.
inline rational vertex_weight_cap(std::size_t r) {
    if (r < 1) throw parameter_error("vertex_weight_cap needs r >= 1");
    return rational(pow2(static_cast<unsigned>(r + 1)) - 1, big_int(r + 1));
}

/// a(2^{r+1} - 1) + 2^b with n = a(r+1) + b, the clique count of aK_{r+1} ∪ K_b.
inline big_int cutler_radcliffe_bound(std::size_t n, std::size_t r) {
    auto p = extremal_params::of(n, r);
    return big_int(p.a) * (pow2(static_cast<unsigned>(r + 1)) - 1) + pow2(static_cast<unsigned>(p.b));
}

/// i(G) = k(complement of G), the empty set included.
inline big_int independence_count(const graph& g) { return total_cliques(complement(g)); }

/// i(K_{d,d})^{1/2d} bound, compared as i(G)^{2d} <= (2^{d+1} - 1)^n.
inline bound_report kahn_zhao_check(const graph& g) {
    if (g.order() == 0) throw parameter_error("Kahn-Zhao check needs a nonempty regular graph");
    for (vertex u = 1; u < g.order(); ++u)
        if (g.degree(u) != g.degree(0))
            throw parameter_error("graph is not regular: vertex 0 has degree " + std::to_string(g.degree(0)) +
                                  ", vertex " + std::to_string(u) + " has degree " +
                                  std::to_string(g.degree(u)));
    const auto d = g.degree(0);
    if (d < 1) throw parameter_error("Kahn-Zhao check needs degree d >= 1");
    const auto n = g.order();
    bound_report rep;
    rep.name = "kahn-zhao";
    rep.params = {{"n", std::to_string(n)}, {"d", std::to_string(d)}};
    rep.bound = rational(pow_big(pow2(static_cast<unsigned>(d + 1)) - 1, static_cast<unsigned>(n)));
    rep.observed = rational(pow_big(independence_count(g), static_cast<unsigned>(2 * d)));
    return rep;
}

/// (2^{k+1} - 1)/(k + 1) with k >= 0.
inline rational weight_term(std::size_t k) {
    return rational(pow2(static_cast<unsigned>(k + 1)) - 1, big_int(k + 1));
}

/// Largest vertex weight in C(r+1, C(r,2)+p+1), which is K_r and K_{p+2}
/// glued along K_{p+1}:  (2^r-1)/r + (2^{p+2}-1)/(p+2) - (2^{p+1}-1)/(p+1).
inline rational glued_clique_weight(std::size_t r, std::size_t p) {
    if (r < 1) throw parameter_error("glued_clique_weight needs r >= 1");
    return weight_term(r - 1) + weight_term(p + 1) - weight_term(p);
}

struct h_params {
    std::size_t r = 3;
    std::size_t s = 0;
    std::size_t p = 0;
};

/// h(s,p,r) = 2^{r+1} + 2^s - 1 - (r+1+s) * glued_clique_weight(r, p).
inline rational h_function(const h_params& x) {
    if (x.r < 3) throw parameter_error("h(s,p,r) needs r >= 3");
    if (x.s > x.r) throw parameter_error("h(s,p,r) needs 0 <= s <= r");
    rational lhs(pow2(static_cast<unsigned>(x.r + 1)) + pow2(static_cast<unsigned>(x.s)) - 1);
    return lhs - rational(big_int(x.r + 1 + x.s)) * glued_clique_weight(x.r, x.p);
}

/// Largest p covered by the positivity region for this r (p ranges over
/// 0..max); the case r >= 12 reads "p <= 2r/3" over the integers.
inline std::size_t lemma31_p_max(std::size_t r) {
    if (r < 3) throw parameter_error("region defined for r >= 3");
    if (r >= 12) return 2 * r / 3;
    if (r >= 7) return r - 4;
    if (r >= 4) return r - 3;
    return 1;
}

/// Whether (r, s, p) lies in the region where h(s,p,r) > 0 is asserted.
inline bool lemma31_region(std::size_t r, std::size_t s, std::size_t p) {
    if (r < 3) throw parameter_error("region defined for r >= 3");
    if (s > r) return false;
    if (r == 3 && s == 2 && p == 1) return false;
    return p <= lemma31_p_max(r);
}

struct assertion_threshold {
    rational weight;         // lower bound on the maximum vertex weight
    std::size_t p_cap = 0;   // bound on the missing-edge count p
};

/// Piecewise thresholds for the maximum vertex weight of an extremal graph
/// and the missing-edge cap, over the ranges r = 3, 4..6, 7..11, >= 12.
inline assertion_threshold assertion_thresholds(std::size_t r) {
    if (r < 3) throw parameter_error("thresholds defined for r >= 3");
    assertion_threshold out;
    out.weight = glued_clique_weight(r, lemma31_p_max(r));
    if (r >= 12) out.p_cap = r / 3 - 1;
    else if (r >= 7) out.p_cap = 2;
    else if (r >= 4) out.p_cap = 1;
    else out.p_cap = 0;
    return out;
}

}  // namespace cliquanta
