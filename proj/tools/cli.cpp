#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include <cliquanta/bounds.hpp>
#include <cliquanta/clique.hpp>
#include <cliquanta/decomposition.hpp>
#include <cliquanta/enumerate.hpp>
#include <cliquanta/families.hpp>
#include <cliquanta/io.hpp>
#include <cliquanta/verify.hpp>

namespace cliquanta::cli {

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// shared options
struct run_config {
    std::string g6;
    std::string input;
    bool one_based = false;
    std::string format = "json";
    std::string out;
    std::size_t workers = 1;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw io_error("error reading " + path);
    return ss.str();
}

graph load_graph(const run_config& cfg) {
    if (!cfg.g6.empty() && !cfg.input.empty()) throw usage_error("give exactly one of --g6 and --input");
    if (!cfg.g6.empty()) return decode_graph6(cfg.g6);
    if (!cfg.input.empty()) return parse_graph_text(read_file(cfg.input), cfg.one_based);
    throw usage_error("a graph is required: --g6 STRING or --input FILE");
}

std::string label(const run_config& cfg, vertex v) { return std::to_string(v + (cfg.one_based ? 1 : 0)); }

edge parse_edge(const run_config& cfg, const std::string& text) {
    auto sep = text.find_first_of(",-");
    if (sep == std::string::npos) throw usage_error("edge must look like U,V: " + text);
    try {
        long long u = std::stoll(text.substr(0, sep));
        long long v = std::stoll(text.substr(sep + 1));
        const long long base = cfg.one_based ? 1 : 0;
        if (u < base || v < base) throw usage_error("edge endpoint below " + std::to_string(base) + ": " + text);
        return edge(static_cast<vertex>(u - base), static_cast<vertex>(v - base));
    } catch (const std::logic_error&) {
        throw usage_error("edge must look like U,V: " + text);
    }
}

void emit(const run_config& cfg, const json& j, const std::string& text, std::ostream& out) {
    const std::string body = cfg.format == "text" ? text : j.dump(2) + "\n";
    if (cfg.out.empty()) {
        out << body;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw io_error("cannot write " + cfg.out);
    f << body;
    if (!f) throw io_error("error writing " + cfg.out);
}

std::vector<std::string> to_strings(const std::vector<big_int>& xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(to_string(x));
    return out;
}

json report_json(const bound_report& rep) {
    json params = json::object();
    for (const auto& [k, v] : rep.params) params[k] = v;
    return {{"name", rep.name},
            {"params", params},
            {"bound", to_exact_string(rep.bound)},
            {"observed", to_exact_string(rep.observed)},
            {"slack", to_exact_string(rep.slack())},
            {"tight", rep.tight()},
            {"holds", rep.holds()}};
}

json node_json(const run_config& cfg, const decomposition_node& node) {
    json j;
    j["kind"] = to_string(node.type);
    std::vector<std::string> vs;
    for (auto v : node.vertices) vs.push_back(label(cfg, v));
    j["vertices"] = vs;
    if (node.type == decomposition_node::kind::split) {
        std::vector<std::string> s;
        for (auto v : node.separator) s.push_back(label(cfg, v));
        j["separator"] = s;
    }
    if (node.deleted) j["deleted_edge"] = to_string(*node.deleted, cfg.one_based);
    j["total"] = to_string(node.total);
    if (!node.children.empty()) {
        j["children"] = json::array();
        for (const auto& c : node.children) j["children"].push_back(node_json(cfg, c));
    }
    return j;
}

void node_text(const run_config& cfg, const decomposition_node& node, int depth, std::ostringstream& os) {
    os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << to_string(node.type) << " total="
       << node.total << " vertices={";
    for (std::size_t i = 0; i < node.vertices.size(); ++i) os << (i ? "," : "") << label(cfg, node.vertices[i]);
    os << "}";
    if (node.type == decomposition_node::kind::split) {
        os << " separator={";
        for (std::size_t i = 0; i < node.separator.size(); ++i)
            os << (i ? "," : "") << label(cfg, node.separator[i]);
        os << "}";
    }
    if (node.deleted) os << " deleted=" << to_string(*node.deleted, cfg.one_based);
    os << "\n";
    for (const auto& c : node.children) node_text(cfg, c, depth + 1, os);
}

std::string certificate_text(const certificate& c) {
    std::ostringstream os;
    os << c.claim << " " << c.params.dump() << " " << to_string(c.result) << " classes=" << c.classes_examined
       << " equality=" << c.equality_cases.size();
    if (!c.counterexamples.empty()) os << " counterexample=" << c.counterexamples.front();
    os << "\n";
    return os.str();
}

int verdict_code(verdict v) {
    switch (v) {
        case verdict::verified: return exit_ok;
        case verdict::refuted: return exit_refuted;
        case verdict::partial: return exit_partial;
    }
    return exit_ok;
}

std::size_t get_size(const json& row, const char* key, std::optional<std::size_t> fallback = std::nullopt) {
    if (!row.contains(key)) {
        if (fallback) return *fallback;
        throw usage_error(std::string("claim needs parameter '") + key + "'");
    }
    const auto& v = row[key];
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw usage_error(std::string("parameter '") + key + "' must be a nonnegative integer");
    return v.get<std::size_t>();
}

std::string canonical_claim(std::string claim) {
    std::transform(claim.begin(), claim.end(), claim.begin(), [](unsigned char ch) { return std::tolower(ch); });
    claim.erase(std::remove(claim.begin(), claim.end(), '-'), claim.end());
    if (claim == "extremal") return "thm1.2";
    if (claim == "kahnzhao" || claim == "kz") return "thm1.1";
    if (claim == "kruskalkatona") return "kk";
    return claim;
}

}  // namespace

std::size_t default_workers() {
    if (const char* env = std::getenv("CLIQUANTA_WORKERS")) {
        try {
            auto n = std::stoul(env);
            if (n > 0) return n;
        } catch (const std::logic_error&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

task_runner make_runner(std::size_t workers) {
    if (workers <= 1) return run_serial;
    return [workers](task_list& tasks) {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto work = [&] {
            for (;;) {
                auto i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                try {
                    tasks[i]();
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        };
        std::vector<std::jthread> pool;
        const auto count = std::min(workers, tasks.size());
        for (std::size_t w = 1; w < count; ++w) pool.emplace_back(work);
        work();
        pool.clear();
        if (failure) std::rethrow_exception(failure);
    };
}

certificate run_claim(const json& row, const verify_options& base) {
    if (!row.is_object() || !row.contains("claim") || !row["claim"].is_string())
        throw usage_error("row needs a string field 'claim'");
    verify_options opts = base;
    if (row.contains("bound_delta")) {
        if (!row["bound_delta"].is_number_integer()) throw usage_error("bound_delta must be an integer");
        opts.bound_delta = row["bound_delta"].get<long long>();
    }
    if (row.contains("budget_ms")) opts.budget = std::chrono::milliseconds(get_size(row, "budget_ms"));
    const auto claim = canonical_claim(row["claim"].get<std::string>());
    if (claim == "identities") {
        if (!row.contains("g6") || !row["g6"].is_string()) throw usage_error("identities needs a graph6 field 'g6'");
        return verify_identities(decode_graph6(row["g6"].get<std::string>()), opts);
    }
    if (claim == "thm1.2") return verify_extremal(get_size(row, "n"), get_size(row, "r"), opts);
    if (claim == "thm1.1") return verify_kahn_zhao(get_size(row, "n"), get_size(row, "d"), opts);
    if (claim == "lem2.9") return verify_lemma29(get_size(row, "p_max", 3), get_size(row, "q_max", 5), opts);
    if (claim == "lem2.10") {
        const auto p = get_size(row, "p_max", 3);
        return verify_lemma210(p, get_size(row, "t_max", p), get_size(row, "q_max", 4), opts);
    }
    if (claim == "lem3.1") return verify_lemma31(get_size(row, "r_max", 40), opts);
    if (claim == "kk") return verify_kruskal_katona(get_size(row, "n_max", 7), opts);
    throw usage_error("unknown claim '" + row["claim"].get<std::string>() +
                      "' (identities, thm1.2, thm1.1, lem2.9, lem2.10, lem3.1, kk)");
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact clique counting and bound verification", "cliquanta"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    run_config cfg;
    cfg.workers = default_workers();
    auto graph_input = [&](CLI::App* sub) {
        sub->add_option("--g6", cfg.g6, "Inline graph6 string");
        sub->add_option("--input,-i", cfg.input, "Graph file (graph6 or edge list)");
    };
    auto output = [&](CLI::App* sub) {
        sub->add_flag("--one-based", cfg.one_based, "Vertex labels start at 1");
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--out,-o", cfg.out, "Write the report to this file");
        sub->add_option("--workers", cfg.workers, "Worker threads (default: CLIQUANTA_WORKERS or all cores)")
            ->check(CLI::PositiveNumber);
    };

    // gen
    auto* gen = app.add_subcommand("gen", "Build a named graph");
    std::string family;
    std::size_t n = 0, m = 0, r = 0, t = 0, a = 0, b = 0, s = 0, p = 0;
    gen->add_option("family", family, "complete|empty|cycle|path|bipartite|extremal|colex|matching|figure1")
        ->required();
    gen->add_option("-n", n, "Order");
    gen->add_option("-m", m, "Edge count (colex)");
    gen->add_option("-r", r, "Degree bound (extremal) or clique order (matching)");
    gen->add_option("-t", t, "Matching size (matching)");
    gen->add_option("-a", a, "First part (bipartite)");
    gen->add_option("-b", b, "Second part (bipartite)");
    output(gen);

    auto* count = app.add_subcommand("count", "Clique profile and total clique count");
    bool stats = false;
    graph_input(count);
    output(count);
    count->add_flag("--stats", stats, "Include counting-kernel work counters");

    auto* weights = app.add_subcommand("weights", "Vertex clique weights as exact fractions");
    graph_input(weights);
    output(weights);

    auto* edge_count = app.add_subcommand("edge-count", "Cliques through an edge, or through any edge of a set");
    std::vector<std::string> edge_args;
    graph_input(edge_count);
    output(edge_count);
    edge_count->add_option("--edge,-e", edge_args, "Edge U,V (repeat for a set)")->required();

    auto* decompose = app.add_subcommand("decompose", "Count through clique-separator splits");
    decompose_options dopts;
    graph_input(decompose);
    output(decompose);
    decompose->add_option("--leaf-order", dopts.leaf_order, "Count graphs of at most this order directly");
    decompose->add_option("--max-separator", dopts.separators.max_clique, "Largest separator clique tried");
    decompose->add_flag("--edge-deletion", dopts.edge_deletion, "Peel an edge when no separator exists");

    auto* bound = app.add_subcommand("bound", "Evaluate a closed-form bound");
    std::string kind;
    bool sweep = false;
    bound->add_option("kind", kind, "kz|cr|kk|cap|h|thresholds|independence")->required();
    graph_input(bound);
    output(bound);
    bound->add_option("-n", n, "Order");
    bound->add_option("-m", m, "Edge count");
    bound->add_option("-r", r, "Degree bound or r of h(s,p,r)");
    bound->add_option("-t", t, "Clique order (kk)");
    bound->add_option("-s", s, "s of h(s,p,r)");
    bound->add_option("-p", p, "p of h(s,p,r)");
    bound->add_flag("--sweep", sweep, "h: evaluate every (s,p) in the region for this r");

    auto* enumerate = app.add_subcommand("enum", "One graph per isomorphism class");
    std::optional<std::size_t> max_deg, regular;
    bool count_only = false;
    enumerate->add_option("-n", n, "Order")->required();
    enumerate->add_option("--max-deg", max_deg, "Maximum degree (default n-1)");
    enumerate->add_option("--regular", regular, "Only d-regular graphs");
    enumerate->add_flag("--count-only", count_only, "Print only the number of classes");
    output(enumerate);

    auto* verify = app.add_subcommand("verify", "Run a verification sweep and emit a certificate");
    std::string claim;
    std::optional<std::size_t> vn, vr, vd, p_max, q_max, t_max, r_max, n_max, budget_ms;
    long long bound_delta = 0;
    verify->add_option("--claim", claim, "identities|thm1.2|thm1.1|lem2.9|lem2.10|lem3.1|kk")->required();
    graph_input(verify);
    output(verify);
    verify->add_option("-n", vn, "Order");
    verify->add_option("-r", vr, "Degree bound");
    verify->add_option("-d", vd, "Regular degree");
    verify->add_option("--p-max", p_max, "Largest p");
    verify->add_option("--q-max", q_max, "Largest q");
    verify->add_option("--t-max", t_max, "Largest t");
    verify->add_option("--r-max", r_max, "Largest r");
    verify->add_option("--n-max", n_max, "Largest n");
    verify->add_option("--budget-ms", budget_ms, "Stop after this many milliseconds (partial verdict)");
    verify->add_option("--bound-delta", bound_delta, "Shift the bound under test");

    auto* batch = app.add_subcommand("batch", "Run a JSON-lines manifest of claim rows");
    std::string manifest;
    batch->add_option("manifest", manifest, "Manifest file, one JSON object per line")->required();
    output(batch);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << app.help();
        return exit_usage;
    }

    try {
        verify_options vopts;
        vopts.run = make_runner(cfg.workers);

        if (gen->parsed()) {
            graph g;
            if (family == "complete") g = complete(n);
            else if (family == "empty") g = empty_graph(n);
            else if (family == "cycle") g = cycle(n);
            else if (family == "path") g = path(n);
            else if (family == "bipartite") g = complete_bipartite(a, b);
            else if (family == "extremal") g = extremal_graph(n, r).g;
            else if (family == "colex") g = colex_graph(n, m);
            else if (family == "matching") g = complete_minus_matching(r, t);
            else if (family == "figure1") g = figure1_graph();
            else throw usage_error("unknown family '" + family + "'");
            const auto g6 = encode_graph6(g);
            json j{{"family", family}, {"n", g.order()}, {"m", g.size()}, {"graph6", g6}};
            std::string text = cfg.format == "text" && cfg.one_based ? encode_edge_list(g, true) : g6 + "\n";
            emit(cfg, j, text, out);
            return exit_ok;
        }

        if (count->parsed()) {
            auto g = load_graph(cfg);
            kernel_stats ks;
            auto prof = count_cliques(g, &ks);
            json j{{"n", g.order()},
                   {"m", g.size()},
                   {"profile", to_strings(prof.counts)},
                   {"total", to_string(prof.total())},
                   {"total_nonempty", to_string(prof.total_nonempty())},
                   {"clique_number", prof.clique_number()}};
            if (stats)
                j["kernel"] = {{"observed_work", ks.observed_work()},
                               {"predicted_work", ks.predicted_work},
                               {"max_later_degree", ks.max_later_degree}};
            std::ostringstream os;
            os << "total " << prof.total() << "\nprofile";
            for (const auto& c : prof.counts) os << " " << c;
            os << "\n";
            emit(cfg, j, os.str(), out);
            return exit_ok;
        }

        if (weights->parsed()) {
            auto g = load_graph(cfg);
            auto ws = weight_map(g);
            json wj = json::object();
            std::ostringstream os;
            for (vertex u = 0; u < g.order(); ++u) {
                wj[label(cfg, u)] = to_fraction_string(ws[u]);
                os << label(cfg, u) << " " << to_fraction_string(ws[u]) << "\n";
            }
            json j{{"n", g.order()}, {"m", g.size()}, {"total", to_string(total_cliques(g))}, {"weights", wj}};
            emit(cfg, j, os.str(), out);
            return exit_ok;
        }

        if (edge_count->parsed()) {
            auto g = load_graph(cfg);
            std::vector<edge> es;
            for (const auto& e : edge_args) es.push_back(parse_edge(cfg, e));
            for (const auto& e : es) check_vertex(g, e.v);
            json j{{"n", g.order()}, {"m", g.size()}};
            std::ostringstream os;
            if (es.size() == 1) {
                auto [without, through] = count_via_edge_deletion(g, es[0]);
                j["edge"] = to_string(es[0], cfg.one_based);
                j["k_edge"] = to_string(through);
                j["k_without"] = to_string(without);
                j["total"] = to_string(without + through);
                os << to_string(es[0], cfg.one_based) << " " << through << "\n";
            } else {
                std::vector<std::string> names;
                for (const auto& e : es) names.push_back(to_string(e, cfg.one_based));
                auto k = edges_union_clique_count(g, es);
                j["edges"] = names;
                j["k_union"] = to_string(k);
                os << k << "\n";
            }
            emit(cfg, j, os.str(), out);
            return exit_ok;
        }

        if (decompose->parsed()) {
            auto g = load_graph(cfg);
            auto res = decompose_count(g, dopts);
            json j{{"n", g.order()}, {"m", g.size()}, {"total", to_string(res.total)},
                   {"tree", node_json(cfg, res.tree)}};
            std::ostringstream os;
            node_text(cfg, res.tree, 0, os);
            emit(cfg, j, os.str(), out);
            return exit_ok;
        }

        if (bound->parsed()) {
            auto need = [&](const char* flag) {
                if (bound->count(flag) == 0) throw usage_error(std::string("bound ") + kind + " needs " + flag);
            };
            if (kind == "kz") {
                auto rep = kahn_zhao_check(load_graph(cfg));
                auto j = report_json(rep);
                emit(cfg, j, std::string(rep.holds() ? "holds" : "violated") + (rep.tight() ? " tight" : "") + "\n",
                     out);
                return rep.holds() ? exit_ok : exit_refuted;
            }
            if (kind == "independence") {
                auto g = load_graph(cfg);
                auto i = independence_count(g);
                emit(cfg, {{"n", g.order()}, {"independent_sets", to_string(i)}}, to_string(i) + "\n", out);
                return exit_ok;
            }
            if (kind == "cr" || kind == "kk") {
                bound_report rep;
                std::optional<graph> g;
                if (!cfg.g6.empty() || !cfg.input.empty()) g = load_graph(cfg);
                if (g && bound->count("-n") == 0) n = g->order();
                if (g && kind == "kk" && bound->count("-m") == 0) m = g->size();
                need("-n");
                if (kind == "cr") {
                    need("-r");
                    rep.name = "cutler-radcliffe";
                    rep.params = {{"n", std::to_string(n)}, {"r", std::to_string(r)}};
                    rep.bound = rational(cutler_radcliffe_bound(n, r));
                    if (g) {
                        if (max_degree(*g) > r)
                            throw parameter_error("graph has maximum degree " + std::to_string(max_degree(*g)) +
                                                  " > r=" + std::to_string(r));
                        rep.observed = rational(total_cliques(*g));
                    }
                } else {
                    need("-m");
                    need("-t");
                    rep.name = "kruskal-katona";
                    rep.params = {{"n", std::to_string(n)}, {"m", std::to_string(m)}, {"t", std::to_string(t)}};
                    rep.bound = rational(kruskal_katona_bound(n, m, t));
                    if (g) rep.observed = rational(count_cliques(*g).at(t));
                }
                if (g && (g->order() != n))
                    throw parameter_error("graph order " + std::to_string(g->order()) + " differs from -n");
                auto j = report_json(rep);
                if (!g) {
                    j.erase("observed");
                    j.erase("slack");
                    j.erase("tight");
                    j.erase("holds");
                }
                emit(cfg, j, to_exact_string(rep.bound) + "\n", out);
                return g && !rep.holds() ? exit_refuted : exit_ok;
            }
            if (kind == "cap") {
                need("-r");
                auto v = vertex_weight_cap(r);
                emit(cfg, {{"name", "vertex-weight-cap"}, {"params", {{"r", r}}}, {"bound", to_fraction_string(v)}},
                     to_fraction_string(v) + "\n", out);
                return exit_ok;
            }
            if (kind == "thresholds") {
                need("-r");
                auto th = assertion_thresholds(r);
                emit(cfg,
                     {{"r", r}, {"weight_threshold", to_fraction_string(th.weight)}, {"p_cap", th.p_cap}},
                     to_fraction_string(th.weight) + " " + std::to_string(th.p_cap) + "\n", out);
                return exit_ok;
            }
            if (kind == "h") {
                need("-r");
                if (sweep) {
                    json rows = json::array();
                    std::ostringstream os;
                    bool all_positive = true;
                    for (std::size_t ss = 0; ss <= r; ++ss)
                        for (std::size_t pp = 0; pp <= lemma31_p_max(r); ++pp) {
                            if (!lemma31_region(r, ss, pp)) continue;
                            auto h = h_function({r, ss, pp});
                            all_positive = all_positive && h > 0;
                            rows.push_back({{"s", ss}, {"p", pp}, {"h", to_fraction_string(h)}});
                            os << "s=" << ss << " p=" << pp << " h=" << to_fraction_string(h) << "\n";
                        }
                    emit(cfg, {{"r", r}, {"rows", rows}, {"all_positive", all_positive}}, os.str(), out);
                    return all_positive ? exit_ok : exit_refuted;
                }
                need("-s");
                need("-p");
                auto h = h_function({r, s, p});
                emit(cfg,
                     {{"r", r}, {"s", s}, {"p", p}, {"h", to_fraction_string(h)},
                      {"in_region", lemma31_region(r, s, p)}},
                     to_fraction_string(h) + "\n", out);
                return exit_ok;
            }
            throw usage_error("unknown bound '" + kind + "' (kz, cr, kk, cap, h, thresholds, independence)");
        }

        if (enumerate->parsed()) {
            std::vector<std::string> forms;
            std::uint64_t classes = 0;
            auto visit = [&](const graph& g) {
                ++classes;
                if (!count_only) forms.push_back(encode_graph6(g));
            };
            json j{{"n", n}};
            if (regular) {
                j["d"] = *regular;
                for_each_regular(n, *regular, visit);
            } else {
                const auto deg = max_deg.value_or(n == 0 ? 0 : n - 1);
                j["max_deg"] = deg;
                for_each_graph(n, deg, visit);
            }
            j["count"] = classes;
            std::ostringstream os;
            if (count_only) {
                os << classes << "\n";
            } else {
                j["graphs"] = forms;
                for (const auto& f : forms) os << f << "\n";
            }
            emit(cfg, j, os.str(), out);
            return exit_ok;
        }

        if (verify->parsed()) {
            json row{{"claim", claim}};
            auto put = [&](const char* key, const std::optional<std::size_t>& v) {
                if (v) row[key] = *v;
            };
            put("n", vn);
            put("r", vr);
            put("d", vd);
            put("p_max", p_max);
            put("q_max", q_max);
            put("t_max", t_max);
            put("r_max", r_max);
            put("n_max", n_max);
            put("budget_ms", budget_ms);
            if (bound_delta != 0) row["bound_delta"] = bound_delta;
            if (canonical_claim(claim) == "identities") row["g6"] = encode_graph6(load_graph(cfg));
            auto cert = run_claim(row, vopts);
            emit(cfg, cert.to_json(), certificate_text(cert), out);
            return verdict_code(cert.result);
        }

        if (batch->parsed()) {
            std::istringstream lines(read_file(manifest));
            std::string line;
            std::size_t line_no = 0;
            json results = json::array();
            std::ostringstream table;
            std::size_t verified = 0, refuted = 0, partial = 0;
            int code = exit_ok;
            while (std::getline(lines, line)) {
                ++line_no;
                if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                json row;
                try {
                    row = json::parse(line);
                } catch (const json::parse_error& e) {
                    throw format_error("manifest line " + std::to_string(line_no) + ": " + e.what());
                }
                certificate cert;
                try {
                    cert = run_claim(row, vopts);
                } catch (const usage_error& e) {
                    throw usage_error("manifest line " + std::to_string(line_no) + ": " + e.what());
                }
                switch (cert.result) {
                    case verdict::verified: ++verified; break;
                    case verdict::refuted: ++refuted; code = exit_refuted; break;
                    case verdict::partial:
                        ++partial;
                        if (code == exit_ok) code = exit_partial;
                        break;
                }
                results.push_back({{"line", line_no}, {"row", row}, {"certificate", cert.to_json()}});
                table << line_no << "\t" << cert.claim << "\t" << cert.params.dump() << "\t"
                      << to_string(cert.result) << "\t" << cert.classes_examined;
                if (!cert.counterexamples.empty()) table << "\t" << cert.counterexamples.front();
                table << "\n";
            }
            json summary{{"rows", results.size()}, {"verified", verified}, {"refuted", refuted}, {"partial", partial}};
            table << "rows=" << results.size() << " verified=" << verified << " refuted=" << refuted
                  << " partial=" << partial << "\n";
            emit(cfg, {{"results", results}, {"summary", summary}}, table.str(), out);
            return code;
        }
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const cap_exceeded& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const io_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const std::invalid_argument& e) {
        // malformed graphs, parameters outside a family's range, rejected splits
        err << "error: " << e.what() << "\n";
        return exit_data;
    }
    return exit_usage;
}

}  // namespace cliquanta::cli
