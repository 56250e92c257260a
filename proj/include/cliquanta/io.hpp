#pragma once

// graph6 and plain edge-list interchange.

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace cliquanta {

class format_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void put_size_field(std::string& out, std::uint64_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

}  // namespace detail

inline constexpr std::uint64_t graph6_max_order = 68719476735ULL;

/// Standard graph6: size field, then x(0,1) x(0,2) x(1,2) x(0,3) ... packed
/// big-endian into 6-bit groups, each offset by 63.
inline std::string encode_graph6(const graph& g) {
    const std::uint64_t n = g.order();
    if (n > graph6_max_order) throw format_error("graph too large for graph6");
    std::string out;
    detail::put_size_field(out, n);

    int acc = 0;
    int nbits = 0;
    for (vertex j = 1; j < n; ++j) {
        auto nb = g.neighbors(j);
        std::size_t k = 0;
        for (vertex i = 0; i < j; ++i) {
            while (k < nb.size() && nb[k] < i) ++k;
            bool bit = k < nb.size() && nb[k] == i;
            acc = (acc << 1) | (bit ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits != 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline graph decode_graph6(std::string_view s) {
    // tolerate an optional ">>graph6<<" header and trailing newline
    if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) throw format_error("empty graph6 string");
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126)
            throw format_error("graph6 byte " + std::to_string(c) + " at offset " +
                               std::to_string(i) + " outside 63..126");
    }
    auto val = [&](std::size_t i) { return static_cast<std::uint64_t>(s[i]) - 63; };

    std::uint64_t n = 0;
    std::size_t pos = 0;
    if (val(0) < 63) {
        n = val(0);
        pos = 1;
    } else if (s.size() >= 2 && val(1) < 63) {
        if (s.size() < 4) throw format_error("truncated graph6 size field");
        n = (val(1) << 12) | (val(2) << 6) | val(3);
        if (n <= 62) throw format_error("non-minimal graph6 size field");
        pos = 4;
    } else {
        if (s.size() < 8) throw format_error("truncated graph6 size field");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | val(i);
        if (n <= 258047) throw format_error("non-minimal graph6 size field");
        pos = 8;
    }

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t groups = (bits + 5) / 6;
    if (s.size() - pos != groups)
        throw format_error("graph6 length mismatch: expected " + std::to_string(groups) +
                           " adjacency bytes, found " + std::to_string(s.size() - pos));

    std::vector<std::vector<vertex>> adj(n);
    std::uint64_t bit_index = 0;
    for (vertex j = 1; j < n; ++j)
        for (vertex i = 0; i < j; ++i, ++bit_index) {
            auto byte = val(pos + bit_index / 6);
            if ((byte >> (5 - bit_index % 6)) & 1) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    if (bits % 6 != 0) {
        auto last = val(pos + groups - 1);
        auto pad = 6 - bits % 6;
        if ((last & ((1u << pad) - 1)) != 0) throw format_error("nonzero graph6 padding bits");
    }
    return graph::from_adjacency(std::move(adj));
}

/// "n m" header then one "u v" per line.
inline std::string encode_edge_list(const graph& g, bool one_based = false) {
    std::ostringstream os;
    const vertex off = one_based ? 1 : 0;
    os << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges()) os << e.u + off << ' ' << e.v + off << '\n';
    return os.str();
}

inline graph decode_edge_list(std::istream& in, bool one_based = false) {
    long long n = 0;
    long long m = 0;
    if (!(in >> n >> m) || n < 0 || m < 0) throw format_error("edge list: bad 'n m' header");
    std::vector<edge> es;
    es.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long a = 0;
        long long b = 0;
        if (!(in >> a >> b))
            throw format_error("edge list: expected " + std::to_string(m) + " edges, read " +
                               std::to_string(i));
        if (one_based) {
            --a;
            --b;
        }
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw format_error("edge list: endpoint out of range on edge " + std::to_string(i + 1));
        if (a == b) throw graph_error("self-loop at vertex " + std::to_string(a) + " rejected");
        es.emplace_back(static_cast<vertex>(a), static_cast<vertex>(b));
    }
    std::string rest;
    if (in >> rest) throw format_error("edge list: trailing data after " + std::to_string(m) + " edges");
    return graph::from_edges(static_cast<std::size_t>(n), es);
}

inline graph decode_edge_list(std::string_view text, bool one_based = false) {
    std::istringstream is{std::string(text)};
    return decode_edge_list(is, one_based);
}

/// Accepts either format: an edge list starts with two integers on its first line.
inline graph parse_graph_text(std::string_view text, bool one_based = false) {
    auto first_line = text.substr(0, text.find('\n'));
    std::istringstream probe{std::string(first_line)};
    long long a = 0;
    long long b = 0;
    std::string extra;
    if (probe >> a >> b && !(probe >> extra)) return decode_edge_list(text, one_based);
    return decode_graph6(first_line);
}

}  // namespace cliquanta
