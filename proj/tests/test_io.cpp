#include <gtest/gtest.h>

#include <sstream>

#include <cliquanta/families.hpp>
#include <cliquanta/io.hpp>

using namespace cliquanta;

TEST(Graph6, SmallKnownStrings) {
    EXPECT_EQ(encode_graph6(graph()), "?");
    // n = 3 -> 'B'; bits 111 padded to 111000 = 56, +63 = 'w'
    EXPECT_EQ(encode_graph6(complete(3)), "Bw");
    EXPECT_EQ(decode_graph6("Bw"), complete(3));
    EXPECT_EQ(decode_graph6("?"), graph());
}

TEST(Graph6, RoundTripsRandomGraphs) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const std::size_t n = seed % 33;
        auto g = random_graph(n, 0.1 + 0.8 * static_cast<double>(seed % 7) / 7.0, seed);
        ASSERT_EQ(decode_graph6(encode_graph6(g)), g) << "seed " << seed;
    }
}

TEST(Graph6, LongSizeFields) {
    for (std::size_t n : {62u, 63u, 64u, 200u}) {
        auto g = random_bounded_degree(n, 3, n);
        auto s = encode_graph6(g);
        if (n >= 63) {
            EXPECT_EQ(s[0], '~');
        }
        EXPECT_EQ(decode_graph6(s), g);
    }
    // 258048 = 63 * 2^12: the 8-byte form ~~ followed by six 6-bit groups
    std::string field;
    detail::put_size_field(field, 258048);
    EXPECT_EQ(field, std::string("~~") + "???" + "~??");
    EXPECT_THROW(decode_graph6("~~???~"), format_error);
}

TEST(Graph6, HeaderIsTolerated) { EXPECT_EQ(decode_graph6(">>graph6<<Bw"), complete(3)); }

TEST(Graph6, RejectsMalformedInput) {
    EXPECT_THROW(decode_graph6(""), format_error);
    EXPECT_THROW(decode_graph6("B"), format_error);        // missing adjacency byte
    EXPECT_THROW(decode_graph6("Bww"), format_error);      // trailing byte
    EXPECT_THROW(decode_graph6("B\x20"), format_error);    // byte below 63
    EXPECT_THROW(decode_graph6("Bx"), format_error);       // nonzero padding
    EXPECT_THROW(decode_graph6("~??}"), format_error);     // non-minimal size field
}

TEST(EdgeList, RoundTripsBothBases) {
    auto g = figure1_graph();
    for (bool one : {false, true}) {
        auto text = encode_edge_list(g, one);
        EXPECT_EQ(decode_edge_list(text, one), g);
    }
    EXPECT_EQ(encode_edge_list(complete(2), true), "2 1\n1 2\n");
}

TEST(EdgeList, RejectsBadInput) {
    EXPECT_THROW(decode_edge_list(std::string_view("3"), false), format_error);
    EXPECT_THROW(decode_edge_list(std::string_view("3 2\n0 1\n"), false), format_error);
    EXPECT_THROW(decode_edge_list(std::string_view("3 1\n0 3\n"), false), format_error);
    EXPECT_THROW(decode_edge_list(std::string_view("3 1\n0 1\n1 2\n"), false), format_error);
    EXPECT_THROW(decode_edge_list(std::string_view("3 1\n0 0\n"), false), graph_error);
    EXPECT_THROW(decode_edge_list(std::string_view("3 1\n0 1\n"), true), format_error);
}

TEST(ParseGraphText, DetectsFormat) {
    auto g = figure1_graph();
    EXPECT_EQ(parse_graph_text(encode_graph6(g) + "\n"), g);
    EXPECT_EQ(parse_graph_text(encode_edge_list(g, true), true), g);
}
