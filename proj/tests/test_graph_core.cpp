#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "necgraph/graph.hpp"
#include "necgraph/graph_io.hpp"
#include "necgraph/isomorphism.hpp"

using namespace necgraph;

namespace {

Graph random_graph(std::mt19937& rng, int v, double p = 0.5) {
    GraphBuilder b(v);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j)
            if (coin(rng)) b.add_edge(i, j);
    return b.build();
}

Graph complete(int v) {
    GraphBuilder b(v);
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j) b.add_edge(i, j);
    return b.build();
}

Graph cycle(int v) {
    GraphBuilder b(v);
    for (int i = 0; i < v; ++i) b.add_edge(i, (i + 1) % v);
    return b.build();
}

Graph path(int v) {
    GraphBuilder b(v);
    for (int i = 0; i + 1 < v; ++i) b.add_edge(i, i + 1);
    return b.build();
}

// Reference graph6 encoder, written against the format description rather
// than the production code: build the column-major bit string explicitly,
// then pack six bits at a time.
std::string ref_encode(const Graph& g) {
    std::string bits;
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i) bits += g.adjacent(i, j) ? '1' : '0';
    while (bits.size() % 6 != 0) bits += '0';
    std::string out;
    const int v = g.order();
    if (v <= 62) {
        out += static_cast<char>(63 + v);
    } else {
        out += '~';
        out += static_cast<char>(63 + (v >> 12));
        out += static_cast<char>(63 + ((v >> 6) & 63));
        out += static_cast<char>(63 + (v & 63));
    }
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int val = 0;
        for (std::size_t b = 0; b < 6; ++b) val = val * 2 + (bits[i + b] - '0');
        out += static_cast<char>(63 + val);
    }
    return out;
}

}  // namespace

TEST_CASE("builder basics") {
    GraphBuilder b(4);
    b.add_edge(0, 1);
    b.add_edge(2, 1);
    CHECK(b.has_edge(1, 0));
    CHECK(b.has_edge(1, 2));
    CHECK_FALSE(b.has_edge(0, 2));
    b.add_edge(0, 1);  // repeat is a no-op
    const Graph g = b.build();
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 0));
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(3) == 0);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(g.neighborhood(1) == VertexSet::of(4, {0, 2}));
}

TEST_CASE("builder rejects loops and bad indices") {
    GraphBuilder b(3);
    CHECK_THROWS_AS(b.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(b.add_edge(0, 3), std::out_of_range);
    CHECK_THROWS_AS(b.add_edge(-1, 0), std::out_of_range);
    CHECK_THROWS_AS(GraphBuilder(-2), std::invalid_argument);
}

TEST_CASE("vertex set operations") {
    VertexSet s = VertexSet::of(130, {0, 63, 64, 129});
    CHECK(s.count() == 4);
    CHECK(s.test(63));
    CHECK_FALSE(s.test(62));
    CHECK(s.members() == std::vector<int>{0, 63, 64, 129});
    CHECK(s.first() == 0);
    CHECK(s.next(0) == 63);
    CHECK(s.next(64) == 129);
    CHECK(s.next(129) == -1);

    VertexSet t = VertexSet::full(130);
    CHECK(t.count() == 130);
    t.and_not(s);
    CHECK(t.count() == 126);
    CHECK_FALSE(t.intersects(s));
    CHECK(s.intersection_count(VertexSet::of(130, {63, 64, 100})) == 2);

    CHECK_THROWS_AS(s.test(130), std::out_of_range);
    CHECK_THROWS_AS(s.set(-1), std::out_of_range);
    VertexSet other(129);
    CHECK_THROWS_AS(s &= other, std::invalid_argument);
}

TEST_CASE("complement is an involution and splits all pairs") {
    std::mt19937 rng(2026);
    for (int trial = 0; trial < 40; ++trial) {
        const int v = 1 + static_cast<int>(rng() % 14);
        const Graph g = random_graph(rng, v);
        const Graph c = complement(g);
        CHECK(complement(c) == g);
        CHECK(g.edge_count() + c.edge_count() == v * (v - 1) / 2);
        for (int x = 0; x < v; ++x)
            for (int y = x + 1; y < v; ++y) CHECK(g.adjacent(x, y) != c.adjacent(x, y));
    }
}

TEST_CASE("induced subgraphs") {
    const Graph k4 = complete(4);
    const Graph tri = induced_subgraph(k4, VertexSet::of(4, {0, 2, 3}));
    CHECK(tri == complete(3));

    // Petersen has girth 5, so any neighborhood induces an empty graph.
    const Graph pet = decode_graph6("I?LRCecq?");
    const Graph nbhd = induced_subgraph(pet, pet.neighborhood(0));
    CHECK(nbhd.order() == 3);
    CHECK(nbhd.edge_count() == 0);

    std::mt19937 rng(7);
    const Graph g = random_graph(rng, 9);
    CHECK(induced_subgraph(g, VertexSet::full(9)) == g);
    CHECK(induced_subgraph(g, VertexSet(9)).order() == 0);
}

TEST_CASE("graph6 frozen strings") {
    CHECK(encode_graph6(complete(3)) == "Bw");
    CHECK(encode_graph6(Graph()) == "?");
    CHECK(encode_graph6(GraphBuilder(1).build()) == "@");
    CHECK(encode_graph6(path(4)) == "Ch");
    GraphBuilder claw(4);
    for (int leaf : {0, 1, 2}) claw.add_edge(leaf, 3);
    CHECK(encode_graph6(claw.build()) == "CF");
    CHECK(decode_graph6("Bw") == complete(3));
    CHECK(decode_graph6("Ch") == path(4));

    // 64 vertices forces the extended header: '~' then three 6-bit bytes.
    const Graph big = GraphBuilder(64).build();
    const std::string enc = encode_graph6(big);
    CHECK(enc.substr(0, 4) == "~?@?");
    CHECK(enc.size() == 4 + (64 * 63 / 2 + 5) / 6);
    CHECK(decode_graph6(enc) == big);
}

TEST_CASE("graph6 agrees with the reference encoder") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        const int v = static_cast<int>(rng() % 63);
        const Graph g = random_graph(rng, v);
        const std::string enc = encode_graph6(g);
        CHECK(enc == ref_encode(g));
        CHECK(decode_graph6(enc) == g);
    }
    for (int v = 63; v <= 80; ++v) {
        const Graph g = random_graph(rng, v, 0.3);
        const std::string enc = encode_graph6(g);
        CHECK(enc == ref_encode(g));
        CHECK(decode_graph6(enc) == g);
    }
}

TEST_CASE("graph6 decode rejects malformed text") {
    CHECK_THROWS_AS(decode_graph6(""), ParseError);
    CHECK_THROWS_AS(decode_graph6("B w"), ParseError);      // byte below 63
    CHECK_THROWS_AS(decode_graph6("B\x7f"), ParseError);    // byte above 126
    CHECK_THROWS_AS(decode_graph6("B"), ParseError);        // truncated body
    CHECK_THROWS_AS(decode_graph6("Bww"), ParseError);      // trailing bytes
    CHECK_THROWS_AS(decode_graph6("Bx"), ParseError);       // nonzero padding bits
    CHECK_THROWS_AS(decode_graph6("~"), ParseError);        // truncated header
    CHECK_THROWS_AS(decode_graph6("~?"), ParseError);
    CHECK_THROWS_AS(decode_graph6("~~"), ParseError);       // 8-byte form unsupported
    // The extended header may not encode an order that fits the short form.
    CHECK_THROWS_AS(decode_graph6("~??B??"), ParseError);
}

TEST_CASE("graph6 round trips the padding boundary orders") {
    // Orders where the bit count is exactly divisible by 6 and off by one.
    for (int v : {2, 3, 4, 5, 12, 13, 62, 63}) {
        std::mt19937 rng(static_cast<unsigned>(v));
        const Graph g = random_graph(rng, v);
        CHECK(decode_graph6(encode_graph6(g)) == g);
    }
}

TEST_CASE("edge list round trip") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const int v = static_cast<int>(rng() % 20);
        const Graph g = random_graph(rng, v);
        CHECK(read_edge_list(write_edge_list(g)) == g);
    }
    CHECK(write_edge_list(complete(3)) == "3 3\n0 1\n0 2\n1 2\n");
}

TEST_CASE("edge list rejects malformed text") {
    CHECK_THROWS_AS(read_edge_list(""), ParseError);
    CHECK_THROWS_AS(read_edge_list("2\n"), ParseError);           // missing edge count
    CHECK_THROWS_AS(read_edge_list("2 1\n"), ParseError);         // fewer edges than declared
    CHECK_THROWS_AS(read_edge_list("2 0\n0 1\n"), ParseError);    // more edges than declared
    CHECK_THROWS_AS(read_edge_list("2 1\n1 1\n"), ParseError);    // loop
    CHECK_THROWS_AS(read_edge_list("2 1\n0 2\n"), ParseError);    // endpoint out of range
    CHECK_THROWS_AS(read_edge_list("2 1\n0 x\n"), ParseError);    // non-numeric
    CHECK_THROWS_AS(read_edge_list("3 2\n1 2\n0 1\n"), ParseError);  // unsorted
    CHECK_THROWS_AS(read_edge_list("3 2\n0 1\n0 1\n"), ParseError);  // duplicate
}

TEST_CASE("small graph isomorphism") {
    const Graph c5 = cycle(5);
    GraphBuilder b(5);  // C5 with the vertices scrambled
    b.add_edge(2, 4);
    b.add_edge(4, 1);
    b.add_edge(1, 3);
    b.add_edge(3, 0);
    b.add_edge(0, 2);
    CHECK(is_isomorphic_small(c5, b.build()));
    CHECK_FALSE(is_isomorphic_small(c5, path(5)));
    CHECK_FALSE(is_isomorphic_small(c5, cycle(6)));
    CHECK(is_isomorphic_small(Graph(), Graph()));

    // Same degree sequence, different graphs: C6 vs two triangles.
    GraphBuilder two(6);
    for (int base : {0, 3})
        for (int i = 0; i < 3; ++i) two.add_edge(base + i, base + (i + 1) % 3);
    CHECK_FALSE(is_isomorphic_small(cycle(6), two.build()));

    CHECK_THROWS_AS(is_isomorphic_small(complete(13), complete(13)), std::invalid_argument);
}

TEST_CASE("isomorphism is invariant under random relabeling") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const int v = 1 + static_cast<int>(rng() % 8);
        const Graph g = random_graph(rng, v);
        std::vector<int> perm(static_cast<std::size_t>(v));
        for (int i = 0; i < v; ++i) perm[static_cast<std::size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        GraphBuilder b(v);
        for (const auto& [x, y] : g.edges())
            b.add_edge(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]);
        CHECK(is_isomorphic_small(g, b.build()));
    }
}
