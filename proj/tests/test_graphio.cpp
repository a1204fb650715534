#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "specbound/edgelist.hpp"
#include "specbound/errors.hpp"
#include "specbound/graph6.hpp"
#include "specbound/named_graphs.hpp"
#include "test_util.hpp"

using namespace specbound;

TEST_CASE("graph construction normalizes and validates") {
    Graph g(3, {{2, 0}, {0, 2}, {1, 2}});
    CHECK(g.num_edges() == 2);
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(2, 0));
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), SelfLoop);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), VertexOutOfRange);
    CHECK_THROWS_AS(Graph(2, {{-1, 0}}), VertexOutOfRange);
}

TEST_CASE("graph6 parses the hand-encoded vectors") {
    Graph empty2 = parse_graph6("A?");
    CHECK(empty2.num_vertices() == 2);
    CHECK(empty2.num_edges() == 0);

    Graph k3 = parse_graph6("Bw");
    CHECK(k3.num_vertices() == 3);
    CHECK(k3.edges() == std::vector<Graph::Edge>{{0, 1}, {0, 2}, {1, 2}});

    Graph e1 = parse_graph6("A_");
    CHECK(e1.num_vertices() == 2);
    CHECK(e1.edges() == std::vector<Graph::Edge>{{0, 1}});

    CHECK(parse_graph6("A_\n").num_edges() == 1);  // trailing newline ok
}

TEST_CASE("graph6 writes the hand-encoded vectors") {
    CHECK(write_graph6(named_graph("complete", {3})) == "Bw");
    CHECK(write_graph6(Graph(2, {})) == "A?");
    CHECK(write_graph6(Graph(2, {{0, 1}})) == "A_");
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), MalformedGraph6);
    CHECK_THROWS_AS(parse_graph6("?"), MalformedGraph6);    // zero vertices
    CHECK_THROWS_AS(parse_graph6("B"), MalformedGraph6);    // missing data
    CHECK_THROWS_AS(parse_graph6("Bww"), MalformedGraph6);  // extra data
    CHECK_THROWS_AS(parse_graph6("B\x20"), MalformedGraph6);
    CHECK_THROWS_AS(parse_graph6("Bx"), MalformedGraph6);  // nonzero padding
    CHECK_THROWS_AS(parse_graph6("D?"), MalformedGraph6);  // truncated
    CHECK_THROWS_AS(parse_graph6(":Fa@x^"), UnsupportedFormat);  // sparse6
    CHECK_THROWS_AS(parse_graph6("&B?_"), UnsupportedFormat);    // digraph6
}

TEST_CASE("graph6 long size form") {
    // edgeless on 63 vertices: 4 size bytes then 326 '?' data bytes
    std::string line = "~??~";
    line += std::string(326, '?');
    Graph g = parse_graph6(line);
    CHECK(g.num_vertices() == 63);
    CHECK(g.num_edges() == 0);
    CHECK(write_graph6(g) == line);

    // vertex count above the configured maximum
    CHECK_THROWS_AS(parse_graph6(line, 62), Overflow);

    // 6-byte size form: n = 300000 with no data is length-mismatched but the
    // size field itself must decode
    std::string big = "~~";
    long n = 300000;
    for (int shift = 30; shift >= 0; shift -= 6)
        big.push_back(static_cast<char>(((n >> shift) & 0x3f) + 63));
    CHECK_THROWS_AS(parse_graph6(big), MalformedGraph6);
    CHECK_THROWS_AS(parse_graph6(big, 1000), Overflow);
}

TEST_CASE("graph6 round-trip is the identity") {
    // exhaustive over every labeled graph with n <= 5
    for (int n = 1; n <= 5; ++n) {
        int bits = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
            Graph g = testutil::to_graph({n, mask});
            Graph back = parse_graph6(write_graph6(g));
            CHECK(back == g);
        }
    }
    // one representative per isomorphism class up to n = 8, plus the
    // string-level identity
    for (int n = 6; n <= 8; ++n) {
        for (const auto& sg : testutil::all_graphs(n)) {
            Graph g = testutil::to_graph(sg);
            std::string s = write_graph6(g);
            CHECK(parse_graph6(s) == g);
            CHECK(write_graph6(parse_graph6(s)) == s);
        }
    }
    // a few random big ones across the size-form boundary
    std::mt19937 rng(7);
    for (int n : {40, 62, 63, 64, 100}) {
        std::vector<Graph::Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) edges.emplace_back(u, v);
        Graph g(n, std::move(edges));
        CHECK(parse_graph6(write_graph6(g)) == g);
    }
}

TEST_CASE("edge list parses, dedups and reports errors") {
    Graph k3 = parse_edgelist("3\n0 1\n1 2\n0 2");
    CHECK(k3 == named_graph("complete", {3}));

    Graph dedup = parse_edgelist("2\n0 1\n1 0");
    CHECK(dedup.num_edges() == 1);

    Graph commented = parse_edgelist("# a triangle\n3\n\n0 1 # first\n1 2\n0 2\n");
    CHECK(commented == k3);

    CHECK_THROWS_AS(parse_edgelist("2\n0 2"), VertexOutOfRange);
    CHECK_THROWS_AS(parse_edgelist("2\n1 1"), SelfLoop);
    CHECK_THROWS_AS(parse_edgelist("2\n0 x"), ParseError);
    CHECK_THROWS_AS(parse_edgelist("2\n0"), ParseError);
    CHECK_THROWS_AS(parse_edgelist(""), ParseError);
    CHECK_THROWS_AS(parse_edgelist("0\n"), ParseError);

    Graph h2 = parse_edgelist("7\n0 2\n2 3\n1 3\n0 1\n0 3\n1 2\n2 4\n3 4\n4 5\n4 6");
    CHECK(h2 == named_graph("h2"));
    CHECK(write_edgelist(dedup) == "2\n0 1\n");
}

TEST_CASE("named families have the right shape") {
    Graph t = named_graph("turan", {2, 3});
    CHECK(t.num_vertices() == 6);
    CHECK(t.num_edges() == 12);

    CHECK(named_graph("tilley").num_vertices() == 12);
    CHECK(named_graph("tilley").num_edges() == 29);

    Graph s5 = named_graph("star", {5});
    CHECK(s5.num_vertices() == 5);
    CHECK(s5.num_edges() == 4);

    Graph pet = named_graph("petersen");
    CHECK(pet.num_vertices() == 10);
    CHECK(pet.num_edges() == 15);
    for (int d : pet.degrees()) CHECK(d == 3);
    CHECK(pet == named_graph("kneser", {5, 2}));

    Graph gq1 = named_graph("gq_2_1");
    CHECK(gq1.num_vertices() == 9);
    for (int d : gq1.degrees()) CHECK(d == 4);

    Graph gq4 = named_graph("gq_2_4");
    CHECK(gq4.num_vertices() == 27);
    CHECK(gq4.num_edges() == 135);
    for (int d : gq4.degrees()) CHECK(d == 10);

    Graph km = named_graph("complete_multipartite", {1, 2, 3});
    CHECK(km.num_vertices() == 6);
    CHECK(km.num_edges() == 1 * 2 + 1 * 3 + 2 * 3);

    CHECK(named_graph("path", {4}).num_edges() == 3);
    CHECK(named_graph("cycle", {5}).num_edges() == 5);

    CHECK_THROWS_AS(named_graph("nosuch"), UnknownName);
    CHECK_THROWS_AS(named_graph("cycle", {2}), BadParams);
    CHECK_THROWS_AS(named_graph("turan", {2}), BadParams);
    CHECK_THROWS_AS(named_graph("tilley", {1}), BadParams);
    CHECK_THROWS_AS(named_graph("kneser", {3, 2}), BadParams);
}

TEST_CASE("turan edge count identity") {
    for (long r = 1; r <= 5; ++r)
        for (long n = 1; n <= 4; ++n) {
            Graph t = named_graph("turan", {n, r});
            CHECK(t.num_edges() == r * (r - 1) / 2 * n * n);
        }
}

TEST_CASE("relabeling keeps the degree multiset") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = testutil::random_connected_graph(8, rng);
        std::vector<int> perm(8);
        for (int i = 0; i < 8; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h = g.relabeled(perm);
        auto da = g.degrees(), db = h.degrees();
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        CHECK(da == db);
        CHECK(h.num_edges() == g.num_edges());
    }
}
