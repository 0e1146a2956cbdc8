#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support/oracles.hpp"
#include "worpitzky/graph.hpp"

using namespace worpitzky;

TEST_CASE("pair indexing round-trips") {
    for (int n = 2; n <= 9; ++n) {
        int m = n * (n - 1) / 2;
        for (int idx = 0; idx < m; ++idx) {
            auto [i, j] = pair_at(n, idx);
            CHECK(pair_index(n, i, j) == idx);
        }
    }
}

TEST_CASE("edge list parsing") {
    LabeledGraph g = parse_edge_list("4\n1 2\n2 3\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {2, 3}});

    LabeledGraph single = parse_edge_list("1\n");
    CHECK(single.vertex_count() == 1);
    CHECK(single.edge_count() == 0);

    CHECK_THROWS(parse_edge_list("3\n1 1\n"));       // loop
    CHECK_THROWS(parse_edge_list("3\n1 4\n"));       // out of range
    CHECK_THROWS(parse_edge_list("3\n1\n"));         // malformed
    CHECK_THROWS(parse_edge_list("3\n1 2 3\n"));     // malformed
    CHECK_THROWS(parse_edge_list("0\n"));
    CHECK_THROWS(parse_edge_list(""));

    // whitespace tolerance and duplicate edges collapse
    LabeledGraph ws = parse_edge_list("  4 \r\n\n 1   2 \n 2 3\n2 1\n");
    CHECK(ws == g);
}

TEST_CASE("graph6 known strings") {
    LabeledGraph path(4, {{1, 2}, {2, 3}});
    CHECK(to_graph6(path) == "Cg");
    CHECK(parse_graph6("Cg") == path);
    CHECK(parse_graph6(">>graph6<<Cg\n") == path);

    CHECK(to_graph6(LabeledGraph(1)) == "@");
    CHECK(parse_graph6("@").vertex_count() == 1);

    LabeledGraph k4(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(to_graph6(k4) == "C~");
    CHECK(parse_graph6("C~") == k4);

    LabeledGraph c5(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
    CHECK(to_graph6(c5) == "Dhc");

    CHECK_THROWS(parse_graph6("C"));        // truncated
    CHECK_THROWS(parse_graph6("Cgg"));      // too long
    CHECK_THROWS(parse_graph6("C\x20"));    // byte out of range
    CHECK_THROWS(parse_graph6("A@"));       // nonzero padding
    CHECK_THROWS(parse_graph6(""));
    CHECK_THROWS(parse_graph6("?"));        // n = 0
}

TEST_CASE("graph6 long form") {
    LabeledGraph g(63, {{1, 2}, {62, 63}});
    std::string code = to_graph6(g);
    CHECK(code.substr(0, 4) == std::string("~??") + static_cast<char>(63 + 63));
    CHECK(parse_graph6(code) == g);
    CHECK(oracles::graph6_reference(g) == code);
    CHECK_THROWS(parse_graph6("~~"));       // 8-byte counts unsupported
}

TEST_CASE("graph6 round-trip and reference encoder, exhaustive n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        LabeledGraphStream stream(n);
        while (auto g = stream.next()) {
            std::string code = to_graph6(*g);
            CHECK(parse_graph6(code) == *g);
            if (n <= 5) CHECK(oracles::graph6_reference(*g) == code);
        }
    }
}

TEST_CASE("complement") {
    LabeledGraph empty(4);
    LabeledGraph k4 = empty.complement();
    CHECK(k4.edge_count() == 6);
    CHECK(k4.complement() == empty);

    LabeledGraph g(4, {{1, 2}, {2, 3}});
    CHECK(g.complement().edges() == std::vector<Edge>{{1, 3}, {1, 4}, {2, 4}, {3, 4}});

    for (int n = 1; n <= 5; ++n) {
        LabeledGraphStream stream(n);
        while (auto h = stream.next()) {
            CHECK(h->complement().complement() == *h);
            CHECK(h->edge_count() + h->complement().edge_count() == n * (n - 1) / 2);
        }
    }
}

TEST_CASE("relabel") {
    LabeledGraph g(4, {{1, 2}, {2, 3}});
    CHECK(g.relabel(VertexOrdering::identity(4)) == g);

    VertexOrdering swap24({1, 4, 3, 2});
    LabeledGraph gprime = g.relabel(swap24);
    CHECK(gprime.edges() == std::vector<Edge>{{1, 4}, {3, 4}});
    CHECK(gprime.relabel(swap24) == g);

    CHECK_THROWS(VertexOrdering({1, 1, 3}));
    CHECK_THROWS(g.relabel(VertexOrdering::identity(3)));
}

TEST_CASE("vertex ordering basics") {
    VertexOrdering sigma({3, 1, 2});
    CHECK(sigma.vertex_at(1) == 3);
    CHECK(sigma.position_of(3) == 1);
    CHECK(sigma.inverse().order() == std::vector<int>{2, 3, 1});
    CHECK(sigma.inverse().inverse() == sigma);
    CHECK(sigma.str() == "3 1 2");
}

TEST_CASE("graph enumeration counts") {
    auto count = [](int n) {
        LabeledGraphStream stream(n);
        std::uint64_t c = 0;
        while (stream.next()) ++c;
        return c;
    };
    CHECK(count(1) == 1);
    CHECK(count(3) == 8);
    CHECK(count(5) == 1024);
    CHECK_THROWS(LabeledGraphStream(7));   // default bound
    CHECK_NOTHROW(LabeledGraphStream(7, 7));
}

TEST_CASE("root subsets") {
    LabeledGraph g(4, {{1, 2}, {2, 3}});
    RootSubset psi = to_root_subset(g);
    CHECK(psi.n == 4);
    CHECK(psi.roots == std::vector<Edge>{{1, 2}, {2, 3}});
    CHECK(psi.contains(1, 2));
    CHECK(!psi.contains(1, 3));
    CHECK(psi.to_graph() == g);

    CHECK(to_root_subset(LabeledGraph(3)).roots.empty());
    CHECK(to_root_subset(LabeledGraph(4).complement()).roots.size() == 6);

    // bijection with labeled graphs at n = 4
    LabeledGraphStream stream(4);
    while (auto h = stream.next()) CHECK(to_root_subset(*h).to_graph() == *h);
}
