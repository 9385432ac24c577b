#include <doctest.h>

#include "maxline/canonical.hpp"
#include "maxline/extremal.hpp"
#include "maxline/line_transform.hpp"
#include "support.hpp"

using namespace maxline;
using testsupport::TestRng;
using testsupport::oracle_line_arcs;
using testsupport::random_digraph;

TEST_CASE("line digraph of small roots") {
    const LineDigraph path = line_digraph(Digraph::from_arcs(3, {{0, 1}, {1, 2}}));
    CHECK(path.graph.vertex_count() == 2);
    CHECK(path.graph.arcs() == std::vector<Arc>{{0, 1}});

    const LineDigraph circ = line_digraph(Digraph::from_arcs(2, {{0, 1}, {1, 0}}));
    CHECK(circ.graph.vertex_count() == 2);
    CHECK(circ.graph.arc_count() == 2);
    CHECK(phi(Digraph::from_arcs(2, {{0, 1}, {1, 0}})) == 2);

    const LineDigraph o4 = line_digraph(gen_o(4));
    CHECK(o4.graph.vertex_count() == 4);
    CHECK(o4.graph.arc_count() == 6);
}

TEST_CASE("line digraph invariants") {
    TestRng rng(7101);
    for (int i = 0; i < 300; ++i) {
        const Digraph g = random_digraph(rng, 7, 14);
        const LineDigraph l = line_digraph(g);
        CHECK(l.labels == g.arcs());  // vertex order = lexicographic arc order
        CHECK(l.graph.vertex_count() == g.arc_count());
        // arc (i,j) present iff labels[i].head == labels[j].tail, i != j
        const std::vector<Arc> expect = oracle_line_arcs(g.arcs());
        CHECK(l.graph.arcs() == expect);
        // Executable corollary: phi counts the line digraph's arcs.
        CHECK(phi(g) == l.graph.arc_count());
    }
}

TEST_CASE("phi on the named examples") {
    CHECK(phi(gen_o(12)) == 42);
    CHECK(phi(gen_o(11)) == 35);
    CHECK(phi(gen_o(11).transpose()) == 35);
    CHECK(phi(Digraph::from_arcs(2, {{0, 1}})) == 0);
}

TEST_CASE("max_arcs formula") {
    CHECK(max_arcs(12) == 42);
    CHECK(max_arcs(11) == 35);
    CHECK(max_arcs(2) == 2);
    CHECK(max_arcs(3) == 3);
    CHECK(max_arcs(4) == 6);
    CHECK(max_arcs(5) == 8);
    CHECK(max_arcs(6) == 12);
    CHECK(max_arcs(7) == 15);
    CHECK(max_arcs(1) == 0);
    CHECK(max_arcs(0) == 0);
    CHECK_THROWS_AS(max_arcs(-1), InvalidSizeError);
}

TEST_CASE("phi is transpose-invariant and additive over disjoint unions") {
    TestRng rng(7102);
    for (int i = 0; i < 300; ++i) {
        const Digraph g = random_digraph(rng, 8, 20);
        CHECK(phi(g.transpose()) == phi(g));
        const Digraph h = random_digraph(rng, 6, 12);
        CHECK(phi(disjoint_union(g, h)) == phi(g) + phi(h));
    }
}

TEST_CASE("max_arcs superadditivity justifies searching connected roots only") {
    for (int m = 2; m <= 16; ++m)
        for (int k = 1; k < m; ++k) CHECK(max_arcs(k) + max_arcs(m - k) < max_arcs(m));
}

TEST_CASE("line transform commutes with transpose up to isomorphism") {
    TestRng rng(7103);
    for (int i = 0; i < 100; ++i) {
        const Digraph g = random_digraph(rng, 6, 12);
        CHECK(are_isomorphic(line_digraph(g.transpose()).graph,
                             line_digraph(g).graph.transpose()));
    }
}
