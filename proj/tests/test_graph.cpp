#include <doctest.h>

#include <sstream>

#include "laygraph/two_tree.hpp"

using namespace laygraph;

TEST_CASE("edges normalize and reject self-loops") {
    Edge e(3, 1);
    CHECK(e.u == 1);
    CHECK(e.v == 3);
    CHECK(e == Edge(1, 3));
    CHECK(e.shares_endpoint(Edge(3, 7)));
    CHECK_FALSE(e.shares_endpoint(Edge(2, 4)));
    CHECK(e.other(1) == 3);
    CHECK_THROWS_AS(Edge(2, 2), std::invalid_argument);
}

TEST_CASE("graph rejects duplicates and out-of-range endpoints") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK(g.has_edge(1, 0));
    CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(g.edge_index(Edge(0, 2)), std::invalid_argument);
    g.add_edge(0, 2);
    CHECK(g.edge_index(Edge(0, 2)) == 1);
    CHECK(g.neighbors(0) == std::vector<int>{1, 2});
}

TEST_CASE("two-tree attachment semantics") {
    TwoTree t = TwoTree::single_edge();
    CHECK(t.graph().vertex_count() == 2);
    CHECK(t.edge_generation(Edge(0, 1)) == 1);
    t.attach(Edge(0, 1));
    CHECK(t.graph().vertex_count() == 3);
    CHECK(t.vertex_generation(2) == 2);
    CHECK(t.edge_generation(Edge(0, 2)) == 2);
    CHECK(t.parent_edge(2) == Edge(0, 1));
    CHECK_FALSE(t.parent_edge(0).has_value());
    t.attach(Edge(0, 2));
    CHECK(t.vertex_generation(3) == 3);
    CHECK(t.max_generation() == 3);
    CHECK_THROWS_AS(t.attach(Edge(1, 3)), std::invalid_argument);  // not an edge

    Graph g1 = t.subgraph_by_generation(1, GenerationMode::UpTo);
    CHECK(g1.edge_count() == 1);
    Graph g2 = t.subgraph_by_generation(2, GenerationMode::Exactly);
    CHECK(g2.edge_count() == 2);
    CHECK(t.attachments_of(Edge(0, 1), 2) == std::vector<int>{2});
    CHECK(t.attachments_of(Edge(0, 2), 3) == std::vector<int>{3});
}

TEST_CASE("gkl family sizes") {
    // closed form vs construction, frozen values
    TwoTree g23 = build_gkl({2, 3});
    CHECK(g23.graph().vertex_count() == 5);
    CHECK(g23.graph().edge_count() == 7);
    TwoTree g33 = build_gkl({3, 3});
    CHECK(g33.graph().vertex_count() == 26);
    CHECK(g33.graph().edge_count() == 49);

    for (int k = 1; k <= 4; ++k)
        for (int ell = 1; ell <= 3; ++ell) {
            GklSize s = gkl_size({k, ell});
            TwoTree t = build_gkl({k, ell});
            CHECK(s.vertices == static_cast<std::uint64_t>(t.graph().vertex_count()));
            CHECK(s.edges == static_cast<std::uint64_t>(t.graph().edge_count()));
        }

    GklSize big = gkl_size({5, 33});
    CHECK(big.vertices == 10075562);
    CHECK(big.edges == 20151121);

    CHECK_THROWS_AS(gkl_size({40, 33}), GklOverflow);
    CHECK_THROWS_AS(build_gkl({5, 33}), SizeCapExceeded);
    CHECK_THROWS_AS(build_gkl({0, 3}), std::invalid_argument);
}

TEST_CASE("generation structure of a gkl build") {
    TwoTree t = build_gkl({3, 2});
    // every edge of generation < 3 carries exactly 2 attachments per round
    for (const Edge& e : t.graph().edges()) {
        int g = t.edge_generation(e);
        for (int next = g + 1; next <= 3; ++next)
            CHECK(t.attachments_of(e, next).size() == 2);
    }
    // vertices appear generation by generation
    for (int v = 1; v < t.graph().vertex_count(); ++v)
        CHECK(t.vertex_generation(v - 1) <= t.vertex_generation(v));
}

TEST_CASE("two-tree reconstruction from labels") {
    TwoTree t = build_gkl({3, 2});
    std::vector<int> gens;
    for (const Edge& e : t.graph().edges()) gens.push_back(t.edge_generation(e));
    TwoTree back = two_tree_from_labeled_graph(t.graph(), gens);
    CHECK(back.graph() == t.graph());
    CHECK(back.log() == t.log());

    gens[2] += 1;
    CHECK_THROWS_AS(two_tree_from_labeled_graph(t.graph(), gens), std::invalid_argument);

    Graph not_two_tree(4);
    not_two_tree.add_edge(0, 1);
    not_two_tree.add_edge(2, 3);
    CHECK_THROWS_AS(two_tree_from_labeled_graph(not_two_tree, {1, 2}), std::invalid_argument);
}
