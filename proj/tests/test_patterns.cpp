#include <doctest.h>

#include <numeric>
#include <random>

#include "laygraph/pattern.hpp"
#include "support/naive.hpp"

using namespace laygraph;

namespace {

const PageId S0{PageKind::Stack, 0};
const PageId Q0{PageKind::Queue, 0};

std::vector<std::vector<int>> vertex_tuples(const std::vector<Witness>& ws) {
    std::vector<std::vector<int>> out;
    for (const auto& w : ws) out.push_back(w.vertices);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("a handmade smiley face is found") {
    // a < b < u < v < c < d with queues (a,b),(c,d),(a,d) and stack (u,v)
    Graph g(6);
    std::map<Edge, PageId> pages;
    for (auto [x, y, p] : std::vector<std::tuple<int, int, PageId>>{
             {0, 1, Q0}, {4, 5, Q0}, {0, 5, Q0}, {2, 3, S0}}) {
        g.add_edge(x, y);
        pages[Edge(x, y)] = p;
    }
    LinearLayout l({0, 1, 2, 3, 4, 5}, pages);
    auto ws = find_smileys(g, l);
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].vertices == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(ws[0].kind == WitnessKind::SmileyFace);
    CHECK(ws[0].edges.size() == 4);

    // found in the reversed reading direction too
    auto rev = find_smileys(g, l.reversed());
    REQUIRE(rev.size() == 1);
    CHECK(rev[0].vertices == std::vector<int>{0, 1, 2, 3, 4, 5});

    // restriction excludes it
    CHECK(find_smileys(g, l, std::set<int>{0, 1, 2, 3, 4}).empty());
    // budget guard
    CHECK_THROWS_AS(find_smileys(g, l, std::nullopt, 5), std::invalid_argument);
}

TEST_CASE("handmade patterns are found") {
    auto build = [](const std::vector<std::tuple<int, int, PageId>>& spec) {
        Graph g(7);
        std::map<Edge, PageId> pages;
        for (auto [x, y, p] : spec) {
            g.add_edge(x, y);
            pages[Edge(x, y)] = p;
        }
        return std::make_pair(g, LinearLayout({0, 1, 2, 3, 4, 5, 6}, pages));
    };
    auto [g1, l1] = build({{0, 2, S0}, {0, 5, S0}, {3, 4, S0}, {1, 6, Q0}});
    auto w1 = find_patterns(g1, l1, PatternName::P1);
    REQUIRE(w1.size() == 1);
    CHECK(w1[0].vertices == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
    CHECK(find_patterns(g1, l1, PatternName::P1a).empty());

    auto [g2, l2] = build({{1, 2, S0}, {1, 5, S0}, {3, 4, S0}, {0, 6, Q0}});
    CHECK(find_patterns(g2, l2, PatternName::P1a).size() == 1);

    auto [g3, l3] = build({{0, 6, S0}, {1, 3, S0}, {1, 4, S0}, {0, 5, Q0}, {2, 6, Q0}});
    auto w3 = find_patterns(g3, l3, PatternName::P2);
    REQUIRE(w3.size() == 1);
    CHECK(w3[0].kind == WitnessKind::PatternP2);
}

TEST_CASE("pattern scan agrees with the all-tuples oracle") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 8;
        std::vector<Edge> all;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
        std::shuffle(all.begin(), all.end(), rng);
        Graph g(n);
        std::map<Edge, PageId> pages;
        for (int i = 0; i < 14; ++i) {
            g.add_edge(all[i]);
            pages[all[i]] = rng() % 2 ? S0 : Q0;
        }
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        LinearLayout l(order, pages);

        using TS = test_support::NaiveTemplateEdge;
        std::vector<TS> smiley{{0, 1, PageKind::Queue},
                               {4, 5, PageKind::Queue},
                               {0, 5, PageKind::Queue},
                               {2, 3, PageKind::Stack}};
        CHECK(vertex_tuples(find_smileys(g, l)) == test_support::naive_match(g, l, 6, smiley));

        std::vector<TS> p2{{0, 6, PageKind::Stack},
                           {1, 3, PageKind::Stack},
                           {1, 4, PageKind::Stack},
                           {0, 5, PageKind::Queue},
                           {2, 6, PageKind::Queue}};
        CHECK(vertex_tuples(find_patterns(g, l, PatternName::P2)) ==
              test_support::naive_match(g, l, 7, p2));
    }
}
