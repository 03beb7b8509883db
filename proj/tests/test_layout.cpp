#include <doctest.h>

#include <numeric>
#include <random>

#include "laygraph/layout.hpp"
#include "support/naive.hpp"

using namespace laygraph;

namespace {

LinearLayout layout_of(std::vector<int> order, std::map<Edge, PageId> pages) {
    return LinearLayout(std::move(order), std::move(pages));
}

const PageId S0{PageKind::Stack, 0};
const PageId Q0{PageKind::Queue, 0};

}  // namespace

TEST_CASE("crossing and nesting predicates") {
    LinearLayout l = layout_of({0, 1, 2, 3}, {});
    CHECK(crosses(Edge(0, 2), Edge(1, 3), l));
    CHECK_FALSE(crosses(Edge(0, 1), Edge(2, 3), l));
    CHECK_FALSE(crosses(Edge(0, 3), Edge(1, 2), l));
    CHECK(nests(Edge(0, 3), Edge(1, 2), l));
    CHECK(nests(Edge(1, 2), Edge(0, 3), l));
    CHECK_FALSE(nests(Edge(0, 2), Edge(1, 3), l));
    CHECK_THROWS_AS(crosses(Edge(0, 1), Edge(1, 2), l), std::invalid_argument);
    CHECK_THROWS_AS(nests(Edge(0, 1), Edge(1, 2), l), std::invalid_argument);
}

TEST_CASE("validate separates structure errors from violations") {
    Graph g(4);
    g.add_edge(0, 2);
    g.add_edge(1, 3);
    LinearLayout bad_stack = layout_of({0, 1, 2, 3}, {{Edge(0, 2), S0}, {Edge(1, 3), S0}});
    auto report = validate(g, bad_stack, {1, 1});
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].page == S0);
    CHECK_FALSE(is_valid(g, bad_stack, {1, 1}));

    LinearLayout ok = layout_of({0, 1, 2, 3}, {{Edge(0, 2), S0}, {Edge(1, 3), Q0}});
    CHECK(is_valid(g, ok, {1, 1}));

    LinearLayout uncovered = layout_of({0, 1, 2, 3}, {{Edge(0, 2), S0}});
    CHECK_THROWS_AS(is_valid(g, uncovered, {1, 1}), LayoutStructureError);
    LinearLayout out_of_spec = layout_of({0, 1, 2, 3}, {{Edge(0, 2), S0}, {Edge(1, 3), {PageKind::Queue, 2}}});
    CHECK_THROWS_AS(validate(g, out_of_spec, {1, 1}), LayoutStructureError);
    CHECK_THROWS_AS(layout_of({0, 0, 1}, {}), LayoutStructureError);
}

TEST_CASE("queue nesting violation found, crossing allowed on queue") {
    Graph g(4);
    g.add_edge(0, 3);
    g.add_edge(1, 2);
    LinearLayout nested_queue = layout_of({0, 1, 2, 3}, {{Edge(0, 3), Q0}, {Edge(1, 2), Q0}});
    CHECK_FALSE(is_valid(g, nested_queue, {0, 1}));
    LinearLayout nested_stack = layout_of({0, 1, 2, 3}, {{Edge(0, 3), S0}, {Edge(1, 2), S0}});
    CHECK(is_valid(g, nested_stack, {1, 0}));
}

TEST_CASE("max twist and rainbow on handmade pages") {
    // 3-twist: (0,3),(1,4),(2,5) all on the stack page
    LinearLayout twist = layout_of(
        {0, 1, 2, 3, 4, 5},
        {{Edge(0, 3), S0}, {Edge(1, 4), S0}, {Edge(2, 5), S0}});
    CHECK(max_twist(twist, S0) == 3);
    CHECK(max_rainbow(twist, S0) == 1);
    // 3-rainbow
    LinearLayout rainbow = layout_of(
        {0, 1, 2, 3, 4, 5},
        {{Edge(0, 5), Q0}, {Edge(1, 4), Q0}, {Edge(2, 3), Q0}});
    CHECK(max_rainbow(rainbow, Q0) == 3);
    CHECK(max_twist(rainbow, Q0) == 1);
    CHECK(max_twist(rainbow, S0) == 0);  // empty page
}

TEST_CASE("max twist/rainbow agree with the subset oracle") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 7;
        std::vector<Edge> all;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
        std::shuffle(all.begin(), all.end(), rng);
        Graph g(n);
        std::map<Edge, PageId> pages;
        for (int i = 0; i < 9; ++i) {
            g.add_edge(all[i]);
            pages[all[i]] = rng() % 2 ? S0 : Q0;
        }
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        LinearLayout l = layout_of(order, pages);
        CHECK(max_twist(l, S0) == test_support::naive_max_conflict_set(l, S0));
        CHECK(max_rainbow(l, Q0) == test_support::naive_max_conflict_set(l, Q0));
    }
}

TEST_CASE("validity and twist/rainbow sizes are reversal invariant") {
    std::mt19937 rng(999);
    Graph g(5);
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            if (!(a == 3 && b == 4)) g.add_edge(a, b);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<int> order{0, 1, 2, 3, 4};
        std::shuffle(order.begin(), order.end(), rng);
        std::map<Edge, PageId> pages;
        for (const Edge& e : g.edges()) pages[e] = rng() % 2 ? S0 : Q0;
        LinearLayout l(order, pages);
        LinearLayout r = l.reversed();
        CHECK(is_valid(g, l, {1, 1}) == is_valid(g, r, {1, 1}));
        CHECK(max_twist(l, S0) == max_twist(r, S0));
        CHECK(max_rainbow(l, Q0) == max_rainbow(r, Q0));
    }
}

TEST_CASE("attachment classification") {
    TwoTree t = build_gkl({2, 3});  // vertices 2,3,4 attached to (0,1)
    std::map<Edge, PageId> pages{
        {Edge(0, 1), Q0}, {Edge(0, 2), S0}, {Edge(1, 2), S0}, {Edge(0, 3), Q0},
        {Edge(1, 3), Q0}, {Edge(0, 4), S0}, {Edge(1, 4), Q0}};
    LinearLayout l({0, 2, 3, 4, 1}, pages);
    CHECK(classify_attachment(t, l, 2) == AttachmentClass::StackAttachment);
    CHECK(classify_attachment(t, l, 3) == AttachmentClass::QueueAttachment);
    CHECK(classify_attachment(t, l, 4) == AttachmentClass::MixedAttachment);
    CHECK_THROWS_AS(classify_attachment(t, l, 0), std::invalid_argument);
}
