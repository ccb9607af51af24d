#include <doctest.h>

#include <random>

#include "gds/errors.hpp"
#include "gds/forest.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace gds;

namespace {

// Proper 2-coloring of a forest; the smallest vertex of each component gets `root_color`.
std::vector<Color> two_coloring(const OrderedGraph& f, Color root_color) {
    std::vector<Color> c(static_cast<std::size_t>(f.size()), 0);
    for (Vertex s = 1; s <= f.size(); ++s) {
        if (c[static_cast<std::size_t>(s - 1)]) continue;
        c[static_cast<std::size_t>(s - 1)] = f.degree(s) == 0 ? 1 : root_color;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : f.neighbors(v))
                if (!c[static_cast<std::size_t>(u - 1)])
                    c[static_cast<std::size_t>(u - 1)] = 3 - c[static_cast<std::size_t>(v - 1)], stack.push_back(u);
        }
    }
    return c;
}

OrderedGraph random_forest(int n, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (auto e : testing::random_tree_edges(n, rng))
        if (testing::uniform(0, 4, rng) != 0) edges.push_back(e);
    return OrderedGraph(n, edges, testing::random_order(n, rng));
}

}  // namespace

TEST_CASE("forest examples") {
    SUBCASE("path in order") {
        auto p = OrderedGraph::identity(3, {{1, 2}, {2, 3}});
        CHECK(forest_gdn(p).size == 0);
    }
    SUBCASE("star with leaves first") {
        auto star = OrderedGraph::identity(4, {{1, 4}, {2, 4}, {3, 4}});
        auto fixed = tree_gdn_fixed({star, ProperColoring({2, 2, 2, 1})});
        CHECK(fixed.size == 1);
        CHECK(fixed.witness == PartialColoring{{4, 1}});
        CHECK(forest_gdn(star).size == 0);
    }
    SUBCASE("path with both colorings blocked") {
        // Vertex 4 precedes 3 and vertex 1 precedes 2.
        OrderedGraph p(4, {{1, 2}, {2, 3}, {3, 4}}, {4, 1, 2, 3});
        CHECK(brute_force_gdn_oracle(p) == 1);
        auto r = forest_gdn(p);
        CHECK(r.size == 1);
        CHECK(is_gds(p, r.witness, ProperColoring(r.coloring)));
    }
    SUBCASE("single vertex and edgeless forest") {
        CHECK(tree_gdn_fixed({OrderedGraph::identity(1, {}), ProperColoring({1})}).size == 0);
        auto empty = forest_gdn(OrderedGraph::identity(5, {}));
        CHECK(empty.size == 0);
        CHECK(empty.coloring == std::vector<Color>(5, 1));
    }
}

TEST_CASE("forest input errors") {
    auto triangle = OrderedGraph::identity(3, {{1, 2}, {2, 3}, {1, 3}});
    CHECK_THROWS_AS(forest_gdn(triangle), InputError);
    auto two_parts = OrderedGraph::identity(4, {{1, 2}, {3, 4}});
    CHECK_THROWS_AS(tree_gdn_fixed({two_parts, ProperColoring({1, 2, 1, 2})}), InputError);
    auto p = OrderedGraph::identity(3, {{1, 2}, {2, 3}});
    CHECK_THROWS_AS(tree_gdn_fixed({p, ProperColoring({1, 1, 2})}), InputError);
    CHECK_THROWS_AS(tree_gdn_fixed({p, ProperColoring({1, 3, 1})}), InputError);
    CHECK_THROWS_AS(tree_gdn_fixed({OrderedGraph::identity(1, {}), ProperColoring({2})}), InputError);
}

TEST_CASE("tree_gdn_fixed equals the exact hitting set on random trees") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 400; ++trial) {
        int n = testing::uniform(2, 16, rng);
        auto t = testing::random_tree(n, rng);
        for (Color root : {1, 2}) {
            ProperColoring c(two_coloring(t, root));
            auto got = tree_gdn_fixed({t, c});
            CHECK(got.size == gdn_fixed(t, c).size);
            CHECK(got.witness.size() == got.size);
            CHECK(is_gds(t, got.witness, c));
            for (auto [v, color] : got.witness) CHECK(color == 1);
        }
    }
}

TEST_CASE("forest_gdn equals gdn on random forests") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 250; ++trial) {
        int n = testing::uniform(1, 11, rng);
        auto f = random_forest(n, rng);
        auto fast = forest_gdn(f);
        CHECK(fast.size == gdn(f).size);
        if (n <= 8) CHECK(static_cast<int>(fast.size) == brute_force_gdn_oracle(f));
        ProperColoring c(fast.coloring);
        CHECK(c.k() <= 2);
        CHECK(is_gds(f, fast.witness, c));
        CHECK(is_gds(f, fast.witness));
    }
}

TEST_CASE("forest_gdn handles long paths in adversarial order") {
    // Odd vertices first: every even vertex is a descent head under one coloring.
    const int n = 20'000;
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    std::vector<Vertex> order;
    for (int v = 1; v <= n; v += 2) order.push_back(v);
    for (int v = 2; v <= n; v += 2) order.push_back(v);
    OrderedGraph p(n, edges, order);
    auto r = forest_gdn(p);
    CHECK(is_gds(p, r.witness, ProperColoring(r.coloring)));
    // Coloring odd vertices 1 has no descents at all.
    CHECK(r.size == 0);
}

TEST_CASE("tree examples") {
    auto p3 = OrderedGraph::identity(3, {{1, 2}, {2, 3}});
    auto r = tree_gdn_fixed({p3, ProperColoring({2, 1, 2})});
    CHECK(r.witness == PartialColoring{{2, 1}});

    auto p4 = OrderedGraph::identity(4, {{1, 2}, {2, 3}, {3, 4}});
    CHECK(tree_gdn_fixed({p4, ProperColoring({1, 2, 1, 2})}).size == 0);

    // Two stars, leaves before centers: first-fit colors the leaves 1 and
    // the centers 2 unaided. Only the coloring with centers 1 needs a
    // defining set, one center per star.
    auto stars = OrderedGraph::identity(8, {{1, 4}, {2, 4}, {3, 4}, {5, 8}, {6, 8}, {7, 8}});
    CHECK(brute_force_gdn_oracle(stars) == 0);
    CHECK(forest_gdn(stars).size == 0);
    ProperColoring centers_one({2, 2, 2, 1, 2, 2, 2, 1});
    CHECK(oracle::brute_gdn_fixed(oracle::plain(stars), {0, 2, 2, 2, 1, 2, 2, 2, 1}) == 2);
    CHECK(gdn_fixed(stars, centers_one).size == 2);
}
