#include <doctest.h>

#include <random>

#include "gds/errors.hpp"
#include "gds/exact.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace gds;

namespace {

OrderedGraph path(int n) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    return OrderedGraph::identity(n, edges);
}

OrderedGraph complete(int n, std::vector<Vertex> order) {
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return OrderedGraph(n, edges, std::move(order));
}

OrderedGraph cycle(int n, std::vector<Vertex> order) {
    std::vector<Edge> edges;
    for (int v = 1; v <= n; ++v) edges.emplace_back(v, v % n + 1);
    return OrderedGraph(n, edges, std::move(order));
}

OrderedGraph c6_bad_order() { return cycle(6, {1, 4, 2, 5, 3, 6}); }

}  // namespace

TEST_CASE("min_hitting_set examples") {
    auto a = SetFamily::from_sets({{1, 2}, {2, 3}});
    CHECK(min_hitting_set(a).elements == std::vector<int>{2});

    auto b = SetFamily::from_sets({{1}, {2}});
    CHECK(min_hitting_set(b).size() == 2);

    auto c = SetFamily::from_sets({{1, 2}, {3, 4}, {1, 3}});
    auto expected = oracle::exhaustive_hitting_set(c.universe, c.sets);
    CHECK(expected == std::vector<int>{1, 3});
    CHECK(min_hitting_set(c).elements == expected);

    CHECK(min_hitting_set(SetFamily{}).size() == 0);
}

TEST_CASE("min_hitting_set errors") {
    CHECK_THROWS_AS(min_hitting_set(SetFamily{{1, 2}, {{1}, {}}}), InfeasibleError);
    CHECK_THROWS_AS(SetFamily::over({1, 2}, {{3}}), InputError);

    std::vector<int> universe;
    for (int e = 1; e <= 65; ++e) universe.push_back(e);
    std::vector<std::vector<int>> sets(10'001, std::vector<int>{1});
    CHECK_THROWS_AS(min_hitting_set(SetFamily{universe, sets}), CapabilityError);
}

TEST_CASE("min_hitting_set is optimal and lexicographically least on random families") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 250; ++trial) {
        int u = testing::uniform(1, 14, rng);
        int m = testing::uniform(0, 12, rng);
        std::vector<int> universe;
        for (int e = 1; e <= u; ++e) universe.push_back(e);
        std::vector<std::vector<int>> sets;
        for (int s = 0; s < m; ++s) {
            std::vector<int> member;
            for (int e = 1; e <= u; ++e)
                if (testing::uniform(0, 3, rng) == 0) member.push_back(e);
            if (member.empty()) member.push_back(testing::uniform(1, u, rng));
            sets.push_back(member);
        }
        auto family = SetFamily::over(universe, sets);
        auto expected = oracle::exhaustive_hitting_set(family.universe, family.sets);
        auto got = min_hitting_set(family);
        CHECK(got.elements == expected);
        CHECK(min_hitting_set_size(family, expected.size() + 1) == expected.size());
        CHECK_FALSE(min_hitting_set_size(family, expected.size()).has_value());
        CHECK(greedy_hitting_set(family).size() >= expected.size());
    }
}

TEST_CASE("min_vertex_cover") {
    CHECK(min_vertex_cover(path(3).simple()).elements == std::vector<int>{2});
    CHECK(min_vertex_cover(complete(4, {1, 2, 3, 4}).simple()).size() == 3);
    auto c5 = cycle(5, {1, 2, 3, 4, 5}).simple();
    CHECK(oracle::exhaustive_vertex_cover(c5.n, c5.edges) == 3);
    CHECK(min_vertex_cover(c5).size() == 3);
    CHECK(min_vertex_cover(SimpleGraph{3, {}}).size() == 0);
    CHECK_THROWS_AS(min_vertex_cover(SimpleGraph{41, {}}), CapabilityError);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        int n = testing::uniform(1, 11, rng);
        SimpleGraph h{n, testing::random_edges(n, 0.35, rng)};
        auto cover = min_vertex_cover(h);
        CHECK(is_vertex_cover(h, cover.elements));
        CHECK(cover.size() == oracle::exhaustive_vertex_cover(n, h.edges));
        // Second route: hitting set over the edges.
        std::vector<std::vector<int>> sets;
        for (auto [u, v] : h.edges) sets.push_back({u, v});
        std::vector<int> universe;
        for (int v = 1; v <= n; ++v) universe.push_back(v);
        CHECK(min_hitting_set(SetFamily::over(universe, sets)).size() == cover.size());
    }
}

TEST_CASE("gdn_fixed examples") {
    SUBCASE("path colored 2 1 2") {
        auto g = path(3);
        ProperColoring c({2, 1, 2});
        CHECK(oracle::brute_gdn_fixed(oracle::plain(g), {0, 2, 1, 2}) == 1);
        auto r = gdn_fixed(g, c);
        CHECK(r.size == 1);
        CHECK(r.witness == PartialColoring{{1, 2}});
        CHECK(is_gds(g, r.witness, c));
    }
    SUBCASE("path colored 1 2 1") {
        CHECK(gdn_fixed(path(3), ProperColoring({1, 2, 1})).size == 0);
    }
    SUBCASE("star with leaves first") {
        auto g = OrderedGraph::identity(4, {{1, 4}, {2, 4}, {3, 4}});
        ProperColoring c({2, 2, 2, 1});
        CHECK(oracle::brute_gdn_fixed(oracle::plain(g), {0, 2, 2, 2, 1}) == 1);
        auto r = gdn_fixed(g, c);
        CHECK(r.size == 1);
        CHECK(r.witness == PartialColoring{{4, 1}});
    }
}

TEST_CASE("gdn_fixed matches subset enumeration with greedy runs") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        int n = testing::uniform(1, 7, rng);
        auto g = testing::random_ordered_graph(n, 0.45, rng);
        int chi = chromatic_number(g);
        std::vector<ProperColoring> colorings;
        for_each_proper_coloring(g, chi, [&](const ProperColoring& c) {
            colorings.push_back(c);
            return colorings.size() < 3;
        });
        for (const auto& c : colorings) {
            std::vector<int> padded{0};
            padded.insert(padded.end(), c.colors().begin(), c.colors().end());
            auto r = gdn_fixed(g, c);
            CHECK(r.size == oracle::brute_gdn_fixed(oracle::plain(g), padded));
            CHECK(is_gds(g, r.witness, c));
        }
    }
}

TEST_CASE("for_each_proper_coloring enumerates every proper coloring once") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        int n = testing::uniform(1, 6, rng);
        auto g = testing::random_ordered_graph(n, 0.5, rng);
        int k = testing::uniform(1, 3, rng);
        std::set<std::vector<Color>> seen;
        auto count = for_each_proper_coloring(g, k, [&](const ProperColoring& c) {
            CHECK(c.is_proper_on(g));
            seen.insert(c.colors());
            return true;
        });
        // Count by brute force over all k^n assignments.
        std::uint64_t expected = 0;
        std::vector<int> a(static_cast<std::size_t>(n), 1);
        while (true) {
            bool ok = true;
            for (auto [u, v] : g.edges()) ok = ok && a[static_cast<std::size_t>(u - 1)] != a[static_cast<std::size_t>(v - 1)];
            expected += ok;
            std::size_t i = 0;
            while (i < a.size() && a[i] == k) a[i++] = 1;
            if (i == a.size()) break;
            ++a[i];
        }
        CHECK(count == expected);
        CHECK(seen.size() == expected);
    }
}

TEST_CASE("gdn examples") {
    CHECK(gdn(path(2)).size == 0);
    CHECK(gdn(complete(5, {3, 1, 5, 2, 4})).size == 0);
    auto c6 = c6_bad_order();
    CHECK(brute_force_gdn_oracle(c6) == 1);
    auto r = gdn(c6);
    CHECK(r.size == 1);
    CHECK(is_gds(c6, r.witness));
    CHECK(is_gds(c6, r.witness, ProperColoring(r.coloring)));
}

TEST_CASE("brute_force_gdn_oracle examples and guard") {
    CHECK(brute_force_gdn_oracle(path(3)) == 0);
    CHECK(brute_force_gdn_oracle(cycle(4, {1, 2, 3, 4})) == 0);
    CHECK(brute_force_gdn_oracle(c6_bad_order()) == 1);
    CHECK_THROWS_AS(brute_force_gdn_oracle(OrderedGraph::identity(10, {})), CapabilityError);
}

TEST_CASE("gdn agrees with the brute-force oracle") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 120; ++trial) {
        int n = testing::uniform(1, 7, rng);
        auto g = testing::random_ordered_graph(n, testing::uniform(2, 7, rng) / 10.0, rng);
        auto r = gdn(g);
        CHECK(static_cast<int>(r.size) == brute_force_gdn_oracle(g));
        CHECK(r.witness.size() == r.size);
        CHECK(is_gds(g, r.witness));
    }
}

TEST_CASE("bipartite graphs have a minimum defining set inside color class 1") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        int n = testing::uniform(2, 10, rng);
        // Connected bipartite: a random tree plus random cross edges.
        auto tree = testing::random_tree(n, rng);
        std::vector<Color> side(static_cast<std::size_t>(n), 0);
        side[0] = 1;
        std::vector<Vertex> stack{1};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : tree.neighbors(v))
                if (side[static_cast<std::size_t>(u - 1)] == 0)
                    side[static_cast<std::size_t>(u - 1)] = 3 - side[static_cast<std::size_t>(v - 1)], stack.push_back(u);
        }
        auto edges = tree.edges();
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (side[static_cast<std::size_t>(u - 1)] != side[static_cast<std::size_t>(v - 1)] &&
                    !tree.adjacent(u, v) && testing::uniform(0, 4, rng) == 0)
                    edges.emplace_back(u, v);
        OrderedGraph g(n, edges, testing::random_order(n, rng));
        ProperColoring c(side);

        auto all = descent_family(g, c);
        std::vector<int> ones;
        for (int v = 1; v <= n; ++v)
            if (c[v] == 1) ones.push_back(v);
        std::vector<std::vector<int>> restricted;
        for (const auto& s : all.sets) {
            std::vector<int> kept;
            for (int v : s)
                if (c[v] == 1) kept.push_back(v);
            restricted.push_back(kept);
        }
        CHECK(min_hitting_set(all).size() == min_hitting_set(SetFamily::over(ones, restricted)).size());
    }
}

TEST_CASE("gdn guards") {
    CHECK_THROWS_AS(gdn(OrderedGraph::identity(65, {})), CapabilityError);
    CHECK(gdn(OrderedGraph::identity(1, {})).size == 0);
}
