#include "gds/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gds/errors.hpp"
#include "gds/exact.hpp"

namespace gds {

SimpleGraph normalized(SimpleGraph f) {
    // OrderedGraph performs all the validation we need.
    auto g = OrderedGraph::identity(f.n, std::move(f.edges));
    return g.simple();
}

bool is_connected(const SimpleGraph& f) {
    if (f.n <= 1) return true;
    auto g = OrderedGraph::identity(f.n, f.edges);
    std::vector<char> seen(static_cast<std::size_t>(f.n) + 1, 0);
    std::vector<Vertex> stack{1};
    seen[1] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbors(v))
            if (!seen[static_cast<std::size_t>(u)]) seen[static_cast<std::size_t>(u)] = 1, ++reached, stack.push_back(u);
    }
    return reached == f.n;
}

ColoredVcInstance colored_vc_instance(const SimpleGraph& input) {
    if (input.n < 1) throw InputError("colored_vc_instance: F needs at least one vertex");
    ColoredVcInstance inst;
    inst.source = normalized(input);
    const int n = inst.source.n;
    auto f = OrderedGraph::identity(n, inst.source.edges);

    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    for (auto [u, v] : inst.source.edges) edges.emplace_back(inst.copy_of(u), inst.copy_of(v));
    // F-vertex v has color c(v) = v; it meets K_n vertex i < v exactly when
    // v is not adjacent in F to the F-vertex colored i.
    for (int v = 1; v <= n; ++v)
        for (int i = 1; i < v; ++i)
            if (!f.adjacent(v, i)) edges.emplace_back(i, inst.copy_of(v));

    std::vector<Vertex> order(static_cast<std::size_t>(2 * n));
    for (int i = 1; i <= n; ++i) order[static_cast<std::size_t>(i - 1)] = i;
    // The copy of color j sits at position 2n - j + 1.
    for (int j = 1; j <= n; ++j) order[static_cast<std::size_t>(2 * n - j)] = inst.copy_of(j);
    inst.graph = OrderedGraph(2 * n, std::move(edges), std::move(order));

    std::vector<Color> colors(static_cast<std::size_t>(2 * n));
    inst.source_coloring.resize(static_cast<std::size_t>(n));
    inst.back_map.assign(static_cast<std::size_t>(2 * n) + 1, 0);
    for (int v = 1; v <= n; ++v) {
        colors[static_cast<std::size_t>(v - 1)] = v;
        colors[static_cast<std::size_t>(inst.copy_of(v) - 1)] = v;
        inst.source_coloring[static_cast<std::size_t>(v - 1)] = v;
        inst.back_map[static_cast<std::size_t>(inst.copy_of(v))] = v;
    }
    inst.coloring = ProperColoring(std::move(colors));
    return inst;
}

ProperColoring BipartiteVcInstance::coloring_with_x(Color x_color) const {
    std::vector<Color> colors(back_map.size());
    for (std::size_t i = 0; i < back_map.size(); ++i) {
        bool in_x = back_map[i].part == Part::V1 || back_map[i].part == Part::E1;
        colors[i] = in_x ? x_color : 3 - x_color;
    }
    return ProperColoring(std::move(colors));
}

BipartiteVcInstance bipartite_vc_instance(const SimpleGraph& input) {
    BipartiteVcInstance inst;
    inst.source = normalized(input);
    const int n = inst.source.n;
    const int m = static_cast<int>(inst.source.edges.size());
    if (m == 0) throw InputError("bipartite_vc_instance: F needs at least one edge");
    if (!is_connected(inst.source)) throw InputError("bipartite_vc_instance: F must be connected");

    const int total = 2 * n + 2 * m;
    inst.back_map.resize(static_cast<std::size_t>(total));
    std::vector<Edge> edges;
    for (int v = 1; v <= n; ++v) {
        inst.back_map[static_cast<std::size_t>(inst.v1(v) - 1)] = {BipartiteVcInstance::Part::V1, v};
        inst.back_map[static_cast<std::size_t>(inst.v2(v) - 1)] = {BipartiteVcInstance::Part::V2, v};
        edges.emplace_back(inst.v1(v), inst.v2(v));
    }
    for (int e = 1; e <= m; ++e) {
        inst.back_map[static_cast<std::size_t>(inst.e1(e) - 1)] = {BipartiteVcInstance::Part::E1, e};
        inst.back_map[static_cast<std::size_t>(inst.e2(e) - 1)] = {BipartiteVcInstance::Part::E2, e};
        auto [a, b] = inst.source.edges[static_cast<std::size_t>(e - 1)];
        for (int endpoint : {a, b}) {
            edges.emplace_back(inst.v1(endpoint), inst.e2(e));
            edges.emplace_back(inst.v2(endpoint), inst.e1(e));
        }
    }

    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(total));
    for (int e = 1; e <= m; ++e) order.push_back(inst.e2(e));
    for (int e = 1; e <= m; ++e) order.push_back(inst.e1(e));
    for (int v = 1; v <= n; ++v) order.push_back(inst.v2(v));
    for (int v = 1; v <= n; ++v) order.push_back(inst.v1(v));
    inst.graph = OrderedGraph(total, std::move(edges), std::move(order));
    return inst;
}

namespace {

void require_cover(const SimpleGraph& f, std::span<const int> cover, const char* who) {
    for (int v : cover)
        if (v < 1 || v > f.n)
            throw InputError(std::string(who) + ": cover names unknown vertex " + std::to_string(v));
    if (!is_vertex_cover(f, cover)) throw InputError(std::string(who) + ": not a vertex cover of F");
}

std::vector<int> finish_cover(std::vector<int> cover, const SimpleGraph& f) {
    std::sort(cover.begin(), cover.end());
    cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
    if (!is_vertex_cover(f, cover))
        throw InternalError("map_gds_to_cover: back-mapped set is not a vertex cover");
    return cover;
}

}  // namespace

PartialColoring map_cover_to_gds(const ColoredVcInstance& inst, std::span<const int> cover) {
    require_cover(inst.source, cover, "map_cover_to_gds");
    PartialColoring s;
    for (int v : cover) s.emplace(inst.copy_of(v), inst.coloring[inst.copy_of(v)]);
    return s;
}

PartialColoring map_cover_to_gds(const BipartiteVcInstance& inst, std::span<const int> cover) {
    require_cover(inst.source, cover, "map_cover_to_gds");
    PartialColoring s;
    for (int v : cover) s.emplace(inst.v1(v), 1);
    return s;
}

std::vector<int> map_gds_to_cover(const ColoredVcInstance& inst, const PartialColoring& s) {
    if (!is_gds(inst.graph, s, inst.coloring))
        throw InputError("map_gds_to_cover: not a greedy defining set of the instance coloring");
    std::vector<int> cover;
    for (const auto& [v, c] : s)
        if (int origin = inst.back_map[static_cast<std::size_t>(v)]; origin != 0) cover.push_back(origin);
    return finish_cover(std::move(cover), inst.source);
}

std::vector<int> map_gds_to_cover(const BipartiteVcInstance& inst, const PartialColoring& s) {
    if (!is_gds_with_chi(inst.graph, s, 2))
        throw InputError("map_gds_to_cover: not a greedy defining set of the instance");
    std::vector<int> cover;
    for (const auto& [v, c] : s) {
        const auto& origin = inst.back_map[static_cast<std::size_t>(v - 1)];
        switch (origin.part) {
            case BipartiteVcInstance::Part::V1:
            case BipartiteVcInstance::Part::V2:
                cover.push_back(origin.index);
                break;
            case BipartiteVcInstance::Part::E1:
            case BipartiteVcInstance::Part::E2:
                cover.push_back(inst.source.edges[static_cast<std::size_t>(origin.index - 1)].first);
                break;
        }
    }
    return finish_cover(std::move(cover), inst.source);
}

}  // namespace gds
