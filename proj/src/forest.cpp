#include "gds/forest.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "gds/errors.hpp"

namespace gds {

namespace {

std::size_t at(Vertex v) { return static_cast<std::size_t>(v - 1); }

// Component id (0-based) of every vertex; components numbered by their
// smallest vertex. Returns the component count.
int label_components(const OrderedGraph& g, std::vector<int>& comp) {
    comp.assign(static_cast<std::size_t>(g.size()), -1);
    int count = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 1; s <= g.size(); ++s) {
        if (comp[at(s)] != -1) continue;
        comp[at(s)] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : g.neighbors(v))
                if (comp[at(u)] == -1) comp[at(u)] = count, stack.push_back(u);
        }
        ++count;
    }
    return count;
}

// Leaf peeling on a 2-colored forest; returns the chosen color-1 vertices.
std::vector<Vertex> peel(const OrderedGraph& g, const std::vector<Color>& colors) {
    const int n = g.size();
    auto color = [&](Vertex v) { return colors[at(v)]; };

    std::vector<char> head(static_cast<std::size_t>(n), 0);
    for (Vertex v = 1; v <= n; ++v) {
        if (color(v) != 2) continue;
        bool all_later = true;
        for (Vertex u : g.neighbors(v))
            if (g.position(u) < g.position(v)) { all_later = false; break; }
        head[at(v)] = all_later;
    }

    // The subgraph H: heads and their neighbors, joined by head edges only.
    std::vector<char> alive(static_cast<std::size_t>(n), 0);
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    std::size_t remaining = 0;
    for (Vertex v = 1; v <= n; ++v) {
        if (!head[at(v)]) continue;
        if (g.degree(v) == 0) throw InternalError("tree_gdn_fixed: isolated descent head " + std::to_string(v));
        if (!alive[at(v)]) alive[at(v)] = 1, ++remaining;
        degree[at(v)] = static_cast<int>(g.degree(v));
        for (Vertex u : g.neighbors(v)) {
            if (!alive[at(u)]) alive[at(u)] = 1, ++remaining;
            ++degree[at(u)];
        }
    }

    using Entry = std::pair<int, Vertex>;  // (position, vertex)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> head_leaves, plain_leaves;
    auto enqueue = [&](Vertex v) {
        if (degree[at(v)] != 1) return;
        (head[at(v)] ? head_leaves : plain_leaves).emplace(g.position(v), v);
    };
    for (Vertex v = 1; v <= n; ++v)
        if (alive[at(v)]) enqueue(v);

    auto kill = [&](Vertex v) {
        alive[at(v)] = 0;
        --remaining;
    };
    // Removing a vertex lowers the H-degree of its live H-neighbors.
    auto detach = [&](Vertex v) {
        for (Vertex u : g.neighbors(v)) {
            if (!alive[at(u)] || head[at(u)] == head[at(v)]) continue;
            int d = --degree[at(u)];
            if (head[at(u)]) {
                if (d == 0)
                    throw InternalError("tree_gdn_fixed: descent head " + std::to_string(u) +
                                        " lost all of its neighbors");
                enqueue(u);
            } else if (d == 0) {
                kill(u);
            } else {
                enqueue(u);
            }
        }
    };
    auto pop_live = [&](auto& heap) -> Vertex {
        while (!heap.empty()) {
            Vertex v = heap.top().second;
            heap.pop();
            if (alive[at(v)] && degree[at(v)] == 1) return v;
        }
        return 0;
    };

    std::vector<Vertex> chosen;
    while (remaining > 0) {
        if (Vertex v = pop_live(head_leaves); v != 0) {
            Vertex u = 0;
            for (Vertex w : g.neighbors(v))
                if (alive[at(w)]) { u = w; break; }
            chosen.push_back(u);
            kill(u);
            for (Vertex w : g.neighbors(u)) {
                if (!alive[at(w)] || !head[at(w)]) continue;
                kill(w);
                detach(w);
            }
        } else if (Vertex x = pop_live(plain_leaves); x != 0) {
            kill(x);
            detach(x);
        } else {
            throw InternalError("tree_gdn_fixed: no leaf left in a non-empty forest");
        }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

// Two-coloring with the smallest vertex of each component colored 1.
std::vector<Color> canonical_two_coloring(const OrderedGraph& g) {
    std::vector<Color> colors(static_cast<std::size_t>(g.size()), 0);
    std::queue<Vertex> q;
    for (Vertex s = 1; s <= g.size(); ++s) {
        if (colors[at(s)] != 0) continue;
        colors[at(s)] = 1;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex u : g.neighbors(v))
                if (colors[at(u)] == 0) colors[at(u)] = 3 - colors[at(v)], q.push(u);
        }
    }
    return colors;
}

}  // namespace

GdnResult tree_gdn_fixed(const TreeInstance& t) {
    const auto& g = t.tree;
    if (g.size() < 1) throw InputError("tree_gdn_fixed: empty tree");
    std::vector<int> comp;
    if (label_components(g, comp) != 1 || g.edge_count() != static_cast<std::size_t>(g.size() - 1))
        throw InputError("tree_gdn_fixed: graph is not a tree");
    t.coloring.require_proper_on(g);
    if (t.coloring.k() > 2 || (g.size() == 1 && t.coloring.k() != 1))
        throw InputError("tree_gdn_fixed: coloring must use colors 1 and 2 (1 for a single vertex)");

    auto chosen = peel(g, t.coloring.colors());
    GdnResult out;
    out.size = chosen.size();
    for (Vertex v : chosen) out.witness.emplace(v, 1);
    out.coloring = t.coloring.colors();
    return out;
}

GdnResult forest_gdn(const OrderedGraph& f) {
    std::vector<int> comp;
    int components = label_components(f, comp);
    if (f.edge_count() + static_cast<std::size_t>(components) != static_cast<std::size_t>(f.size()))
        throw InputError("forest_gdn: graph contains a cycle");

    // Components never interact during peeling, so both colorings of every
    // component are handled by two whole-forest runs.
    std::vector<Color> first = canonical_two_coloring(f);
    std::vector<Color> second = first;
    for (Vertex v = 1; v <= f.size(); ++v)
        if (f.degree(v) > 0) second[at(v)] = 3 - first[at(v)];

    auto picked_first = peel(f, first);
    auto picked_second = peel(f, second);
    std::vector<std::size_t> cost_first(static_cast<std::size_t>(components), 0);
    std::vector<std::size_t> cost_second(static_cast<std::size_t>(components), 0);
    for (Vertex v : picked_first) ++cost_first[static_cast<std::size_t>(comp[at(v)])];
    for (Vertex v : picked_second) ++cost_second[static_cast<std::size_t>(comp[at(v)])];

    auto use_second = [&](Vertex v) {
        auto c = static_cast<std::size_t>(comp[at(v)]);
        return cost_second[c] < cost_first[c];
    };

    GdnResult out;
    out.coloring.resize(static_cast<std::size_t>(f.size()));
    for (Vertex v = 1; v <= f.size(); ++v) out.coloring[at(v)] = use_second(v) ? second[at(v)] : first[at(v)];
    for (Vertex v : picked_first)
        if (!use_second(v)) out.witness.emplace(v, 1);
    for (Vertex v : picked_second)
        if (use_second(v)) out.witness.emplace(v, 1);
    out.size = out.witness.size();
    return out;
}

}  // namespace gds
