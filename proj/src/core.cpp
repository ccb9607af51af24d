#include "gds/core.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <string>

#include "gds/errors.hpp"

namespace gds {

OrderedGraph::OrderedGraph(int n, std::vector<Edge> edges, std::vector<Vertex> order)
    : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))),
      position_(static_cast<std::size_t>(std::max(n, 0)), 0), order_(std::move(order)) {
    if (n < 0) throw InputError("negative vertex count");
    if (order_.size() != static_cast<std::size_t>(n))
        throw InputError("order lists " + std::to_string(order_.size()) + " vertices, expected " +
                         std::to_string(n));
    for (std::size_t p = 0; p < order_.size(); ++p) {
        Vertex v = order_[p];
        if (!contains(v)) throw InputError("order names unknown vertex " + std::to_string(v));
        if (position_[index(v)] != 0)
            throw InputError("order repeats vertex " + std::to_string(v));
        position_[index(v)] = static_cast<int>(p) + 1;
    }

    for (auto& [u, v] : edges) {
        if (!contains(u) || !contains(v))
            throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                             " names an unknown vertex");
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw InputError("duplicate edge " + std::to_string(dup->first) + "-" +
                         std::to_string(dup->second));
    edges_ = std::move(edges);

    for (auto [u, v] : edges_) {
        adj_[index(u)].push_back(v);
        adj_[index(v)].push_back(u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

OrderedGraph OrderedGraph::identity(int n, std::vector<Edge> edges) {
    std::vector<Vertex> order(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
    return OrderedGraph(n, std::move(edges), std::move(order));
}

bool OrderedGraph::adjacent(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) return false;
    const auto& list = adj_[index(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

ProperColoring::ProperColoring(std::vector<Color> colors) : colors_(std::move(colors)) {
    for (std::size_t i = 0; i < colors_.size(); ++i) {
        if (colors_[i] < 1)
            throw InputError("vertex " + std::to_string(i + 1) + " has non-positive color " +
                             std::to_string(colors_[i]));
        k_ = std::max(k_, colors_[i]);
    }
}

bool ProperColoring::is_proper_on(const OrderedGraph& g) const {
    if (size() != g.size()) return false;
    return std::none_of(g.edges().begin(), g.edges().end(),
                        [&](const Edge& e) { return (*this)[e.first] == (*this)[e.second]; });
}

void ProperColoring::require_proper_on(const OrderedGraph& g) const {
    if (size() != g.size())
        throw InputError("coloring covers " + std::to_string(size()) + " vertices, graph has " +
                         std::to_string(g.size()));
    for (auto [u, v] : g.edges())
        if ((*this)[u] == (*this)[v])
            throw InputError("coloring is not proper: edge " + std::to_string(u) + "-" +
                             std::to_string(v) + " is monochromatic");
}

PartialColoring ProperColoring::restrict_to(std::span<const Vertex> vertices) const {
    PartialColoring out;
    for (Vertex v : vertices) out.emplace(v, (*this)[v]);
    return out;
}

std::vector<Vertex> Descent::vertices() const {
    std::vector<Vertex> out = tail;
    out.insert(std::lower_bound(out.begin(), out.end(), head), head);
    return out;
}

std::vector<Vertex> domain_of(const PartialColoring& s) {
    std::vector<Vertex> out;
    out.reserve(s.size());
    for (const auto& [v, c] : s) out.push_back(v);
    return out;
}

GreedyOutcome greedy_color(const OrderedGraph& g, const PartialColoring& precolored) {
    GreedyOutcome out;
    out.coloring.assign(static_cast<std::size_t>(g.size()), 0);
    for (const auto& [v, c] : precolored) {
        if (!g.contains(v))
            throw InputError("defining set names unknown vertex " + std::to_string(v));
        if (c < 1)
            throw InputError("defining set gives vertex " + std::to_string(v) +
                             " non-positive color " + std::to_string(c));
        out.coloring[static_cast<std::size_t>(v - 1)] = c;
    }

    // seen[c] == stamp marks color c as present around the current vertex.
    std::vector<int> seen(1, 0);
    int stamp = 0;
    for (Vertex v : g.order()) {
        auto& slot = out.coloring[static_cast<std::size_t>(v - 1)];
        if (slot != 0) continue;
        ++stamp;
        const auto& nbrs = g.neighbors(v);
        // A vertex of degree d always finds a free color in 1..d+1.
        if (seen.size() < nbrs.size() + 2) seen.resize(nbrs.size() + 2, 0);
        for (Vertex u : nbrs) {
            Color c = out.coloring[static_cast<std::size_t>(u - 1)];
            if (c > 0 && static_cast<std::size_t>(c) < seen.size()) seen[static_cast<std::size_t>(c)] = stamp;
        }
        Color c = 1;
        while (seen[static_cast<std::size_t>(c)] == stamp) ++c;
        slot = c;
    }

    for (Color c : out.coloring) out.max_color = std::max(out.max_color, c);
    out.proper = std::none_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        return out.coloring[static_cast<std::size_t>(e.first - 1)] ==
               out.coloring[static_cast<std::size_t>(e.second - 1)];
    });
    return out;
}

namespace {

bool is_bipartite(const OrderedGraph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.size()), -1);
    for (Vertex s = 1; s <= g.size(); ++s) {
        if (side[static_cast<std::size_t>(s - 1)] != -1) continue;
        side[static_cast<std::size_t>(s - 1)] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex u : g.neighbors(v)) {
                auto& su = side[static_cast<std::size_t>(u - 1)];
                int sv = side[static_cast<std::size_t>(v - 1)];
                if (su == -1) {
                    su = 1 - sv;
                    q.push(u);
                } else if (su == sv) {
                    return false;
                }
            }
        }
    }
    return true;
}

// k-colorability by DSATUR-ordered backtracking over bitmask adjacency.
class KColorSearch {
public:
    KColorSearch(const OrderedGraph& g) : n_(g.size()), adj_(static_cast<std::size_t>(n_), 0) {
        for (auto [u, v] : g.edges()) {
            adj_[static_cast<std::size_t>(u - 1)] |= std::uint32_t{1} << (v - 1);
            adj_[static_cast<std::size_t>(v - 1)] |= std::uint32_t{1} << (u - 1);
        }
    }

    bool colorable(int k) {
        k_ = k;
        color_.assign(static_cast<std::size_t>(n_), 0);
        return extend(0, 0);
    }

    int clique_lower_bound() const {
        int best = n_ > 0 ? 1 : 0;
        for (int s = 0; s < n_; ++s) {
            std::uint32_t cand = adj_[static_cast<std::size_t>(s)];
            int size = 1;
            while (cand != 0) {
                // Take the candidate with the most candidate neighbors.
                int pick = -1, pick_deg = -1;
                for (std::uint32_t rest = cand; rest != 0; rest &= rest - 1) {
                    int v = std::countr_zero(rest);
                    int d = std::popcount(adj_[static_cast<std::size_t>(v)] & cand);
                    if (d > pick_deg) pick = v, pick_deg = d;
                }
                cand &= adj_[static_cast<std::size_t>(pick)];
                ++size;
            }
            best = std::max(best, size);
        }
        return best;
    }

private:
    bool extend(int colored, int used) {
        if (colored == n_) return true;
        int pick = -1, pick_sat = -1, pick_deg = -1;
        std::uint32_t pick_forbidden = 0;
        for (int v = 0; v < n_; ++v) {
            if (color_[static_cast<std::size_t>(v)] != 0) continue;
            std::uint32_t forbidden = 0;
            int deg = 0;
            for (std::uint32_t rest = adj_[static_cast<std::size_t>(v)]; rest != 0; rest &= rest - 1) {
                int u = std::countr_zero(rest);
                int cu = color_[static_cast<std::size_t>(u)];
                if (cu != 0) forbidden |= std::uint32_t{1} << cu;
                else ++deg;
            }
            int sat = std::popcount(forbidden);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg))
                pick = v, pick_sat = sat, pick_deg = deg, pick_forbidden = forbidden;
        }
        // Colors beyond used+1 are symmetric to used+1.
        int limit = std::min(k_, used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (pick_forbidden & (std::uint32_t{1} << c)) continue;
            color_[static_cast<std::size_t>(pick)] = c;
            if (extend(colored + 1, std::max(used, c))) return true;
        }
        color_[static_cast<std::size_t>(pick)] = 0;
        return false;
    }

    int n_;
    int k_ = 0;
    std::vector<std::uint32_t> adj_;
    std::vector<int> color_;
};

}  // namespace

int chromatic_number(const OrderedGraph& g) {
    if (g.size() < 1) throw InputError("chromatic number of the empty graph");
    if (g.edge_count() == 0) return 1;
    if (is_bipartite(g)) return 2;
    if (g.size() > kMaxChromaticVertices)
        throw CapabilityError("chromatic_number: " + std::to_string(g.size()) +
                              " vertices exceeds the exact-search guard of " +
                              std::to_string(kMaxChromaticVertices));
    KColorSearch search(g);
    int upper = greedy_color(g).max_color;
    for (int k = std::max(3, search.clique_lower_bound()); k < upper; ++k)
        if (search.colorable(k)) return k;
    return upper;
}

std::vector<Descent> find_descents(const OrderedGraph& g, const ProperColoring& c) {
    c.require_proper_on(g);
    std::vector<Descent> out;
    // earliest[i]: smallest position among v's neighbors colored i (0 = none).
    std::vector<int> earliest;
    std::vector<std::vector<Vertex>> by_color;
    for (Vertex v : g.order()) {
        Color high = c[v];
        int pos = g.position(v);
        earliest.assign(static_cast<std::size_t>(high), 0);
        by_color.assign(static_cast<std::size_t>(high), {});
        for (Vertex u : g.neighbors(v)) {
            Color cu = c[u];
            if (cu >= high) continue;
            auto& e = earliest[static_cast<std::size_t>(cu)];
            if (e == 0 || g.position(u) < e) e = g.position(u);
            by_color[static_cast<std::size_t>(cu)].push_back(u);
        }
        for (Color low = 1; low < high; ++low) {
            int e = earliest[static_cast<std::size_t>(low)];
            if (e != 0 && e < pos) continue;
            out.push_back({v, std::move(by_color[static_cast<std::size_t>(low)]), low, high});
        }
    }
    return out;
}

bool is_transversal(std::span<const Vertex> vertices, std::span<const Descent> descents) {
    std::vector<Vertex> s(vertices.begin(), vertices.end());
    std::sort(s.begin(), s.end());
    auto hit = [&](Vertex v) { return std::binary_search(s.begin(), s.end(), v); };
    return std::all_of(descents.begin(), descents.end(), [&](const Descent& d) {
        return hit(d.head) || std::any_of(d.tail.begin(), d.tail.end(), hit);
    });
}

bool is_gds_with_chi(const OrderedGraph& g, const PartialColoring& s, int chi) {
    auto outcome = greedy_color(g, s);
    return outcome.proper && outcome.max_color <= chi;
}

bool is_gds(const OrderedGraph& g, const PartialColoring& s,
            const std::optional<ProperColoring>& target) {
    if (!target) return is_gds_with_chi(g, s, chromatic_number(g));

    target->require_proper_on(g);
    for (const auto& [v, c] : s) {
        if (!g.contains(v))
            throw InputError("defining set names unknown vertex " + std::to_string(v));
        if ((*target)[v] != c)
            throw InputError("defining set colors vertex " + std::to_string(v) + " with " +
                             std::to_string(c) + " but the target uses " +
                             std::to_string((*target)[v]));
    }
    return greedy_color(g, s).coloring == target->colors();
}

}  // namespace gds
