#pragma once

// Ordered graphs, first-fit coloring with a pre-colored defining set,
// descents and greedy-defining-set verification.
//
// Vertices are numbered 1..n. Colors are positive integers; 0 means
// "uncolored" wherever a dense color vector is used.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace gds {

using Vertex = int;
using Color = int;
using Edge = std::pair<Vertex, Vertex>;

/// Vertex -> color map. A greedy defining set is one of these.
using PartialColoring = std::map<Vertex, Color>;

/// Plain undirected simple graph on vertices 1..n.
struct SimpleGraph {
    int n = 0;
    std::vector<Edge> edges;
};

/// Simple graph together with a processing order (a permutation of 1..n).
class OrderedGraph {
public:
    OrderedGraph() = default;

    /// `order` lists the vertices in processing order. Edges are stored
    /// normalized (u < v) and sorted; duplicates and self-loops are rejected.
    OrderedGraph(int n, std::vector<Edge> edges, std::vector<Vertex> order);

    /// Graph processed in vertex-number order.
    static OrderedGraph identity(int n, std::vector<Edge> edges);

    int size() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Sorted neighbor list of v.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[index(v)]; }
    std::size_t degree(Vertex v) const { return adj_[index(v)].size(); }
    bool adjacent(Vertex u, Vertex v) const;

    /// 1-based position of v in the processing order.
    int position(Vertex v) const { return position_[index(v)]; }
    /// Vertices in processing order.
    const std::vector<Vertex>& order() const { return order_; }

    bool contains(Vertex v) const { return v >= 1 && v <= n_; }

    SimpleGraph simple() const { return {n_, edges_}; }

private:
    std::size_t index(Vertex v) const { return static_cast<std::size_t>(v - 1); }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<int> position_;
    std::vector<Vertex> order_;
};

/// Total coloring, colors[v-1] is the color of vertex v.
class ProperColoring {
public:
    ProperColoring() = default;
    /// Rejects colors < 1. Properness against a graph is checked separately.
    explicit ProperColoring(std::vector<Color> colors);

    Color operator[](Vertex v) const { return colors_[static_cast<std::size_t>(v - 1)]; }
    const std::vector<Color>& colors() const { return colors_; }
    int size() const { return static_cast<int>(colors_.size()); }
    /// Largest color used.
    int k() const { return k_; }

    bool is_proper_on(const OrderedGraph& g) const;
    /// Throws InputError unless this is a proper coloring of g.
    void require_proper_on(const OrderedGraph& g) const;

    /// The restriction of this coloring to `vertices`.
    PartialColoring restrict_to(std::span<const Vertex> vertices) const;

    friend bool operator==(const ProperColoring&, const ProperColoring&) = default;

private:
    std::vector<Color> colors_;
    int k_ = 0;
};

/// A vertex `head` of color `high` together with ALL of its neighbors of
/// color `low` < `high`, all of which come later in the order.
struct Descent {
    Vertex head = 0;
    std::vector<Vertex> tail;  // sorted
    Color low = 0;
    Color high = 0;

    /// head ∪ tail, sorted.
    std::vector<Vertex> vertices() const;

    friend bool operator==(const Descent&, const Descent&) = default;
};

struct GreedyOutcome {
    std::vector<Color> coloring;  // coloring[v-1]
    Color max_color = 0;
    bool proper = true;
};

/// First-fit coloring of g. Vertices of `precolored` keep their colors and
/// are skipped; every other vertex, in processing order, takes the smallest
/// color missing from all of its currently colored neighbors (pre-colored
/// neighbors count even when they come later).
GreedyOutcome greedy_color(const OrderedGraph& g, const PartialColoring& precolored = {});

inline constexpr int kMaxChromaticVertices = 24;

/// Exact chromatic number. Edgeless and bipartite graphs are answered
/// directly; anything else goes through backtracking and is refused above
/// kMaxChromaticVertices vertices.
int chromatic_number(const OrderedGraph& g);

/// All descents of (g, c), ordered by head position, then low color.
std::vector<Descent> find_descents(const OrderedGraph& g, const ProperColoring& c);

bool is_transversal(std::span<const Vertex> vertices, std::span<const Descent> descents);

/// Whether the pre-coloring drives first-fit to a chi(g)-coloring. With a
/// target, whether first-fit reproduces that coloring exactly.
bool is_gds(const OrderedGraph& g, const PartialColoring& s,
            const std::optional<ProperColoring>& target = std::nullopt);

/// Untargeted check against a known chromatic number.
bool is_gds_with_chi(const OrderedGraph& g, const PartialColoring& s, int chi);

/// Vertex set of a partial coloring, sorted.
std::vector<Vertex> domain_of(const PartialColoring& s);

}  // namespace gds
