#pragma once

// Vertex cover reductions to greedy defining sets.
//
// colored_vc_instance: F on n vertices becomes K_n plus a copy of F, with a
// fixed n-coloring C, such that the descents of (G, C) are exactly the
// edges of F's copy. Minimum GDS for C = minimum vertex cover of F.
//
// bipartite_vc_instance: connected F becomes a connected bipartite ordered
// graph with parts V1 ∪ E1 and V2 ∪ E2, ordered E2 < E1 < V2 < V1, whose
// (uncolored) greedy defining number equals the minimum vertex cover of F.

#include <vector>

#include "gds/core.hpp"

namespace gds {

struct ColoredVcInstance {
    SimpleGraph source;
    OrderedGraph graph;      // vertices 1..n: K_n, vertices n+1..2n: copy of F
    ProperColoring coloring;
    std::vector<Color> source_coloring;  // c(v) for F-vertex v, here c(v) = v
    std::vector<int> back_map;            // graph vertex -> F vertex, 0 for K_n

    /// Graph vertex holding the copy of F-vertex v.
    Vertex copy_of(int v) const { return source.n + v; }
};

struct BipartiteVcInstance {
    enum class Part { V1, V2, E1, E2 };
    struct Origin {
        Part part;
        int index;  // F vertex for V1/V2, 1-based F edge index for E1/E2
    };

    SimpleGraph source;  // edges sorted, u < v
    OrderedGraph graph;
    std::vector<Origin> back_map;  // graph vertex - 1 -> origin

    Vertex v1(int v) const { return v; }
    Vertex v2(int v) const { return source.n + v; }
    Vertex e1(int e) const { return 2 * source.n + e; }
    Vertex e2(int e) const { return 2 * source.n + static_cast<int>(source.edges.size()) + e; }

    /// Proper 2-coloring with V1 ∪ E1 colored `x_color` and the rest 3 - x_color.
    ProperColoring coloring_with_x(Color x_color) const;
};

ColoredVcInstance colored_vc_instance(const SimpleGraph& f);

/// Throws InputError unless F is connected with at least one edge.
BipartiteVcInstance bipartite_vc_instance(const SimpleGraph& f);

/// Copies of a vertex cover of F, colored as in the instance's coloring.
PartialColoring map_cover_to_gds(const ColoredVcInstance& inst, std::span<const int> cover);
/// V1 copies of a vertex cover of F, colored 1.
PartialColoring map_cover_to_gds(const BipartiteVcInstance& inst, std::span<const int> cover);

/// F-vertices behind a GDS (edge copies map to their lower endpoint). The
/// result is a vertex cover of F no larger than the GDS.
std::vector<int> map_gds_to_cover(const ColoredVcInstance& inst, const PartialColoring& s);
std::vector<int> map_gds_to_cover(const BipartiteVcInstance& inst, const PartialColoring& s);

/// Normalizes and validates an unordered simple graph (u < v, sorted, no
/// loops or duplicates).
SimpleGraph normalized(SimpleGraph f);

bool is_connected(const SimpleGraph& f);

}  // namespace gds
