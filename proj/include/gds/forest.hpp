#pragma once

// Greedy defining number of ordered forests in O(n log n).

#include "gds/core.hpp"
#include "gds/exact.hpp"

namespace gds {

/// A connected acyclic ordered graph with one of its proper 2-colorings
/// (a single vertex is colored 1).
struct TreeInstance {
    OrderedGraph tree;
    ProperColoring coloring;
};

/// Minimum GDS of a tree for its fixed 2-coloring.
///
/// Descent heads are the color-2 vertices all of whose neighbors come
/// later. On the subgraph induced by the heads and their neighbors the
/// search repeatedly
///   * drops isolated color-1 vertices,
///   * takes the neighbor u of a head v of degree 1 into the set and
///     removes u, v and every other head next to u,
///   * otherwise removes a color-1 leaf,
/// always picking the candidate earliest in the order. The returned set
/// contains color-1 vertices only.
GdnResult tree_gdn_fixed(const TreeInstance& t);

/// GDN of an ordered forest: per component the better of its two
/// 2-colorings, summed. Throws InputError on a cycle.
GdnResult forest_gdn(const OrderedGraph& f);

}  // namespace gds
