#pragma once

// Exact solvers for small instances: minimum hitting set, minimum vertex
// cover, and the greedy defining number with or without a fixed coloring.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "gds/core.hpp"

namespace gds {

/// A family of element sets over a universe of integer labels.
struct SetFamily {
    std::vector<int> universe;          // sorted, unique
    std::vector<std::vector<int>> sets;  // each sorted, unique, within universe

    /// Builds a family whose universe is the union of the sets.
    static SetFamily from_sets(std::vector<std::vector<int>> sets);
    /// Builds a family over an explicit universe; throws InputError when a
    /// set leaves it.
    static SetFamily over(std::vector<int> universe, std::vector<std::vector<int>> sets);
};

/// A minimum hitting set or vertex cover (sorted).
struct CoverResult {
    std::vector<int> elements;
    std::size_t size() const { return elements.size(); }
};

/// Minimum greedy defining set. `coloring` is the target the witness
/// produces, when one is defined.
struct GdnResult {
    std::size_t size = 0;
    PartialColoring witness;
    std::vector<Color> coloring;
};

inline constexpr std::size_t kMaxHittingUniverse = 64;
inline constexpr std::size_t kMaxHittingSets = 10'000;
inline constexpr int kMaxVertexCoverVertices = 40;
inline constexpr int kMaxGdnVertices = 64;
inline constexpr std::uint64_t kMaxGdnColorings = 2'000'000;
inline constexpr int kMaxOracleVertices = 9;

/// Minimum-cardinality set meeting every member of the family. Among all
/// minimum sets the lexicographically smallest is returned.
/// Refused (CapabilityError) when both the universe exceeds
/// kMaxHittingUniverse and the family exceeds kMaxHittingSets.
CoverResult min_hitting_set(const SetFamily& family);

/// Size of a minimum hitting set if it is strictly below `limit`.
std::optional<std::size_t> min_hitting_set_size(const SetFamily& family, std::size_t limit);

/// Greedy hitting set: repeatedly take the element hitting the most
/// remaining sets. Ties go to the smallest label, or to a uniformly random
/// candidate when `rng` is given.
CoverResult greedy_hitting_set(const SetFamily& family, std::mt19937_64* rng = nullptr);

/// Exact minimum vertex cover, branching on a maximum-degree vertex.
CoverResult min_vertex_cover(const SimpleGraph& h);

bool is_vertex_cover(const SimpleGraph& h, std::span<const int> cover);

/// Descent family of (g, c) as vertex sets over the universe 1..n.
SetFamily descent_family(const OrderedGraph& g, const ProperColoring& c);

/// GDN(G, sigma, C): minimum transversal of the descents, returned as a
/// C-consistent partial coloring.
GdnResult gdn_fixed(const OrderedGraph& g, const ProperColoring& c);

/// Calls `visit` once for each proper coloring of g with colors in 1..k.
/// Vertices are assigned in breadth-first order per component, so the
/// visiting order is fixed but not lexicographic. Stops early when `visit`
/// returns false. Returns the number of colorings visited.
std::uint64_t for_each_proper_coloring(const OrderedGraph& g, int k,
                                       const std::function<bool(const ProperColoring&)>& visit);

/// GDN(G, sigma): minimum over all labeled proper chi(G)-colorings C of
/// GDN(G, sigma, C).
GdnResult gdn(const OrderedGraph& g);

/// GDN(G, sigma) by direct search over vertex subsets and color
/// assignments, using nothing but greedy runs. Independent of descents.
int brute_force_gdn_oracle(const OrderedGraph& g);

}  // namespace gds
