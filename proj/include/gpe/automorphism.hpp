#pragma once

#include <vector>

#include "gpe/distance.hpp"
#include "gpe/edge_set.hpp"
#include "gpe/graph.hpp"

namespace gpe {

/// All automorphisms of g, each a permutation of the vertices (image by
/// index). Backtracking with degree and distance-profile pruning; meant for
/// small graphs, so order is capped at 20.
std::vector<std::vector<int>> automorphisms(const Graph& g, const DistanceMatrix& d);

/// Applies a vertex permutation to an edge set.
EdgeSet permute_edge_set(const Graph& g, const EdgeSet& x, const std::vector<int>& perm);

/// Number of orbits of the automorphism action on the given edge sets. The
/// sets must be closed under the action (e.g. all maximum general position
/// sets); a permuted set that is not in the list throws.
int orbit_count(const Graph& g, const std::vector<EdgeSet>& sets,
                const std::vector<std::vector<int>>& autos);

} // namespace gpe
