#pragma once

#include <functional>
#include <span>
#include <vector>

#include "gpe/distance.hpp"
#include "gpe/edge_set.hpp"
#include "gpe/graph.hpp"
#include "gpe/theta.hpp"

namespace gpe {

struct BlockDecomposition {
    std::vector<EdgeSet> blocks;   ///< ordered by smallest member edge index
    std::vector<int> cut_vertices; ///< ascending
    std::vector<int> end_blocks;   ///< blocks with exactly one cut vertex; a
                                   ///< biconnected graph is its own end block

    bool is_cut_vertex(int v) const;
};

/// Biconnected components as edge sets (a bridge is a one-edge block).
/// Requires G connected.
BlockDecomposition block_decomposition(const Graph& g);

/// Chooses a theta class among those with an edge in the given end block;
/// receives the end-block ordinal and the candidate class positions.
using ClassSelector = std::function<int(int end_block, std::span<const int> candidates)>;

/// Union over end blocks of one theta class with an edge in that block
/// (default: the largest candidate, ties toward the smaller class position).
/// Requires a partial cube; the result is re-verified to be in general
/// position (internal_error if not, since that is a theorem).
EdgeSet end_block_gp_set(const Graph& g, const DistanceMatrix& d, const ThetaPartition& p,
                         const ClassSelector& choose = {});

/// For the subgraph induced by `vertices`: verifies it is isometric in G
/// (precondition_error naming a violating pair otherwise), then checks that
/// edges lying in different blocks of the subgraph are never theta-related
/// in G. True is the expected outcome on all inputs.
bool cross_block_theta_check(const Graph& g, const DistanceMatrix& d,
                             const std::vector<int>& vertices);

} // namespace gpe
