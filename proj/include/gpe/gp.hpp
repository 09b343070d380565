#pragma once

#include <array>
#include <optional>

#include "gpe/distance.hpp"
#include "gpe/edge_set.hpp"
#include "gpe/graph.hpp"
#include "gpe/theta.hpp"

namespace gpe {

/// A shortest path through three edges: traversed as a1->b1 ... a2->b2 ...
/// a3->b3, with d(a1,b3) = 3 + d(b1,a2) + d(b2,a3). `edges` are the edge ids
/// in traversal order.
struct TripleWitness {
    std::array<int, 3> edges;
    std::array<std::pair<int, int>, 3> oriented; ///< (a_k, b_k)
    std::pair<int, int> endpoints;               ///< (a1, b3)
};

/// Tests whether the three distinct edges lie on a common geodesic, scanning
/// the orderings/orientations in a fixed order (first edge id < last edge
/// id), so the returned witness is deterministic.
std::optional<TripleWitness> triple_on_common_geodesic(const Graph& g,
                                                       const DistanceMatrix& d,
                                                       int e, int f, int h);

struct GpVerdict {
    bool is_gp;
    std::optional<TripleWitness> violation; ///< first in lex edge-index order
};

/// Whether no three members lie on a common geodesic. Any set of size <= 2
/// qualifies.
GpVerdict is_edge_gp_set(const Graph& g, const DistanceMatrix& d, const EdgeSet& x,
                         int threads = 0);

/// Whether x + e is still in general position. Assumes x itself already is;
/// throws precondition_error when e is a member of x.
bool can_extend(const Graph& g, const DistanceMatrix& d, const EdgeSet& x, int e);

/// In general position and no single-edge extension possible.
bool is_maximal_edge_gp_set(const Graph& g, const DistanceMatrix& d, const EdgeSet& x);

/// Whether the union of classes i and j (1-based ids) is in general
/// position. Requires a partial cube (precondition_error otherwise).
bool class_pair_is_gp(const Graph& g, const DistanceMatrix& d, const ThetaPartition& p,
                      int i, int j);

} // namespace gpe
