#pragma once

#include <vector>

#include "gpe/distance.hpp"
#include "gpe/edge_set.hpp"
#include "gpe/graph.hpp"

namespace gpe {

/// A family of shortest paths used as an upper-bound certificate: each path
/// can carry at most two edges of a set in general position, so
/// gp_e(G) <= 2 * paths + uncovered edges.
struct GeodesicCover {
    std::vector<std::vector<int>> paths; ///< vertex sequences
    EdgeSet covered;
    int total_edges = 0;

    int uncovered() const { return total_edges - covered.count(); }
    int bound() const { return 2 * static_cast<int>(paths.size()) + uncovered(); }
};

/// Repeatedly adds the geodesic covering the most uncovered edges until all
/// edges are covered. Ties: smallest endpoint pair, then the
/// lexicographically smallest vertex sequence.
GeodesicCover greedy_geodesic_cover(const Graph& g, const DistanceMatrix& d);

/// Hand-picked four-geodesic cover of fig3_graph(), kept as a regression
/// fixture certifying its optimum of 8.
GeodesicCover fig3_cover_fixture(const Graph& fig3);

} // namespace gpe
