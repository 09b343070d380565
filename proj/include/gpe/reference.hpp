#pragma once

#include <array>
#include <vector>

#include "gpe/distance.hpp"
#include "gpe/edge_set.hpp"
#include "gpe/gp.hpp"
#include "gpe/graph.hpp"

/// Slow, simple implementations kept for testing the fast ones: serial
/// counterparts of the parallel kernels plus exhaustive equivalents of the
/// clever algorithms. Nothing here shares shortcuts with the main library;
/// agreement between the two is evidence, not tautology.
namespace gpe::reference {

/// Serial BFS from every vertex; the parallel kernel must match it exactly.
DistanceMatrix all_pairs_distances_bfs(const Graph& g);

/// Floyd-Warshall, about as hard to get wrong as it gets.
DistanceMatrix all_pairs_distances_floyd(const Graph& g);

/// Edge set of every geodesic between u and v.
std::vector<EdgeSet> geodesic_edge_sets(const Graph& g, const DistanceMatrix& d, int u, int v);

/// Every triple of edges lying on a common geodesic, found by enumerating
/// all geodesics of all vertex pairs. Triples sorted, list sorted.
std::vector<std::array<int, 3>> conflicting_triples(const Graph& g, const DistanceMatrix& d);

/// Verdict by geodesic enumeration: fails iff some geodesic carries three
/// or more edges of x.
bool is_edge_gp_set_by_enumeration(const Graph& g, const DistanceMatrix& d, const EdgeSet& x);

/// Maximum general position size by dynamic programming over all 2^m edge
/// subsets. Requires m <= 18.
int max_gp_size_by_subsets(const Graph& g, const DistanceMatrix& d);

/// Serial version of the parallel triple scan; same verdict, same witness.
GpVerdict gp_scan(const Graph& g, const DistanceMatrix& d, const EdgeSet& x);

} // namespace gpe::reference
