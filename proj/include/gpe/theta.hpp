#pragma once

#include <cstdint>
#include <vector>

#include "gpe/distance.hpp"
#include "gpe/edge_set.hpp"
#include "gpe/graph.hpp"

namespace gpe {

/// Djokovic-Winkler relation on edges e = xy, f = uv:
/// d(x,u) + d(y,v) != d(x,v) + d(y,u). Reflexive; orientation-independent.
bool theta_related(const DistanceMatrix& d, std::pair<int, int> e, std::pair<int, int> f);

/// Equivalence classes of the transitive closure of the relation.
struct ThetaPartition {
    std::vector<EdgeSet> classes;
    /// 1-based coordinate per class when the graph is labeled and the labels
    /// embed it isometrically (classes then ordered by coordinate); empty
    /// otherwise (classes ordered by smallest member edge index).
    std::vector<int> coordinates;
    std::vector<int> class_of_edge;

    int class_count() const { return static_cast<int>(classes.size()); }

    /// Class position for a 1-based class id: coordinate when tagged,
    /// ordinal otherwise. Returns -1 when absent.
    int position_of(int id) const;
};

/// Requires G connected and bipartite (precondition_error otherwise).
ThetaPartition theta_partition(const Graph& g, const DistanceMatrix& d, int threads = 0);

/// Winkler: connected, bipartite, and the relation is already transitive.
/// When labels pass hamming_isometry_check the recognizer must agree
/// (internal_error otherwise).
bool is_partial_cube(const Graph& g, const DistanceMatrix& d);

enum class CubeFamily { fibonacci, lucas };

/// Builds the family member and checks every class size against the closed
/// form: |class i| = F(i) * F(n-i+1) for Fibonacci cubes, F(n-1) for Lucas
/// cubes. Requires n >= 1 (lucas: n >= 2).
bool class_size_formula_check(CubeFamily family, int n);

struct ClassPair {
    int i, j;               ///< 1-based class ids, i < j
    std::uint64_t combined; ///< |class i| + |class j|
};

/// Maximizes the combined size over unordered class pairs; ties resolved
/// toward the lexicographically smallest (i, j). Requires >= 2 classes.
ClassPair best_class_pair(const ThetaPartition& p);

} // namespace gpe
