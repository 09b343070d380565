#pragma once

#include <vector>

#include "gpe/distance.hpp"
#include "gpe/edge_set.hpp"
#include "gpe/graph.hpp"

namespace gpe {

/// Upper bound used to prune the branch and bound search.
///   none:     edges not yet decided
///   counting: undecided edges not conflicting with two chosen ones
///   cover:    counting, additionally capped at two per geodesic of a fixed
///             edge cover (a geodesic carries at most two edges of any set
///             in general position)
enum class BoundMode { none, counting, cover };

struct SolveOptions {
    bool enumerate_all = false; ///< collect every maximum set, not just one
    bool want_witnesses = true; ///< skip witness extraction when false
    BoundMode bound = BoundMode::cover;
    int threads = 1; ///< 0 = OpenMP default
    int max_edges = 64;
};

struct SolveResult {
    int optimum = 0;
    /// Lexicographically smallest maximum set, or all maximum sets in
    /// canonical order under enumerate_all. Independent of thread count.
    std::vector<EdgeSet> witnesses;
    long long nodes_explored = 0;
    double seconds = 0.0;
};

/// Exact maximum edge general position set via branch and bound over the
/// triple conflict table. Edges are branched on in order of decreasing
/// conflict degree; choosing an edge bans everything that would close a
/// conflicting triple with two chosen edges. Throws precondition_error when
/// the graph has more than max_edges edges.
SolveResult solve_gp_e(const Graph& g, const DistanceMatrix& d, const SolveOptions& opt = {});

struct ConjectureRow {
    int n;
    int optimum;
    long long predicted; ///< 2 F(n)
    long long nodes;
    double seconds;
};

/// Solves the Fibonacci cubes up to max_n (at most 7) and reports the
/// optimum next to the predicted closed form.
std::vector<ConjectureRow> conjecture_sweep(int max_n, int threads);

} // namespace gpe
