#pragma once

#include "gpe/graph.hpp"

namespace gpe {

/// Q_r: all binary strings of length r, edges between strings at Hamming
/// distance 1. Requires 1 <= r <= 20.
Graph hypercube(int r);

/// Fibonacci cube: binary strings of length n with no two consecutive 1s.
/// Order F(n+2). Requires 1 <= n <= 20.
Graph fibonacci_cube(int n);

/// Lucas cube: Fibonacci strings that do not both start and end with 1.
/// Order L(n). Requires 1 <= n <= 20; n = 1 yields the one-vertex graph "0".
Graph lucas_cube(int n);

/// Path on k vertices. For k >= 2 the vertices carry prefix-unary labels of
/// length k-1 (vertex i maps to i ones followed by zeros), which embed the
/// path isometrically in a hypercube.
Graph path_graph(int k);

/// Cartesian product. When both factors are labeled, the product vertex
/// (g, h) is labeled label(g) ++ label(h) and vertices follow the canonical
/// label order; otherwise (g, h) gets index g * |V(H)| + h.
Graph cartesian_product(const Graph& g, const Graph& h);

/// P_r x P_r grid with the product prefix-unary labels. Requires r >= 2.
Graph grid(int r);

/// Built-in 12-vertex example (CLI family "fig3"): a 4x2 grid core with a
/// 2-vertex row attached below and above its middle columns. A partial cube
/// with 16 edges whose edge general position number is 8.
Graph fig3_graph();

} // namespace gpe
