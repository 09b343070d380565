#pragma once

#include <iosfwd>
#include <vector>

#include "gpe/graph.hpp"

namespace gpe {

/// Text format:
///   # comment (anywhere; blank lines ignored)
///   p <N> <M>
///   l <v> <bitstring>     zero or N lines, any order
///   e <u> <v>             exactly M lines, 0-based endpoints, u != v
/// Throws io_error with a 1-based line number on malformed input, duplicate
/// edges, loops, label problems, or (unless allowed) disconnectedness.
Graph load_graph(std::istream& in, bool allow_disconnected = false);

/// Inverse of load_graph up to canonical edge reindexing: bitstrings and the
/// vertex order are preserved exactly.
void save_graph(const Graph& g, std::ostream& out);

/// Edge-set file: lines `e <u> <v>` naming edges and `class <i>` naming
/// 1-based theta classes, plus comments. Parsed without resolving.
struct EdgeSetSpec {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> class_ids;
};

EdgeSetSpec parse_edge_set(std::istream& in);

} // namespace gpe
