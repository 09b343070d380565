#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpe/bit_label.hpp"

namespace gpe {

/// Simple undirected graph with 0-based vertices, canonically indexed edges
/// (sorted by (min endpoint, max endpoint)) and optional per-vertex binary
/// labels. Construction validates simplicity, label invariants and (unless
/// told otherwise) connectivity.
class Graph {
public:
    Graph(int order, std::vector<std::pair<int, int>> edges,
          std::vector<BitLabel> labels = {}, bool allow_disconnected = false);

    int order() const { return order_; }
    int size() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }

    /// (neighbor, edge index) pairs, sorted by neighbor.
    const std::vector<std::pair<int, int>>& neighbors(int v) const {
        return adj_[static_cast<std::size_t>(v)];
    }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// Canonical index of edge {u, v}, or -1 when absent.
    int edge_index(int u, int v) const;

    bool labeled() const { return !labels_.empty(); }
    const std::vector<BitLabel>& labels() const { return labels_; }
    const BitLabel& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }

    bool connected() const { return connected_; }

private:
    int order_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<BitLabel> labels_;
    bool connected_ = false;
};

} // namespace gpe
