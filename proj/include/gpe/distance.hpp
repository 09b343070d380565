#pragma once

#include <cstdint>
#include <vector>

#include "gpe/graph.hpp"

namespace gpe {

/// Dense all-pairs distance matrix with 16-bit entries.
class DistanceMatrix {
public:
    explicit DistanceMatrix(int order)
        : order_(order),
          d_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0) {}

    int order() const { return order_; }

    int operator()(int u, int v) const {
        return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(order_) +
                  static_cast<std::size_t>(v)];
    }
    void set(int u, int v, int d) {
        d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(order_) +
           static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(d);
    }

    std::uint16_t* row(int u) {
        return d_.data() + static_cast<std::size_t>(u) * static_cast<std::size_t>(order_);
    }

private:
    int order_;
    std::vector<std::uint16_t> d_;
};

/// BFS from every source, sources in parallel. Throws precondition_error
/// naming two unreachable vertices when the graph is disconnected.
/// threads = 0 uses the OpenMP default.
DistanceMatrix all_pairs_distances(const Graph& g, int threads = 0);

struct BipartiteResult {
    bool bipartite;
    std::vector<int> side;            ///< 0/1 per vertex (valid when bipartite)
    std::vector<int> odd_closed_walk; ///< closed walk of odd length otherwise
};

BipartiteResult is_bipartite(const Graph& g);

/// Whether graph distance equals Hamming distance of the labels for every
/// vertex pair. Requires labels; connectivity is implied by D existing.
bool hamming_isometry_check(const Graph& g, const DistanceMatrix& d);

} // namespace gpe
