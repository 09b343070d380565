#include "gpe/graph.hpp"

#include <algorithm>

#include "gpe/errors.hpp"

namespace gpe {

Graph::Graph(int order, std::vector<std::pair<int, int>> edges,
             std::vector<BitLabel> labels, bool allow_disconnected)
    : order_(order), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (order_ < 1)
        throw precondition_error("Graph: order must be >= 1");

    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= order_ || v >= order_)
            throw precondition_error("Graph: edge endpoint out of range");
        if (u == v)
            throw precondition_error("Graph: loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw precondition_error("Graph: duplicate edge");

    if (!labels_.empty()) {
        if (static_cast<int>(labels_.size()) != order_)
            throw precondition_error("Graph: label count must equal order");
        int len = labels_.front().length;
        for (const auto& l : labels_)
            if (l.length != len)
                throw precondition_error("Graph: labels have mixed lengths");
        auto sorted = labels_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw precondition_error("Graph: duplicate label");
        for (auto [u, v] : edges_)
            if (hamming(labels_[static_cast<std::size_t>(u)],
                        labels_[static_cast<std::size_t>(v)]) != 1)
                throw precondition_error(
                    "Graph: labeled edge endpoints must differ in exactly one bit");
    }

    adj_.resize(static_cast<std::size_t>(order_));
    for (int i = 0; i < size(); ++i) {
        auto [u, v] = edges_[static_cast<std::size_t>(i)];
        adj_[static_cast<std::size_t>(u)].emplace_back(v, i);
        adj_[static_cast<std::size_t>(v)].emplace_back(u, i);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());

    std::vector<int> stack{0};
    std::vector<char> seen(static_cast<std::size_t>(order_), 0);
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto [w, e] : adj_[static_cast<std::size_t>(u)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    connected_ = reached == order_;
    if (!connected_ && !allow_disconnected)
        throw precondition_error("Graph: graph is disconnected");
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v});
    if (it != edges_.end() && *it == std::pair{u, v})
        return static_cast<int>(it - edges_.begin());
    return -1;
}

} // namespace gpe
