#include "gpe/generators.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "gpe/errors.hpp"

namespace gpe {

namespace {

/// Builds a graph from sorted labels: vertices in label order, edges between
/// labels at Hamming distance 1.
Graph from_labels(std::vector<BitLabel> labels) {
    std::sort(labels.begin(), labels.end());
    std::map<std::uint64_t, int> index;
    for (int v = 0; v < static_cast<int>(labels.size()); ++v)
        index.emplace(labels[static_cast<std::size_t>(v)].bits, v);

    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < static_cast<int>(labels.size()); ++v) {
        const BitLabel& l = labels[static_cast<std::size_t>(v)];
        for (int p = 0; p < l.length; ++p) {
            BitLabel m = l.with_flipped(p);
            auto it = index.find(m.bits);
            if (it != index.end() && it->second > v)
                edges.emplace_back(v, it->second);
        }
    }
    int order = static_cast<int>(labels.size());
    return Graph(order, std::move(edges), std::move(labels));
}

void check_cube_n(const char* who, int n) {
    if (n < 1 || n > 20)
        throw precondition_error(std::string(who) + ": n must be in [1, 20]");
}

} // namespace

Graph hypercube(int r) {
    check_cube_n("hypercube", r);
    std::vector<BitLabel> labels;
    labels.reserve(std::size_t{1} << r);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << r); ++b)
        labels.emplace_back(r, b);
    return from_labels(std::move(labels));
}

Graph fibonacci_cube(int n) {
    check_cube_n("fibonacci_cube", n);
    std::vector<BitLabel> labels;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        BitLabel l(n, b);
        if (l.fibonacci_valid()) labels.push_back(l);
    }
    return from_labels(std::move(labels));
}

Graph lucas_cube(int n) {
    check_cube_n("lucas_cube", n);
    std::vector<BitLabel> labels;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        BitLabel l(n, b);
        if (l.lucas_valid()) labels.push_back(l);
    }
    return from_labels(std::move(labels));
}

Graph path_graph(int k) {
    if (k < 1)
        throw precondition_error("path_graph: k must be >= 1");
    if (k == 1) return Graph(1, {});
    std::vector<BitLabel> labels;
    labels.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        std::uint64_t ones = (i == 0) ? 0 : ~std::uint64_t{0} >> (64 - i);
        labels.emplace_back(k - 1, ones << (k - 1 - i));
    }
    return from_labels(std::move(labels));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.labeled() && h.labeled()) {
        std::vector<BitLabel> labels;
        labels.reserve(static_cast<std::size_t>(g.order()) * static_cast<std::size_t>(h.order()));
        int hl = h.labels().front().length;
        for (const auto& a : g.labels())
            for (const auto& b : h.labels()) {
                if (a.length + hl > 64)
                    throw precondition_error("cartesian_product: combined label too long");
                labels.emplace_back(a.length + hl, (a.bits << hl) | b.bits);
            }
        return from_labels(std::move(labels));
    }

    int nh = h.order();
    auto id = [nh](int a, int b) { return a * nh + b; };
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < g.order(); ++a)
        for (auto [u, v] : h.edges())
            edges.emplace_back(id(a, u), id(a, v));
    for (int b = 0; b < nh; ++b)
        for (auto [u, v] : g.edges())
            edges.emplace_back(id(u, b), id(v, b));
    return Graph(g.order() * nh, std::move(edges));
}

Graph grid(int r) {
    if (r < 2)
        throw precondition_error("grid: r must be >= 2");
    Graph p = path_graph(r);
    return cartesian_product(p, p);
}

Graph fig3_graph() {
    // Points of a plus-shaped region of the integer grid; the region is
    // orthogonally convex, so prefix-unary coordinate labels embed it
    // isometrically in Q_6.
    static constexpr std::pair<int, int> points[] = {
        {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1},
        {0, 2}, {1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3},
    };
    auto unary = [](int k) -> std::uint64_t {
        return k == 0 ? 0 : ((std::uint64_t{1} << k) - 1) << (3 - k);
    };
    std::vector<BitLabel> labels;
    for (auto [x, y] : points)
        labels.emplace_back(6, (unary(x) << 3) | unary(y));
    return from_labels(std::move(labels));
}

} // namespace gpe
