#include "gpe/random_graphs.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "gpe/errors.hpp"

namespace gpe {

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) throw precondition_error("rand_below: empty range");
    return rng() % n;
}

Graph random_connected_bipartite(int n, std::uint64_t seed) {
    if (n < 2 || n > 12)
        throw precondition_error("random_connected_bipartite: n must be in [2, 12]");
    std::mt19937_64 rng(seed);

    // Vertices 0 and 1 pin the two sides so every later vertex has an
    // opposite side to hook onto.
    std::vector<int> side(n);
    side[0] = 0;
    side[1] = 1;
    for (int v = 2; v < n; ++v) side[v] = (int)rand_below(rng, 2);

    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> by_side(2);
    by_side[0].push_back(0);
    edges.emplace_back(0, 1);
    by_side[1].push_back(1);
    for (int v = 2; v < n; ++v) {
        const std::vector<int>& opposite = by_side[1 - side[v]];
        edges.emplace_back((int)opposite[rand_below(rng, opposite.size())], v);
        by_side[side[v]].push_back(v);
    }

    // Tree edges above are already (low, high) since parents precede children.
    std::vector<std::pair<int, int>> spare;
    for (int a : by_side[0])
        for (int b : by_side[1]) {
            std::pair<int, int> e{std::min(a, b), std::max(a, b)};
            if (std::find(edges.begin(), edges.end(), e) == edges.end()) spare.push_back(e);
        }
    // Manual Fisher-Yates: std::shuffle is not reproducible across standard
    // libraries.
    for (int i = (int)spare.size() - 1; i > 0; --i)
        std::swap(spare[i], spare[rand_below(rng, i + 1)]);

    // Cap the total at 18 edges so exhaustive subset checks stay cheap.
    int room = 18 - (int)edges.size();
    int extra = (int)rand_below(rng, std::min((std::uint64_t)room, (std::uint64_t)spare.size()) + 1);
    edges.insert(edges.end(), spare.begin(), spare.begin() + extra);
    return Graph(n, edges);
}

Graph random_cube_cactus(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    struct Shape {
        int order;
        std::vector<std::pair<int, int>> edges;
    };
    static const std::vector<Shape> shapes{
        {2, {{0, 1}}},
        {4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}},
        {8,
         {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3}, {2, 6}, {3, 7}, {4, 5}, {4, 6},
          {5, 7}, {6, 7}}},
    };

    int order = 1;
    std::vector<std::pair<int, int>> edges;
    int blocks = 2 + (int)rand_below(rng, 5);
    for (int b = 0; b < blocks; ++b) {
        const Shape& shape = shapes[rand_below(rng, shapes.size())];
        int attach = (int)rand_below(rng, order);
        // Local vertex 0 lands on the attachment point, the rest are fresh.
        auto place = [&](int local) { return local == 0 ? attach : order + local - 1; };
        for (auto [u, v] : shape.edges) edges.emplace_back(place(u), place(v));
        order += shape.order - 1;
    }
    return Graph(order, edges);
}

} // namespace gpe
