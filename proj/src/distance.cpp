#include "gpe/distance.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>

#include "gpe/errors.hpp"

namespace gpe {

namespace {

constexpr std::uint16_t kUnreached = std::numeric_limits<std::uint16_t>::max();

/// Fills row with distances from src; returns some unreached vertex or -1.
int bfs_row(const Graph& g, int src, std::uint16_t* row) {
    int n = g.order();
    std::fill(row, row + n, kUnreached);
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n));
    queue.push_back(src);
    row[src] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        std::uint16_t du = row[u];
        for (auto [v, e] : g.neighbors(u))
            if (row[v] == kUnreached) {
                row[v] = static_cast<std::uint16_t>(du + 1);
                queue.push_back(v);
            }
    }
    if (static_cast<int>(queue.size()) == n) return -1;
    for (int v = 0; v < n; ++v)
        if (row[v] == kUnreached) return v;
    return -1;
}

} // namespace

DistanceMatrix all_pairs_distances(const Graph& g, int threads) {
    int n = g.order();
    DistanceMatrix d(n);
    std::atomic<int> unreached{-1};
    int nthreads = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 16) num_threads(nthreads)
    for (int src = 0; src < n; ++src) {
        int miss = bfs_row(g, src, d.row(src));
        if (miss >= 0) unreached.store(src * g.order() + miss);
    }

    if (int packed = unreached.load(); packed >= 0)
        throw precondition_error("all_pairs_distances: no path between vertices " +
                                 std::to_string(packed / n) + " and " +
                                 std::to_string(packed % n));
    return d;
}

BipartiteResult is_bipartite(const Graph& g) {
    int n = g.order();
    BipartiteResult r{true, std::vector<int>(static_cast<std::size_t>(n), -1), {}};
    std::vector<int> parent(static_cast<std::size_t>(n), -1);

    for (int root = 0; root < n; ++root) {
        if (r.side[static_cast<std::size_t>(root)] >= 0) continue;
        r.side[static_cast<std::size_t>(root)] = 0;
        std::vector<int> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (auto [v, e] : g.neighbors(u)) {
                if (r.side[static_cast<std::size_t>(v)] < 0) {
                    r.side[static_cast<std::size_t>(v)] =
                        1 - r.side[static_cast<std::size_t>(u)];
                    parent[static_cast<std::size_t>(v)] = u;
                    queue.push_back(v);
                } else if (r.side[static_cast<std::size_t>(v)] ==
                           r.side[static_cast<std::size_t>(u)]) {
                    // Odd cycle: climb both BFS branches to their meeting point.
                    std::vector<int> a{u}, b{v};
                    int x = u, y = v;
                    auto depth = [&](int w) {
                        int d = 0;
                        for (; parent[static_cast<std::size_t>(w)] >= 0;
                             w = parent[static_cast<std::size_t>(w)])
                            ++d;
                        return d;
                    };
                    int dx = depth(x), dy = depth(y);
                    while (dx > dy) { x = parent[static_cast<std::size_t>(x)]; a.push_back(x); --dx; }
                    while (dy > dx) { y = parent[static_cast<std::size_t>(y)]; b.push_back(y); --dy; }
                    while (x != y) {
                        x = parent[static_cast<std::size_t>(x)];
                        y = parent[static_cast<std::size_t>(y)];
                        a.push_back(x);
                        b.push_back(y);
                    }
                    r.bipartite = false;
                    r.odd_closed_walk.assign(a.begin(), a.end());
                    r.odd_closed_walk.insert(r.odd_closed_walk.end(), b.rbegin() + 1, b.rend());
                    r.odd_closed_walk.push_back(u);
                    return r;
                }
            }
        }
    }
    return r;
}

bool hamming_isometry_check(const Graph& g, const DistanceMatrix& d) {
    if (!g.labeled())
        throw precondition_error("hamming_isometry_check: graph carries no labels");
    int n = g.order();
    bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v)
            if (d(u, v) != hamming(g.label(u), g.label(v))) {
                ok = false;
                break;
            }
    }
    return ok;
}

} // namespace gpe
