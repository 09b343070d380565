#include "gpe/reference.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <set>

#include "gpe/errors.hpp"

namespace gpe::reference {

DistanceMatrix all_pairs_distances_bfs(const Graph& g) {
    int n = g.order();
    DistanceMatrix d(n);
    std::vector<int> dist(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::queue<int> queue;
        queue.push(s);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (auto [w, e] : g.neighbors(v))
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    queue.push(w);
                }
        }
        for (int v = 0; v < n; ++v) {
            if (dist[v] == -1)
                throw precondition_error("all_pairs_distances_bfs: graph is disconnected");
            d.set(s, v, dist[v]);
        }
    }
    return d;
}

DistanceMatrix all_pairs_distances_floyd(const Graph& g) {
    int n = g.order();
    const int inf = 1 << 29;
    std::vector<std::vector<int>> w(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) w[v][v] = 0;
    for (auto [u, v] : g.edges()) w[u][v] = w[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                w[i][j] = std::min(w[i][j], w[i][k] + w[k][j]);

    DistanceMatrix d(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (w[i][j] >= inf)
                throw precondition_error("all_pairs_distances_floyd: graph is disconnected");
            d.set(i, j, w[i][j]);
        }
    return d;
}

namespace {

/// Walks every geodesic from v to t, reporting each as an edge set.
void walk_geodesics(const Graph& g, const DistanceMatrix& d, int v, int t,
                    std::vector<int>& edges, std::vector<EdgeSet>& out) {
    if (v == t) {
        EdgeSet s(g.size());
        for (int e : edges) s.set(e);
        out.push_back(std::move(s));
        return;
    }
    for (auto [w, e] : g.neighbors(v))
        if (d(w, t) == d(v, t) - 1) {
            edges.push_back(e);
            walk_geodesics(g, d, w, t, edges, out);
            edges.pop_back();
        }
}

} // namespace

std::vector<EdgeSet> geodesic_edge_sets(const Graph& g, const DistanceMatrix& d, int u, int v) {
    std::vector<EdgeSet> out;
    std::vector<int> edges;
    walk_geodesics(g, d, u, v, edges, out);
    return out;
}

std::vector<std::array<int, 3>> conflicting_triples(const Graph& g, const DistanceMatrix& d) {
    std::set<std::array<int, 3>> triples;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            if (d(u, v) < 3) continue;
            for (const EdgeSet& s : geodesic_edge_sets(g, d, u, v)) {
                std::vector<int> on = s.to_vector();
                for (std::size_t a = 0; a < on.size(); ++a)
                    for (std::size_t b = a + 1; b < on.size(); ++b)
                        for (std::size_t c = b + 1; c < on.size(); ++c)
                            triples.insert({on[a], on[b], on[c]});
            }
        }
    return {triples.begin(), triples.end()};
}

bool is_edge_gp_set_by_enumeration(const Graph& g, const DistanceMatrix& d, const EdgeSet& x) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            if (d(u, v) < 3) continue;
            for (const EdgeSet& s : geodesic_edge_sets(g, d, u, v)) {
                EdgeSet hit = s;
                hit &= x;
                if (hit.count() >= 3) return false;
            }
        }
    return true;
}

int max_gp_size_by_subsets(const Graph& g, const DistanceMatrix& d) {
    int m = g.size();
    if (m > 18) throw precondition_error("max_gp_size_by_subsets: more than 18 edges");
    if (m == 0) return 0;

    // pairs[h]: two-edge masks completing a conflicting triple whose highest
    // edge is h.
    std::vector<std::vector<std::uint32_t>> pairs(m);
    for (const auto& t : conflicting_triples(g, d))
        pairs[t[2]].push_back((1u << t[0]) | (1u << t[1]));

    std::vector<std::uint8_t> ok(std::size_t(1) << m, 1);
    int best = 0;
    for (std::uint32_t x = 1; x < (1u << m); ++x) {
        int h = 31 - __builtin_clz(x);
        std::uint32_t rest = x ^ (1u << h);
        if (!ok[rest]) {
            ok[x] = 0;
            continue;
        }
        for (std::uint32_t p : pairs[h])
            if ((x & p) == p) {
                ok[x] = 0;
                break;
            }
        if (ok[x]) best = std::max(best, __builtin_popcount(x));
    }
    return best;
}

GpVerdict gp_scan(const Graph& g, const DistanceMatrix& d, const EdgeSet& x) {
    std::vector<int> on = x.to_vector();
    for (std::size_t a = 0; a < on.size(); ++a)
        for (std::size_t b = a + 1; b < on.size(); ++b)
            for (std::size_t c = b + 1; c < on.size(); ++c)
                if (auto w = triple_on_common_geodesic(g, d, on[a], on[b], on[c]))
                    return {false, w};
    return {true, std::nullopt};
}

} // namespace gpe::reference
