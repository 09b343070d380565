#include "gpe/cover.hpp"

#include <algorithm>

#include "gpe/errors.hpp"

namespace gpe {

namespace {

/// gain[v] = max uncovered edges on a geodesic from v to t, for vertices on
/// s-t geodesics; -1 elsewhere.
std::vector<int> geodesic_gains(const Graph& g, const DistanceMatrix& d, int s, int t,
                                const EdgeSet& covered) {
    int dist = d(s, t);
    std::vector<int> gain(g.order(), -1);
    gain[t] = 0;

    // Vertices on s-t geodesics, processed by increasing distance from t.
    std::vector<std::vector<int>> by_layer(dist + 1);
    for (int v = 0; v < g.order(); ++v)
        if (d(s, v) + d(v, t) == dist) by_layer[d(v, t)].push_back(v);

    for (int dt = 1; dt <= dist; ++dt)
        for (int v : by_layer[dt])
            for (auto [w, e] : g.neighbors(v)) {
                if (d(w, t) != dt - 1 || d(s, w) != d(s, v) + 1) continue;
                gain[v] = std::max(gain[v], gain[w] + (covered.test(e) ? 0 : 1));
            }
    return gain;
}

/// Lexicographically smallest maximum-gain geodesic, walked from s.
std::vector<int> reconstruct(const Graph& g, const DistanceMatrix& d, int s, int t,
                             const EdgeSet& covered, const std::vector<int>& gain) {
    std::vector<int> path{s};
    int v = s;
    while (v != t) {
        for (auto [w, e] : g.neighbors(v)) { // neighbors sorted: first hit is lex-min
            if (d(w, t) == d(v, t) - 1 && d(s, w) == d(s, v) + 1 &&
                gain[w] + (covered.test(e) ? 0 : 1) == gain[v]) {
                path.push_back(w);
                v = w;
                break;
            }
        }
    }
    return path;
}

} // namespace

GeodesicCover greedy_geodesic_cover(const Graph& g, const DistanceMatrix& d) {
    GeodesicCover cover{{}, EdgeSet(g.size()), g.size()};

    while (cover.covered.count() < g.size()) {
        // Scanning pairs in ascending order and replacing only on strict
        // improvement makes the smallest endpoint pair win ties.
        int best_gain = 0;
        std::pair<int, int> best_pair{-1, -1};
        for (int s = 0; s < g.order(); ++s)
            for (int t = s + 1; t < g.order(); ++t) {
                int gain = geodesic_gains(g, d, s, t, cover.covered)[s];
                if (gain > best_gain) {
                    best_gain = gain;
                    best_pair = {s, t};
                }
            }
        if (best_gain == 0)
            throw internal_error("greedy_geodesic_cover: no progress");

        auto [s, t] = best_pair;
        std::vector<int> path =
            reconstruct(g, d, s, t, cover.covered, geodesic_gains(g, d, s, t, cover.covered));
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            cover.covered.set(g.edge_index(path[i], path[i + 1]));
        cover.paths.push_back(std::move(path));
    }
    return cover;
}

GeodesicCover fig3_cover_fixture(const Graph& fig3) {
    // Columns 0..3, rows 0..3 of the plus-shaped region; each path is a
    // monotone staircase, hence a geodesic, and the four are edge-disjoint.
    static constexpr std::pair<int, int> kPaths[4][5] = {
        {{1, 0}, {1, 1}, {1, 2}, {1, 3}, {2, 3}},
        {{1, 0}, {2, 0}, {2, 1}, {2, 2}, {2, 3}},
        {{0, 1}, {0, 2}, {1, 2}, {2, 2}, {3, 2}},
        {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}},
    };
    auto vertex_at = [&](int x, int y) {
        for (int v = 0; v < fig3.order(); ++v) {
            const BitLabel& l = fig3.label(v);
            int col = 0, row = 0;
            for (int p = 0; p < 3; ++p) col += l.bit(p);
            for (int p = 3; p < 6; ++p) row += l.bit(p);
            if (col == x && row == y) return v;
        }
        throw precondition_error("fig3_cover_fixture: not the fig3 graph");
    };

    GeodesicCover cover{{}, EdgeSet(fig3.size()), fig3.size()};
    for (const auto& pts : kPaths) {
        std::vector<int> path;
        for (auto [x, y] : pts) path.push_back(vertex_at(x, y));
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            int e = fig3.edge_index(path[i], path[i + 1]);
            if (e < 0) throw precondition_error("fig3_cover_fixture: not the fig3 graph");
            cover.covered.set(e);
        }
        cover.paths.push_back(std::move(path));
    }
    return cover;
}

} // namespace gpe
