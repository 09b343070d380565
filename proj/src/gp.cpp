#include "gpe/gp.hpp"

#include <omp.h>

#include <algorithm>

#include "gpe/errors.hpp"

namespace gpe {

namespace {

/// Orderings of a sorted triple (p, q, r) whose first edge id is smaller
/// than the last: scanning only these halves the work, since a geodesic
/// witnesses a triple in both traversal directions.
constexpr std::array<std::array<int, 3>, 3> kOrderings{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}}};

} // namespace

std::optional<TripleWitness> triple_on_common_geodesic(const Graph& g,
                                                       const DistanceMatrix& d,
                                                       int e, int f, int h) {
    std::array<int, 3> ids{e, f, h};
    std::sort(ids.begin(), ids.end());
    if (ids[0] == ids[1] || ids[1] == ids[2])
        throw precondition_error("triple_on_common_geodesic: edges must be distinct");

    for (const auto& ord : kOrderings) {
        std::array<int, 3> seq{ids[ord[0]], ids[ord[1]], ids[ord[2]]};
        for (int bits = 0; bits < 8; ++bits) {
            std::array<std::pair<int, int>, 3> o;
            for (int k = 0; k < 3; ++k) {
                auto [u, v] = g.edge(seq[k]);
                o[k] = (bits >> k) & 1 ? std::pair{v, u} : std::pair{u, v};
            }
            if (d(o[0].first, o[2].second) ==
                3 + d(o[0].second, o[1].first) + d(o[1].second, o[2].first))
                return TripleWitness{seq, o, {o[0].first, o[2].second}};
        }
    }
    return std::nullopt;
}

GpVerdict is_edge_gp_set(const Graph& g, const DistanceMatrix& d, const EdgeSet& x,
                         int threads) {
    std::vector<int> members = x.to_vector();
    int k = static_cast<int>(members.size());
    if (k < 3) return {true, std::nullopt};

    int nthreads = threads > 0 ? threads : omp_get_max_threads();
    // Lexicographically first violating triple; combined across threads by
    // taking the smallest member index vector.
    std::array<int, 3> best{-1, -1, -1};
    TripleWitness best_w{};

#pragma omp parallel num_threads(nthreads)
    {
        std::array<int, 3> local{-1, -1, -1};
        TripleWitness local_w{};
#pragma omp for schedule(dynamic, 4) nowait
        for (int a = 0; a < k - 2; ++a) {
            if (local[0] >= 0 && local[0] < a) continue;
            for (int b = a + 1; b < k - 1; ++b) {
                for (int c = b + 1; c < k; ++c) {
                    if (local[0] >= 0 &&
                        std::array{a, b, c} >= local)
                        break;
                    auto w = triple_on_common_geodesic(g, d, members[a], members[b],
                                                       members[c]);
                    if (w) {
                        local = {a, b, c};
                        local_w = *w;
                        break;
                    }
                }
                if (local[0] >= 0 && local[0] <= a && local[1] <= b) break;
            }
        }
#pragma omp critical
        if (local[0] >= 0 && (best[0] < 0 || local < best)) {
            best = local;
            best_w = local_w;
        }
    }

    if (best[0] >= 0) return {false, best_w};
    return {true, std::nullopt};
}

bool can_extend(const Graph& g, const DistanceMatrix& d, const EdgeSet& x, int e) {
    if (x.test(e))
        throw precondition_error("can_extend: edge already in the set");
    std::vector<int> members = x.to_vector();
    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
            if (triple_on_common_geodesic(g, d, e, members[a], members[b]))
                return false;
    return true;
}

bool is_maximal_edge_gp_set(const Graph& g, const DistanceMatrix& d, const EdgeSet& x) {
    if (!is_edge_gp_set(g, d, x).is_gp) return false;
    for (int e = 0; e < g.size(); ++e)
        if (!x.test(e) && can_extend(g, d, x, e)) return false;
    return true;
}

bool class_pair_is_gp(const Graph& g, const DistanceMatrix& d, const ThetaPartition& p,
                      int i, int j) {
    if (!is_partial_cube(g, d))
        throw precondition_error("class_pair_is_gp: graph is not a partial cube");
    int a = p.position_of(i), b = p.position_of(j);
    if (a < 0 || b < 0 || a == b)
        throw precondition_error("class_pair_is_gp: bad class ids");
    EdgeSet x = p.classes[a];
    x |= p.classes[b];
    return is_edge_gp_set(g, d, x).is_gp;
}

} // namespace gpe
