#include "gpe/automorphism.hpp"

#include <algorithm>
#include <unordered_map>

#include "gpe/errors.hpp"

namespace gpe {

namespace {

/// Sorted distance multiset of each vertex; automorphism-invariant.
std::vector<std::vector<int>> distance_profiles(const Graph& g, const DistanceMatrix& d) {
    std::vector<std::vector<int>> prof(g.order());
    for (int v = 0; v < g.order(); ++v) {
        prof[v].reserve(g.order());
        for (int u = 0; u < g.order(); ++u) prof[v].push_back(d(v, u));
        std::sort(prof[v].begin(), prof[v].end());
    }
    return prof;
}

struct Search {
    const Graph& g;
    const DistanceMatrix& d;
    std::vector<std::vector<int>> prof;
    std::vector<int> perm;
    std::vector<char> used;
    std::vector<std::vector<int>>& out;

    void extend(int v) {
        if (v == g.order()) {
            out.push_back(perm);
            return;
        }
        for (int w = 0; w < g.order(); ++w) {
            if (used[w] || prof[v] != prof[w]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (d(u, v) != d(perm[u], w)) ok = false;
            if (!ok) continue;
            perm[v] = w;
            used[w] = 1;
            extend(v + 1);
            used[w] = 0;
        }
    }
};

} // namespace

std::vector<std::vector<int>> automorphisms(const Graph& g, const DistanceMatrix& d) {
    if (g.order() > 20)
        throw precondition_error("automorphisms: order > 20 not supported");
    std::vector<std::vector<int>> out;
    Search search{g, d, distance_profiles(g, d), std::vector<int>(g.order()),
                  std::vector<char>(g.order(), 0), out};
    search.extend(0);
    return out;
}

EdgeSet permute_edge_set(const Graph& g, const EdgeSet& x, const std::vector<int>& perm) {
    EdgeSet image(g.size());
    for (int e = x.first(); e != -1; e = x.next(e + 1)) {
        auto [u, v] = g.edges()[e];
        int f = g.edge_index(perm[u], perm[v]);
        if (f == -1)
            throw precondition_error("permute_edge_set: permutation does not preserve edges");
        image.set(f);
    }
    return image;
}

int orbit_count(const Graph& g, const std::vector<EdgeSet>& sets,
                const std::vector<std::vector<int>>& autos) {
    std::unordered_map<EdgeSet, int, EdgeSetHash> index;
    for (int i = 0; i < (int)sets.size(); ++i) index.emplace(sets[i], i);

    std::vector<int> root(sets.size());
    for (int i = 0; i < (int)sets.size(); ++i) root[i] = i;
    auto find = [&](int i) {
        while (root[i] != i) i = root[i] = root[root[i]];
        return i;
    };

    for (int i = 0; i < (int)sets.size(); ++i)
        for (const auto& a : autos) {
            auto it = index.find(permute_edge_set(g, sets[i], a));
            if (it == index.end())
                throw precondition_error("orbit_count: sets not closed under automorphisms");
            int ri = find(i), rj = find(it->second);
            if (ri != rj) root[std::max(ri, rj)] = std::min(ri, rj);
        }

    int orbits = 0;
    for (int i = 0; i < (int)sets.size(); ++i)
        if (find(i) == i) ++orbits;
    return orbits;
}

} // namespace gpe
