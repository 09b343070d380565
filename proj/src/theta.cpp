#include "gpe/theta.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <string>

#include "gpe/errors.hpp"
#include "gpe/generators.hpp"
#include "gpe/numbers.hpp"

namespace gpe {

bool theta_related(const DistanceMatrix& d, std::pair<int, int> e, std::pair<int, int> f) {
    auto [x, y] = e;
    auto [u, v] = f;
    return d(x, u) + d(y, v) != d(x, v) + d(y, u);
}

namespace {

/// row[e] = bitset of edges related to e. Symmetric, reflexive.
std::vector<EdgeSet> relation_rows(const Graph& g, const DistanceMatrix& d, int threads) {
    int m = g.size();
    std::vector<EdgeSet> rows(static_cast<std::size_t>(m), EdgeSet(m));
    int nthreads = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 8) num_threads(nthreads)
    for (int e = 0; e < m; ++e) {
        for (int f = e; f < m; ++f)
            if (theta_related(d, g.edge(e), g.edge(f)))
                rows[static_cast<std::size_t>(e)].set(f);
    }
    for (int e = 0; e < m; ++e)
        for (int f = rows[static_cast<std::size_t>(e)].next(e + 1); f >= 0;
             f = rows[static_cast<std::size_t>(e)].next(f + 1))
            rows[static_cast<std::size_t>(f)].set(e);
    return rows;
}

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(static_cast<std::size_t>(n)) {
        std::iota(up.begin(), up.end(), 0);
    }
    int find(int x) {
        while (up[static_cast<std::size_t>(x)] != x) {
            up[static_cast<std::size_t>(x)] =
                up[static_cast<std::size_t>(up[static_cast<std::size_t>(x)])];
            x = up[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) up[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

std::vector<EdgeSet> closure_classes(const std::vector<EdgeSet>& rows, int m) {
    UnionFind uf(m);
    for (int e = 0; e < m; ++e)
        for (int f = rows[static_cast<std::size_t>(e)].next(e + 1); f >= 0;
             f = rows[static_cast<std::size_t>(e)].next(f + 1))
            uf.unite(e, f);

    std::vector<int> root_class(static_cast<std::size_t>(m), -1);
    std::vector<EdgeSet> classes;
    for (int e = 0; e < m; ++e) {
        int r = uf.find(e);
        if (root_class[static_cast<std::size_t>(r)] < 0) {
            root_class[static_cast<std::size_t>(r)] = static_cast<int>(classes.size());
            classes.emplace_back(m);
        }
        classes[static_cast<std::size_t>(root_class[static_cast<std::size_t>(r)])].set(e);
    }
    // Roots are the smallest members, so this order is already by smallest
    // member edge index.
    return classes;
}

void require_bipartite(const Graph& g, const char* who) {
    if (!is_bipartite(g).bipartite)
        throw precondition_error(std::string(who) + ": graph is not bipartite");
}

} // namespace

int ThetaPartition::position_of(int id) const {
    if (!coordinates.empty()) {
        for (int k = 0; k < class_count(); ++k)
            if (coordinates[static_cast<std::size_t>(k)] == id) return k;
        return -1;
    }
    return (id >= 1 && id <= class_count()) ? id - 1 : -1;
}

ThetaPartition theta_partition(const Graph& g, const DistanceMatrix& d, int threads) {
    require_bipartite(g, "theta_partition");

    ThetaPartition p;
    p.classes = closure_classes(relation_rows(g, d, threads), g.size());

    if (g.labeled() && hamming_isometry_check(g, d)) {
        p.coordinates.reserve(p.classes.size());
        for (const auto& cls : p.classes) {
            int coord = 0;
            for (int e = cls.first(); e >= 0; e = cls.next(e + 1)) {
                auto [u, v] = g.edge(e);
                int c = differing_coordinate(g.label(u), g.label(v));
                if (coord == 0)
                    coord = c;
                else if (coord != c)
                    throw internal_error(
                        "theta_partition: class mixes coordinates on an isometric graph");
            }
            p.coordinates.push_back(coord);
        }
        std::vector<int> order(p.classes.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return p.coordinates[static_cast<std::size_t>(a)] <
                   p.coordinates[static_cast<std::size_t>(b)];
        });
        std::vector<EdgeSet> classes;
        std::vector<int> coords;
        for (int k : order) {
            classes.push_back(std::move(p.classes[static_cast<std::size_t>(k)]));
            coords.push_back(p.coordinates[static_cast<std::size_t>(k)]);
        }
        p.classes = std::move(classes);
        p.coordinates = std::move(coords);
    }

    p.class_of_edge.assign(static_cast<std::size_t>(g.size()), -1);
    for (int k = 0; k < p.class_count(); ++k)
        for (int e = p.classes[static_cast<std::size_t>(k)].first(); e >= 0;
             e = p.classes[static_cast<std::size_t>(k)].next(e + 1))
            p.class_of_edge[static_cast<std::size_t>(e)] = k;
    return p;
}

bool is_partial_cube(const Graph& g, const DistanceMatrix& d) {
    bool winkler = false;
    if (is_bipartite(g).bipartite) {
        auto rows = relation_rows(g, d, 0);
        auto classes = closure_classes(rows, g.size());
        std::vector<int> cls_of(static_cast<std::size_t>(g.size()));
        for (int k = 0; k < static_cast<int>(classes.size()); ++k)
            for (int e = classes[static_cast<std::size_t>(k)].first(); e >= 0;
                 e = classes[static_cast<std::size_t>(k)].next(e + 1))
                cls_of[static_cast<std::size_t>(e)] = k;

        // Transitive iff every row already equals its closure class.
        winkler = true;
        for (int e = 0; e < g.size() && winkler; ++e) {
            const auto& cls =
                classes[static_cast<std::size_t>(cls_of[static_cast<std::size_t>(e)])];
            if (!(rows[static_cast<std::size_t>(e)] == cls)) winkler = false;
        }
    }

    if (g.labeled() && hamming_isometry_check(g, d) && !winkler)
        throw internal_error(
            "is_partial_cube: isometric labeling contradicts the recognizer");
    return winkler;
}

bool class_size_formula_check(CubeFamily family, int n) {
    if (family == CubeFamily::fibonacci && n < 1)
        throw precondition_error("class_size_formula_check: fibonacci needs n >= 1");
    if (family == CubeFamily::lucas && n < 2)
        throw precondition_error("class_size_formula_check: lucas needs n >= 2");

    Graph g = family == CubeFamily::fibonacci ? fibonacci_cube(n) : lucas_cube(n);
    DistanceMatrix d = all_pairs_distances(g);
    ThetaPartition p = theta_partition(g, d);

    if (p.class_count() != n || p.coordinates.empty()) return false;
    for (int k = 0; k < n; ++k) {
        int i = p.coordinates[static_cast<std::size_t>(k)];
        std::uint64_t expected = family == CubeFamily::fibonacci
                                     ? fibonacci(i) * fibonacci(n - i + 1)
                                     : fibonacci(n - 1);
        if (static_cast<std::uint64_t>(
                p.classes[static_cast<std::size_t>(k)].count()) != expected)
            return false;
    }
    return true;
}

ClassPair best_class_pair(const ThetaPartition& p) {
    if (p.class_count() < 2)
        throw precondition_error("best_class_pair: need at least two classes");
    auto id_of = [&](int k) {
        return p.coordinates.empty() ? k + 1 : p.coordinates[static_cast<std::size_t>(k)];
    };
    ClassPair best{0, 0, 0};
    for (int a = 0; a < p.class_count(); ++a)
        for (int b = a + 1; b < p.class_count(); ++b) {
            std::uint64_t sum =
                static_cast<std::uint64_t>(p.classes[static_cast<std::size_t>(a)].count()) +
                static_cast<std::uint64_t>(p.classes[static_cast<std::size_t>(b)].count());
            if (sum > best.combined) best = {id_of(a), id_of(b), sum};
        }
    return best;
}

} // namespace gpe
