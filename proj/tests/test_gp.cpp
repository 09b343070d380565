#include "doctest.h"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <vector>

#include "gpe/distance.hpp"
#include "gpe/errors.hpp"
#include "gpe/generators.hpp"
#include "gpe/gp.hpp"
#include "gpe/graph.hpp"
#include "gpe/random_graphs.hpp"
#include "gpe/reference.hpp"
#include "gpe/theta.hpp"

using namespace gpe;

namespace {

EdgeSet make_set(const Graph& g, std::initializer_list<std::pair<int, int>> edges) {
    EdgeSet x(g.size());
    for (auto [u, v] : edges) {
        int e = g.edge_index(u, v);
        REQUIRE(e >= 0);
        x.set(e);
    }
    return x;
}

std::array<int, 3> sorted_edges(const TripleWitness& w) {
    std::array<int, 3> t = w.edges;
    std::sort(t.begin(), t.end());
    return t;
}

void check_witness_consistent(const Graph& g, const DistanceMatrix& d,
                              const TripleWitness& w) {
    auto [e1, e2, e3] = w.edges;
    CHECK(e1 != e2);
    CHECK(e2 != e3);
    CHECK(e1 != e3);
    CHECK(e1 < e3); // scan convention, makes the witness unique
    int span = 0;
    for (int k = 0; k < 3; ++k) {
        auto [a, b] = w.oriented[k];
        CHECK(g.edge_index(a, b) == w.edges[k]);
        if (k > 0) span += d(w.oriented[k - 1].second, a);
    }
    CHECK(w.endpoints.first == w.oriented[0].first);
    CHECK(w.endpoints.second == w.oriented[2].second);
    CHECK(d(w.endpoints.first, w.endpoints.second) == 3 + span);
}

} // namespace

TEST_SUITE("gp") {

TEST_CASE("three path edges lie on one geodesic") {
    Graph p = path_graph(4);
    DistanceMatrix d = all_pairs_distances(p);
    auto w = triple_on_common_geodesic(p, d, 0, 1, 2);
    REQUIRE(w.has_value());
    check_witness_consistent(p, d, *w);
    CHECK(w->endpoints == std::pair<int, int>{0, 3});
}

TEST_CASE("star edges do not") {
    Graph star = lucas_cube(3); // one center, three leaves
    DistanceMatrix d = all_pairs_distances(star);
    CHECK(star.size() == 3);
    CHECK_FALSE(triple_on_common_geodesic(star, d, 0, 1, 2).has_value());
}

TEST_CASE("triple detection agrees with geodesic enumeration") {
    Graph graphs[] = {path_graph(5), fibonacci_cube(3), lucas_cube(4), hypercube(3),
                      random_connected_bipartite(9, 4)};
    for (const Graph& g : graphs) {
        DistanceMatrix d = all_pairs_distances(g);
        std::set<std::array<int, 3>> enumerated;
        for (const auto& t : reference::conflicting_triples(g, d)) enumerated.insert(t);
        for (int e = 0; e < g.size(); ++e)
            for (int f = e + 1; f < g.size(); ++f)
                for (int h = f + 1; h < g.size(); ++h) {
                    auto w = triple_on_common_geodesic(g, d, e, f, h);
                    CHECK(w.has_value() == enumerated.contains({e, f, h}));
                    if (w) check_witness_consistent(g, d, *w);
                }
    }
}

TEST_CASE("sets of two always qualify") {
    Graph p = path_graph(6);
    DistanceMatrix d = all_pairs_distances(p);
    EdgeSet x = make_set(p, {{0, 1}, {4, 5}});
    CHECK(is_edge_gp_set(p, d, x).is_gp);
    EdgeSet empty(p.size());
    CHECK(is_edge_gp_set(p, d, empty).is_gp);
}

TEST_CASE("the violation is the first in scan order") {
    Graph p = path_graph(6);
    DistanceMatrix d = all_pairs_distances(p);
    EdgeSet x(p.size());
    for (int e = 0; e < p.size(); ++e) x.set(e);
    GpVerdict v = is_edge_gp_set(p, d, x);
    REQUIRE_FALSE(v.is_gp);
    REQUIRE(v.violation.has_value());
    CHECK(sorted_edges(*v.violation) == std::array<int, 3>{0, 1, 2});
    GpVerdict ref = reference::gp_scan(p, d, x);
    REQUIRE_FALSE(ref.is_gp);
    CHECK(sorted_edges(*ref.violation) == sorted_edges(*v.violation));
}

TEST_CASE("verdicts match the enumeration oracle on random subsets") {
    Graph graphs[] = {fibonacci_cube(4), lucas_cube(5), grid(3),
                      random_connected_bipartite(10, 11)};
    std::mt19937_64 rng(99);
    for (const Graph& g : graphs) {
        DistanceMatrix d = all_pairs_distances(g);
        for (int trial = 0; trial < 60; ++trial) {
            EdgeSet x(g.size());
            for (int e = 0; e < g.size(); ++e)
                if (rand_below(rng, 3) == 0) x.set(e);
            GpVerdict fast = is_edge_gp_set(g, d, x, 4);
            CHECK(fast.is_gp == reference::is_edge_gp_set_by_enumeration(g, d, x));
            GpVerdict slow = reference::gp_scan(g, d, x);
            CHECK(fast.is_gp == slow.is_gp);
            if (!fast.is_gp) {
                CHECK(sorted_edges(*fast.violation) == sorted_edges(*slow.violation));
                check_witness_consistent(g, d, *fast.violation);
            }
        }
    }
}

TEST_CASE("general position is closed downward") {
    Graph g = fibonacci_cube(4);
    DistanceMatrix d = all_pairs_distances(g);
    ThetaPartition p = theta_partition(g, d);
    EdgeSet x = p.classes[0];
    x |= p.classes[3];
    REQUIRE(is_edge_gp_set(g, d, x).is_gp);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        EdgeSet y = x;
        for (int e = 0; e < g.size(); ++e)
            if (y.test(e) && rand_below(rng, 2) == 0) y.reset(e);
        CHECK(is_edge_gp_set(g, d, y).is_gp);
    }
}

TEST_CASE("extension checks") {
    Graph p = path_graph(5);
    DistanceMatrix d = all_pairs_distances(p);
    EdgeSet x = make_set(p, {{0, 1}, {1, 2}});
    CHECK_FALSE(can_extend(p, d, x, p.edge_index(2, 3)));
    CHECK_FALSE(can_extend(p, d, x, p.edge_index(3, 4)));
    CHECK(is_maximal_edge_gp_set(p, d, x));
    CHECK_THROWS_AS((void)can_extend(p, d, x, p.edge_index(0, 1)), precondition_error);

    EdgeSet one = make_set(p, {{0, 1}});
    CHECK(can_extend(p, d, one, p.edge_index(3, 4)));
    CHECK_FALSE(is_maximal_edge_gp_set(p, d, one));
}

TEST_CASE("a star is only maximal as a whole") {
    Graph star = lucas_cube(3);
    DistanceMatrix d = all_pairs_distances(star);
    EdgeSet two(star.size());
    two.set(0);
    two.set(1);
    CHECK(is_edge_gp_set(star, d, two).is_gp);
    CHECK_FALSE(is_maximal_edge_gp_set(star, d, two)); // diameter two, all edges fit
    EdgeSet all(star.size());
    for (int e = 0; e < 3; ++e) all.set(e);
    CHECK(is_maximal_edge_gp_set(star, d, all));
}

TEST_CASE("class pair unions") {
    Graph g = fibonacci_cube(4);
    DistanceMatrix d = all_pairs_distances(g);
    ThetaPartition p = theta_partition(g, d);
    for (int i = 1; i <= p.class_count(); ++i)
        for (int j = i + 1; j <= p.class_count(); ++j) CHECK(class_pair_is_gp(g, d, p, i, j));

    Graph k23(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    DistanceMatrix dk = all_pairs_distances(k23);
    ThetaPartition pk = theta_partition(k23, dk);
    CHECK_THROWS_AS((void)class_pair_is_gp(k23, dk, pk, 1, 1), precondition_error);
}

TEST_CASE("parallel scan agrees with serial") {
    Graph g = fibonacci_cube(6);
    DistanceMatrix d = all_pairs_distances(g);
    ThetaPartition p = theta_partition(g, d);
    EdgeSet x = p.classes[0];
    x |= p.classes[5];
    CHECK(is_edge_gp_set(g, d, x, 1).is_gp == is_edge_gp_set(g, d, x, 4).is_gp);
    x.set(p.classes[2].first());
    GpVerdict serial = is_edge_gp_set(g, d, x, 1);
    GpVerdict parallel = is_edge_gp_set(g, d, x, 4);
    CHECK(serial.is_gp == parallel.is_gp);
    if (!serial.is_gp) CHECK(sorted_edges(*serial.violation) == sorted_edges(*parallel.violation));
}

} // TEST_SUITE
