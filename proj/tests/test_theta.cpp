#include "doctest.h"

#include <algorithm>
#include <vector>

#include "gpe/distance.hpp"
#include "gpe/errors.hpp"
#include "gpe/generators.hpp"
#include "gpe/graph.hpp"
#include "gpe/numbers.hpp"
#include "gpe/random_graphs.hpp"
#include "gpe/reference.hpp"
#include "gpe/theta.hpp"

using namespace gpe;

namespace {

Graph cycle(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    return Graph(k, std::move(edges));
}

Graph complete_bipartite_2_3() {
    return Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

} // namespace

TEST_SUITE("theta") {

TEST_CASE("relation basics on the four cycle") {
    Graph g = cycle(4);
    DistanceMatrix d = all_pairs_distances(g);
    CHECK(theta_related(d, {0, 1}, {0, 1}));        // reflexive
    CHECK(theta_related(d, {0, 1}, {2, 3}));        // opposite edges
    CHECK(theta_related(d, {0, 1}, {3, 2}));        // orientation free
    CHECK_FALSE(theta_related(d, {0, 1}, {1, 2})); // adjacent edges
}

TEST_CASE("partition covers every edge exactly once") {
    Graph graphs[] = {fibonacci_cube(5), lucas_cube(6), hypercube(4), grid(4), fig3_graph(),
                      cycle(6), complete_bipartite_2_3(),
                      random_connected_bipartite(10, 2)};
    for (const Graph& g : graphs) {
        DistanceMatrix d = all_pairs_distances(g);
        ThetaPartition p = theta_partition(g, d);
        EdgeSet all(g.size());
        int total = 0;
        for (int k = 0; k < p.class_count(); ++k) {
            for (int e : p.classes[k].to_vector()) {
                CHECK(p.class_of_edge[e] == k);
                CHECK_FALSE(all.test(e));
                all.set(e);
            }
            total += p.classes[k].count();
        }
        CHECK(total == g.size());
    }
}

TEST_CASE("partition refuses bad graphs") {
    Graph pentagon = cycle(5);
    CHECK_THROWS_AS((void)theta_partition(pentagon, all_pairs_distances(pentagon)),
                    precondition_error);
}

TEST_CASE("coordinates match the label positions") {
    for (int n = 1; n <= 8; ++n) {
        Graph g = fibonacci_cube(n);
        DistanceMatrix d = all_pairs_distances(g);
        ThetaPartition p = theta_partition(g, d);
        REQUIRE(p.class_count() == n);
        for (int k = 0; k < n; ++k) {
            CHECK(p.coordinates[k] == k + 1);
            for (int e : p.classes[k].to_vector()) {
                auto [u, v] = g.edges()[e];
                CHECK(differing_coordinate(g.label(u), g.label(v)) == k + 1);
            }
        }
    }
}

TEST_CASE("untagged graphs fall back to ordinals") {
    Graph g = cycle(6);
    DistanceMatrix d = all_pairs_distances(g);
    ThetaPartition p = theta_partition(g, d);
    CHECK(p.class_count() == 3);
    CHECK(p.coordinates.empty());
    for (int k = 0; k < 3; ++k) CHECK(p.classes[k].count() == 2);
    CHECK(p.position_of(1) == 0);
    CHECK(p.position_of(3) == 2);
    CHECK(p.position_of(4) == -1);
}

TEST_CASE("pinned classes of the width five fibonacci cube") {
    Graph g = fibonacci_cube(5);
    DistanceMatrix d = all_pairs_distances(g);
    ThetaPartition p = theta_partition(g, d);
    auto members = [&](int k) {
        std::vector<std::pair<int, int>> out;
        for (int e : p.classes[k].to_vector()) out.push_back(g.edges()[e]);
        return out;
    };
    std::vector<std::pair<int, int>> first = {{0, 8}, {1, 9}, {2, 10}, {3, 11}, {4, 12}};
    std::vector<std::pair<int, int>> last = {{0, 1}, {3, 4}, {5, 6}, {8, 9}, {11, 12}};
    CHECK(members(0) == first);
    CHECK(members(4) == last);
}

TEST_CASE("class sizes follow the closed forms") {
    for (int n = 1; n <= 9; ++n) CHECK(class_size_formula_check(CubeFamily::fibonacci, n));
    for (int n = 2; n <= 9; ++n) CHECK(class_size_formula_check(CubeFamily::lucas, n));
    // and directly, with the symmetry of the fibonacci sizes
    Graph g = fibonacci_cube(7);
    DistanceMatrix d = all_pairs_distances(g);
    ThetaPartition p = theta_partition(g, d);
    for (int k = 0; k < 7; ++k) {
        CHECK(p.classes[k].count() == (int)(fibonacci(k + 1) * fibonacci(7 - k)));
        CHECK(p.classes[k].count() == p.classes[6 - k].count());
    }
}

TEST_CASE("the best pair combines the two largest classes") {
    for (int n = 2; n <= 9; ++n) {
        Graph g = fibonacci_cube(n);
        DistanceMatrix d = all_pairs_distances(g);
        ThetaPartition p = theta_partition(g, d);
        ClassPair best = best_class_pair(p);
        CHECK(best.combined == 2 * fibonacci(n));
        CHECK(best.i < best.j);
    }
    // all classes tie in a cube, so the lexicographically first pair wins
    Graph q = hypercube(3);
    DistanceMatrix dq = all_pairs_distances(q);
    ClassPair flat = best_class_pair(theta_partition(q, dq));
    CHECK(flat.i == 1);
    CHECK(flat.j == 2);
    CHECK(flat.combined == 8);
}

TEST_CASE("partial cube recognition") {
    DistanceMatrix d5 = all_pairs_distances(cycle(5));
    CHECK_FALSE(is_partial_cube(cycle(5), d5));
    DistanceMatrix d6 = all_pairs_distances(cycle(6));
    CHECK(is_partial_cube(cycle(6), d6));
    Graph k23 = complete_bipartite_2_3();
    DistanceMatrix dk = all_pairs_distances(k23);
    CHECK_FALSE(is_partial_cube(k23, dk));
    Graph graphs[] = {fibonacci_cube(6), lucas_cube(6), hypercube(4), grid(4), fig3_graph()};
    for (const Graph& g : graphs) {
        DistanceMatrix d = all_pairs_distances(g);
        CHECK(is_partial_cube(g, d));
    }
}

TEST_CASE("geodesics never repeat a class") {
    Graph graphs[] = {fibonacci_cube(4), lucas_cube(5), hypercube(3)};
    for (const Graph& g : graphs) {
        DistanceMatrix d = all_pairs_distances(g);
        ThetaPartition p = theta_partition(g, d);
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                for (const EdgeSet& path : reference::geodesic_edge_sets(g, d, u, v)) {
                    CHECK(path.count() == d(u, v));
                    std::vector<int> seen;
                    for (int e : path.to_vector()) seen.push_back(p.class_of_edge[e]);
                    std::sort(seen.begin(), seen.end());
                    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
                }
    }
}

TEST_CASE("partition is independent of the thread count") {
    Graph g = fibonacci_cube(7);
    DistanceMatrix d = all_pairs_distances(g);
    ThetaPartition serial = theta_partition(g, d, 1);
    ThetaPartition parallel = theta_partition(g, d, 4);
    CHECK(serial.coordinates == parallel.coordinates);
    CHECK(serial.class_of_edge == parallel.class_of_edge);
    REQUIRE(serial.class_count() == parallel.class_count());
    for (int k = 0; k < serial.class_count(); ++k)
        CHECK(serial.classes[k] == parallel.classes[k]);
}

} // TEST_SUITE
