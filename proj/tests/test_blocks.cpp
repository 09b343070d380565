#include "doctest.h"

#include <numeric>
#include <set>
#include <vector>

#include "gpe/blocks.hpp"
#include "gpe/cover.hpp"
#include "gpe/distance.hpp"
#include "gpe/errors.hpp"
#include "gpe/generators.hpp"
#include "gpe/gp.hpp"
#include "gpe/graph.hpp"
#include "gpe/random_graphs.hpp"
#include "gpe/theta.hpp"

using namespace gpe;

TEST_SUITE("blocks") {

TEST_CASE("a path is a chain of bridges") {
    Graph p = path_graph(4);
    BlockDecomposition bd = block_decomposition(p);
    REQUIRE(bd.blocks.size() == 3);
    for (const EdgeSet& b : bd.blocks) CHECK(b.count() == 1);
    CHECK(bd.cut_vertices == std::vector<int>{1, 2});
    CHECK(bd.end_blocks.size() == 2);
    CHECK(bd.is_cut_vertex(1));
    CHECK_FALSE(bd.is_cut_vertex(0));
}

TEST_CASE("a biconnected graph is its own end block") {
    Graph c = hypercube(2);
    BlockDecomposition bd = block_decomposition(c);
    REQUIRE(bd.blocks.size() == 1);
    CHECK(bd.blocks[0].count() == 4);
    CHECK(bd.cut_vertices.empty());
    CHECK(bd.end_blocks == std::vector<int>{0});
}

TEST_CASE("two squares sharing a corner") {
    // 0-1-3-2-0 and 0-4-6-5-0 gives one cut vertex and two end blocks
    Graph g(7, {{0, 1}, {1, 3}, {2, 3}, {0, 2}, {0, 4}, {4, 6}, {5, 6}, {0, 5}});
    BlockDecomposition bd = block_decomposition(g);
    REQUIRE(bd.blocks.size() == 2);
    CHECK(bd.cut_vertices == std::vector<int>{0});
    CHECK(bd.end_blocks.size() == 2);
    CHECK(bd.blocks[0].count() == 4);
    CHECK(bd.blocks[1].count() == 4);
}

TEST_CASE("cactus fixtures decompose into their shapes") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = random_cube_cactus(seed);
        CHECK(g.connected());
        BlockDecomposition bd = block_decomposition(g);
        EdgeSet all(g.size());
        int total = 0;
        for (const EdgeSet& b : bd.blocks) {
            int c = b.count();
            CHECK((c == 1 || c == 4 || c == 12)); // edge, square or cube
            total += c;
            EdgeSet overlap = all;
            overlap &= b;
            CHECK(overlap.none());
            all |= b;
        }
        CHECK(total == g.size());
        CHECK(bd.end_blocks.size() >= 1);
        for (int b : bd.end_blocks) CHECK(b < (int)bd.blocks.size());
    }
}

TEST_CASE("end block class unions are in general position") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = random_cube_cactus(seed);
        DistanceMatrix d = all_pairs_distances(g);
        ThetaPartition p = theta_partition(g, d);
        EdgeSet x = end_block_gp_set(g, d, p);
        CHECK(x.any());
        CHECK(is_edge_gp_set(g, d, x).is_gp);
    }
}

TEST_CASE("the selector sees one call per end block") {
    Graph g = random_cube_cactus(3);
    DistanceMatrix d = all_pairs_distances(g);
    ThetaPartition p = theta_partition(g, d);
    BlockDecomposition bd = block_decomposition(g);
    std::vector<int> calls;
    EdgeSet x = end_block_gp_set(g, d, p,
                                 [&](int end_block, std::span<const int> candidates) {
                                     calls.push_back(end_block);
                                     REQUIRE_FALSE(candidates.empty());
                                     return (int)candidates[0];
                                 });
    CHECK(calls.size() == bd.end_blocks.size());
    CHECK(x.any());
}

TEST_CASE("cross block edges are never related") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = random_cube_cactus(seed);
        DistanceMatrix d = all_pairs_distances(g);
        std::vector<int> everything(g.order());
        std::iota(everything.begin(), everything.end(), 0);
        CHECK(cross_block_theta_check(g, d, everything));
    }
}

TEST_CASE("non isometric subgraphs are refused") {
    Graph p = path_graph(4);
    DistanceMatrix d = all_pairs_distances(p);
    CHECK_THROWS_AS((void)cross_block_theta_check(p, d, {0, 3}), precondition_error);
    CHECK(cross_block_theta_check(p, d, {0, 1, 2, 3}));
}

TEST_CASE("greedy cover picks the lexicographic geodesic first") {
    Graph c = hypercube(2);
    DistanceMatrix d = all_pairs_distances(c);
    GeodesicCover cover = greedy_geodesic_cover(c, d);
    REQUIRE(cover.paths.size() == 2);
    CHECK(cover.paths[0] == std::vector<int>{0, 1, 3});
    CHECK(cover.paths[1] == std::vector<int>{0, 2, 3});
    CHECK(cover.uncovered() == 0);
    CHECK(cover.bound() == 4);
}

TEST_CASE("covers certify the obvious path bound") {
    Graph p = path_graph(9);
    DistanceMatrix d = all_pairs_distances(p);
    GeodesicCover cover = greedy_geodesic_cover(p, d);
    CHECK(cover.paths.size() == 1);
    CHECK(cover.bound() == 2);
}

TEST_CASE("every cover path is a geodesic and all edges get covered") {
    Graph graphs[] = {fibonacci_cube(4), lucas_cube(5), grid(3), fig3_graph()};
    for (const Graph& g : graphs) {
        DistanceMatrix d = all_pairs_distances(g);
        GeodesicCover cover = greedy_geodesic_cover(g, d);
        CHECK(cover.total_edges == g.size());
        CHECK(cover.uncovered() == 0);
        EdgeSet seen(g.size());
        for (const auto& path : cover.paths) {
            REQUIRE(path.size() >= 2);
            CHECK((int)path.size() - 1 == d(path.front(), path.back()));
            for (std::size_t i = 1; i < path.size(); ++i) {
                int e = g.edge_index(path[i - 1], path[i]);
                REQUIRE(e >= 0);
                seen.set(e);
            }
        }
        CHECK(seen == cover.covered);
    }
}

TEST_CASE("the hand picked cover of the figure graph certifies eight") {
    Graph g = fig3_graph();
    DistanceMatrix d = all_pairs_distances(g);
    GeodesicCover cover = fig3_cover_fixture(g);
    CHECK(cover.paths.size() == 4);
    CHECK(cover.uncovered() == 0);
    CHECK(cover.bound() == 8);
    for (const auto& path : cover.paths) {
        CHECK((int)path.size() - 1 == d(path.front(), path.back()));
        for (std::size_t i = 1; i < path.size(); ++i)
            CHECK(g.edge_index(path[i - 1], path[i]) >= 0);
    }
}

} // TEST_SUITE
