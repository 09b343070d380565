#pragma once

#include <cstdint>
#include <random>

#include "gpe/graph.hpp"

namespace gpe {

/// Uniform draw from [0, n) by rejection-free modulo; bias is irrelevant
/// here and the result is identical across standard libraries.
std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n);

/// Connected bipartite graph on n vertices (2 <= n <= 12): a tree backbone
/// alternating sides plus extra random cross edges.
Graph random_connected_bipartite(int n, std::uint64_t seed);

/// Cactus of cube blocks: 2 to 6 blocks, each an edge, a 4-cycle, or a
/// 3-cube, glued at random vertices. Every block is isometric in the whole,
/// which makes these good fixtures for block-level reasoning.
Graph random_cube_cactus(std::uint64_t seed);

} // namespace gpe
