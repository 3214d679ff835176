#pragma once

#include <cstdint>

#include "vitality/planar_graph.hpp"

namespace vitality {

// Grid of rows x cols vertices, terminals at opposite corners, rotations in
// compass order. grid(3, 3) is the canonical 3x3 fixture.
GraphSpec generate_grid(Idx rows, Idx cols);

// Grid with `deletions` random non-bridge edges removed (connectivity kept by
// retrying); deterministic per seed.
GraphSpec generate_grid_minus(Idx rows, Idx cols, Idx deletions, std::uint64_t seed);

// Random triangulated disk grown by repeated vertex insertion into faces;
// terminals at maximal BFS distance. Deterministic per seed.
GraphSpec generate_triangulated_disk(Idx n, std::uint64_t seed);

}  // namespace vitality
