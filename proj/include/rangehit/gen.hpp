// Deterministic seeded instance generators. Identical seeds give identical
// instances on every platform.
#pragma once

#include <cstdint>
#include <vector>

#include "rangehit/geom.hpp"
#include "rangehit/hypergraph.hpp"

namespace rangehit {

enum class RangeFamily { HalfPlane, Disc, HalfSpace };

int family_dim(RangeFamily family);  // 2, 2, 3

// Distinct integer points in [-1000, 1000]^dim. Each range is anchored at a
// random quantile k of the point projections/distances, with the threshold
// nudged by 1/7 so that no point sits on a boundary and every range traps at
// least k points.
GeometricInstance gen_random_instance(RangeFamily family, int num_points, int num_ranges,
                                      std::uint64_t seed);

// The seven three-point lines of the order-2 projective plane.
Hypergraph gen_fano();

// Six distinct integer points in R^3, redrawn until no four are coplanar.
std::vector<Point> gen_general_position_points(std::uint64_t seed);

// Abstract hypergraph with 1..max_vertices vertices and at most max_edges
// edges (duplicates collapse).
Hypergraph gen_random_abstract(int max_vertices, int max_edges, std::uint64_t seed);

// Sweep trial: 4..20 points and 3..12 ranges drawn from (master_seed, trial).
GeometricInstance gen_sweep_instance(RangeFamily family, std::uint64_t master_seed, int trial);

// Same, with the family cycling half-plane, disc, half-space by trial index.
GeometricInstance gen_sweep_instance(std::uint64_t master_seed, int trial);

}  // namespace rangehit
