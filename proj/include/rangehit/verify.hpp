// Executable certificates: two-intersection-graph planarity, the nine-pair
// separation impossibility in R^3, the duality chain, and a coarse
// intersection statistic.
#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "rangehit/geom.hpp"
#include "rangehit/hypergraph.hpp"
#include "rangehit/planarity.hpp"
#include "rangehit/solvers.hpp"

namespace rangehit {

// Nodes are the edges of a matching B; two are adjacent when some edge of H
// meets both and no other member of B.
struct TwoIntersectionGraph {
    std::vector<int> nodes;                     // hypergraph edge indices (the matching B)
    std::vector<std::pair<int, int>> adjacency; // positions into nodes, i < j
    std::vector<int> witnesses;                 // witnesses[k] meets both ends of adjacency[k]

    Graph graph() const;
};

TwoIntersectionGraph two_intersection_graph(const Hypergraph& h, const std::vector<int>& matching);

struct PlanarityPropertyReport {
    std::vector<int> matching;
    TwoIntersectionGraph two_graph;
    PlanarityCertificate certificate;
    bool certificate_verified = false;
    bool planar = false;
};

// Builds the trace hypergraph, takes B = maximum-matching witness (or the
// override), and reports whether its two-intersection graph is planar, with
// an independently re-verified certificate. Requires half-planes/discs in R2
// or half-spaces in R3. Expected planar for those families; a non-planar
// report is a finding, not an error.
PlanarityPropertyReport check_planarity_property(
    const GeometricInstance& instance,
    const std::optional<std::vector<int>>& matching_override = std::nullopt,
    long long node_budget = kDefaultNodeBudget);

// Deterministic maximal matching over a seed-shuffled edge order.
std::vector<int> random_maximal_matching(const Hypergraph& h, std::uint64_t seed);

struct K33SeparationReport {
    std::array<std::array<bool, 3>, 3> feasible{};  // [i][j]: u_i with w_j
    std::vector<std::pair<int, int>> feasible_pairs;
    bool all_nine = false;
};

// points = u1,u2,u3,w1,w2,w3 in R^3. Pair (i,j) is feasible when some
// half-space admits u_i and w_j with margin >= 1 while the other four points
// sit at <= -1 (exact LP). all_nine true would contradict the impossibility
// result. Requires general position unless allow_degenerate.
K33SeparationReport check_k33_separations(const std::vector<Point>& points,
                                          bool allow_degenerate = false);

struct DualityReport {
    MatchingResult nu;
    FractionalSolution nu_star_sol;
    FractionalSolution tau_star_sol;
    HittingSetResult tau;
    bool star_equal = false;   // nu* == tau*, exact rational comparison
    bool chain_holds = false;  // nu <= nu* == tau* <= tau
};

// The chain always holds mathematically; chain_holds = false signals an
// arithmetic defect in a solver, never a property of the input.
DualityReport check_duality_chain(const Hypergraph& h, long long node_budget = kDefaultNodeBudget);

struct HellyStat {
    Rational alpha;  // fraction of edge pairs that intersect
    Rational beta;   // max vertex degree / edge count
};

HellyStat fractional_helly_stat(const Hypergraph& h);

}  // namespace rangehit
