// Small-edge selection, greedy matching with decomposition, per-class
// hitting sets, and heavy-edge net extraction.
#pragma once

#include <vector>

#include "rangehit/hypergraph.hpp"
#include "rangehit/rational.hpp"
#include "rangehit/solvers.hpp"

namespace rangehit {

struct SmallEdgeReport {
    int edge_index = -1;
    int local_matching_value = 0;  // exact nu over edges_intersecting(edge_index)
    bool heuristic = false;        // minimized |edges_intersecting| instead of local nu
};

struct Decomposition {
    std::vector<int> chosen;                // greedy matching M, original edge indices
    std::vector<std::vector<int>> classes;  // classes[i] = edges removed at step i
};

struct GreedyOptions {
    int exact_small_edge_limit = 64;  // above this many live edges, surrogate selection
    int exact_class_tau_limit = 25;   // above this many class edges, greedy cover
    long long node_budget = kDefaultNodeBudget;
};

// The edge whose intersecting subfamily has the smallest exact matching
// number (ties -> lowest index). On hypergraphs above exact_small_edge_limit
// edges, picks the edge minimizing |edges_intersecting| instead and reports
// heuristic = true; the returned local value is exact either way.
SmallEdgeReport find_small_edge(const Hypergraph& h, const GreedyOptions& opts = {});

// Repeat find_small_edge on the surviving edges, each time recording the
// chosen edge and deleting everything intersecting it. chosen is a maximal
// matching; classes partition all edge indices of h.
Decomposition greedy_matching(const Hypergraph& h, const GreedyOptions& opts = {});

// Union of per-class hitting sets (exact tau under the node budget for small
// classes, greedy otherwise). Hits every edge of h.
HittingSetResult hitting_from_decomposition(const Hypergraph& h, const Decomposition& d,
                                            const GreedyOptions& opts = {});

struct ClassCoverDetail {
    HittingSetResult combined;
    std::vector<HittingSetResult> per_class;
    std::vector<bool> exact;  // per class: solved to optimality vs greedy
};

ClassCoverDetail hitting_from_decomposition_detailed(const Hypergraph& h, const Decomposition& d,
                                                     const GreedyOptions& opts = {});

// Drop edges with fewer than eps * total_points vertices, then run the
// greedy pipeline on the remainder. The result hits every surviving edge.
std::vector<int> epsilon_net(const Hypergraph& h, int total_points, const Rational& eps,
                             const GreedyOptions& opts = {});

}  // namespace rangehit
