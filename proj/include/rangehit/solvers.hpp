// Exact matching/hitting-set solvers and their fractional LP relaxations.
#pragma once

#include <stdexcept>
#include <vector>

#include "rangehit/hypergraph.hpp"
#include "rangehit/rational.hpp"

namespace rangehit {

inline constexpr long long kDefaultNodeBudget = 50'000'000;

struct MatchingResult {
    int value = 0;
    std::vector<int> witness;  // pairwise-disjoint edge indices, sorted
};

struct HittingSetResult {
    int value = 0;
    std::vector<int> witness;  // vertex indices, sorted
};

struct FractionalSolution {
    Rational objective;
    std::vector<Rational> weights;  // per edge for nu_star, per vertex for tau_star
};

// Search ran out of nodes before proving optimality. A bound is never
// reported as an optimum.
class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError(const std::string& what, long long nodes)
        : std::runtime_error(what), nodes_explored(nodes) {}
    long long nodes_explored;
};

// Maximum independent set among `candidates` (indices into `neighbors`;
// neighbor lists must be sorted ascending, as intersection_graph emits).
// Branch and bound: pick the candidate with fewest candidate neighbors
// (ties -> lowest index), branch include/exclude, bound by |current| +
// |remaining|. Throws BudgetExceededError past node_budget nodes.
std::vector<int> max_independent_set(const std::vector<std::vector<int>>& neighbors,
                                     std::vector<int> candidates,
                                     long long node_budget = kDefaultNodeBudget);

// Exact maximum matching = MIS on the intersection graph.
MatchingResult nu_exact(const Hypergraph& h, long long node_budget = kDefaultNodeBudget);

// Exact minimum hitting set. Branch and bound on uncovered edges with a
// greedy incumbent and a disjoint-edge lower bound.
HittingSetResult tau_exact(const Hypergraph& h, long long node_budget = kDefaultNodeBudget);

// Exact rational LP optima: max sum y_e s.t. sum_{e contains v} y_e <= 1,
// and min sum x_v s.t. sum_{v in e} x_v >= 1. Solved independently so their
// equality is a genuine duality cross-check.
FractionalSolution nu_star(const Hypergraph& h);
FractionalSolution tau_star(const Hypergraph& h);

// Max-coverage greedy cover, ties by lowest vertex index. Never fails.
HittingSetResult greedy_hitting_set(const Hypergraph& h);

// Definition-level verifiers, independent of any search above.
bool is_matching(const Hypergraph& h, const std::vector<int>& edge_indices);
bool is_hitting_set(const Hypergraph& h, const std::vector<int>& vertices);

}  // namespace rangehit
