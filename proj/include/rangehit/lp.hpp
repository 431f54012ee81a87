// Exact rational linear programming (dense two-phase simplex, Bland's rule).
#pragma once

#include <vector>

#include "rangehit/rational.hpp"

namespace rangehit::lp {

enum class Relation { LessEq, GreaterEq, Equal };
enum class Sense { Minimize, Maximize };
enum class Status { Optimal, Infeasible, Unbounded };

struct Constraint {
    std::vector<Rational> coeffs;  // length = num_vars
    Relation rel = Relation::LessEq;
    Rational rhs;
};

// All variables are >= 0; model free variables as differences of two.
struct Problem {
    int num_vars = 0;
    Sense sense = Sense::Minimize;
    std::vector<Rational> objective;  // length = num_vars
    std::vector<Constraint> constraints;
};

struct Result {
    Status status = Status::Infeasible;
    Rational objective;               // meaningful when Optimal
    std::vector<Rational> solution;   // length = num_vars when Optimal
};

// Exact optimum; Bland's rule guarantees termination.
Result solve(const Problem& p);

// Phase-1 only: does the constraint system admit a nonnegative solution?
bool feasible(const Problem& p);

}  // namespace rangehit::lp
