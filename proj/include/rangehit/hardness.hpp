// Star hypergraphs of K_n and their polynomial realization by points and
// half-spaces in R^{2d}, d = maximum vertex degree.
#pragma once

#include <vector>

#include "rangehit/geom.hpp"
#include "rangehit/hypergraph.hpp"

namespace rangehit {

struct BoundedDegreeHypergraph {
    Hypergraph base;
    int max_degree = 0;  // always computed from base, never declared
};

int max_vertex_degree(const Hypergraph& h);

// Realization data. For vertex v with incident 1-based edge ids I_v, let
//   Q_v(x) = prod_{i in I_v} (x - (i + 1/4)) (x - (i - 1/4)),   P_v = -Q_v / Q_v(0),
// so P_v(0) = -1. The point x_v carries P_v's coefficients p_{v,1..2d}
// (zero-padded); half-space i has normal (i, i^2, ..., i^{2d}) and offset 1.
// Then <x_v, n_i> = P_v(i) + 1, which is > 1 exactly when v lies in e_i and
// < 1 otherwise, never equal to 1.
struct Embedding {
    int dim = 0;                                      // 2 * max_degree
    std::vector<Point> points;                        // x_v per vertex
    std::vector<HalfSpace> halfspaces;                // one per edge
    std::vector<std::vector<Rational>> coefficients;  // p_{v,0..2d}; p_{v,0} = -1
    std::vector<std::vector<Rational>> certificates;  // certificates[v][i-1] = <x_v, n_i>
};

// C(n,2) vertices = the unordered pairs of {1..n} in lexicographic order;
// edge i = all pairs containing i. For n >= 3 the maximum degree is 2.
// (n = 2 collapses to a single edge, since both stars have the same trace.)
BoundedDegreeHypergraph star_hypergraph(int n);

// Builds the realization above and verifies every certificate before
// returning. Requires at least one edge and a correct max_degree field.
Embedding embed(const BoundedDegreeHypergraph& h);

// embed(star_hypergraph(n)) packaged as a geometric instance: C(n,2) points
// and n half-spaces in R^4 for n >= 3.
GeometricInstance hard_instance_r4(int n);

}  // namespace rangehit
