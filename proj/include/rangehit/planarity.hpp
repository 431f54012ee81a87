// Planarity with independently checkable certificates: a rotation system
// validated by Euler counts, or a K5/K33 subdivision validated structurally.
#pragma once

#include <utility>
#include <vector>

namespace rangehit {

// Simple undirected graph: no self-loops, no parallel edges.
struct Graph {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;
};

enum class ObstructionKind { None, K5, K33 };

struct PlanarityCertificate {
    bool planar = false;
    std::vector<std::vector<int>> rotation;        // planar: cyclic neighbor order per vertex
    std::vector<std::pair<int, int>> obstruction;  // non-planar: subdivision edges
    ObstructionKind obstruction_kind = ObstructionKind::None;
};

// Decides planarity and returns a certificate that passes
// verify_planarity_certificate. Applies the |E| <= 3|V| - 6 count filter as a
// cross-check on the decision.
PlanarityCertificate is_planar(const Graph& g);

// Re-derives the certificate's claim from scratch: rotation systems must give
// V - E + F = 2 on every connected component; obstructions must be genuine
// K5/K33 subdivisions made of graph edges.
bool verify_planarity_certificate(const Graph& g, const PlanarityCertificate& cert);

}  // namespace rangehit
