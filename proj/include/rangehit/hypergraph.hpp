// Trace hypergraphs over geometric instances, and abstract hypergraphs.
#pragma once

#include <vector>

#include "rangehit/geom.hpp"

namespace rangehit {

// Edges are sorted, duplicate-free, nonempty vertex-index sets; no two edges
// are equal as sets. provenance[e] lists the range indices whose trace is
// edge e (empty everywhere for abstract input).
struct Hypergraph {
    int num_vertices = 0;
    std::vector<std::vector<int>> edges;
    std::vector<std::vector<int>> provenance;

    int num_edges() const { return static_cast<int>(edges.size()); }
};

struct IntersectionGraph {
    int num_nodes = 0;
    std::vector<std::pair<int, int>> adjacency;   // i < j, lexicographic
    std::vector<std::vector<int>> neighbors;      // derived adjacency lists
};

struct BuildResult {
    Hypergraph hypergraph;
    int empty_traces_dropped = 0;
};

// Distinct nonempty traces {i : contains(F, p_i)} over all ranges, with
// provenance. Empty traces are dropped and counted.
BuildResult build_hypergraph(const GeometricInstance& instance);

// Canonicalizes and deduplicates; rejects empty edges and bad indices.
Hypergraph hypergraph_from_edges(int num_vertices, const std::vector<std::vector<int>>& edge_list);

IntersectionGraph intersection_graph(const Hypergraph& h);

// All edge indices sharing a vertex with edge e, including e itself.
std::vector<int> edges_intersecting(const Hypergraph& h, int e);

bool edges_share_vertex(const std::vector<int>& a, const std::vector<int>& b);

// Same vertex set, edges restricted to the complement of `remove`.
Hypergraph delete_edges(const Hypergraph& h, const std::vector<int>& remove);

}  // namespace rangehit
