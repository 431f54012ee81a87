#include "rangehit/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rangehit {

BuildResult build_hypergraph(const GeometricInstance& instance) {
    BuildResult out;
    out.hypergraph.num_vertices = static_cast<int>(instance.points.size());
    std::map<std::vector<int>, int> seen;  // trace -> edge index
    for (int ri = 0; ri < static_cast<int>(instance.ranges.size()); ++ri) {
        std::vector<int> trace;
        for (int pi = 0; pi < static_cast<int>(instance.points.size()); ++pi)
            if (contains(instance.ranges[ri], instance.points[pi])) trace.push_back(pi);
        if (trace.empty()) {
            ++out.empty_traces_dropped;
            continue;
        }
        auto [it, inserted] = seen.try_emplace(std::move(trace), out.hypergraph.num_edges());
        if (inserted) {
            out.hypergraph.edges.push_back(it->first);
            out.hypergraph.provenance.emplace_back();
        }
        out.hypergraph.provenance[it->second].push_back(ri);
    }
    return out;
}

Hypergraph hypergraph_from_edges(int num_vertices, const std::vector<std::vector<int>>& edge_list) {
    if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
    Hypergraph h;
    h.num_vertices = num_vertices;
    std::map<std::vector<int>, int> seen;
    for (const auto& raw : edge_list) {
        if (raw.empty()) throw std::invalid_argument("empty edge rejected");
        std::vector<int> e = raw;
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (e.front() < 0 || e.back() >= num_vertices) throw std::invalid_argument("vertex index out of range");
        auto [it, inserted] = seen.try_emplace(std::move(e), h.num_edges());
        if (inserted) {
            h.edges.push_back(it->first);
            h.provenance.emplace_back();
        }
    }
    return h;
}

bool edges_share_vertex(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return false;
}

IntersectionGraph intersection_graph(const Hypergraph& h) {
    IntersectionGraph g;
    g.num_nodes = h.num_edges();
    g.neighbors.assign(g.num_nodes, {});
    for (int i = 0; i < g.num_nodes; ++i)
        for (int j = i + 1; j < g.num_nodes; ++j)
            if (edges_share_vertex(h.edges[i], h.edges[j])) {
                g.adjacency.emplace_back(i, j);
                g.neighbors[i].push_back(j);
                g.neighbors[j].push_back(i);
            }
    return g;
}

std::vector<int> edges_intersecting(const Hypergraph& h, int e) {
    if (e < 0 || e >= h.num_edges()) throw std::out_of_range("edge index out of range");
    std::vector<int> out;
    for (int j = 0; j < h.num_edges(); ++j)
        if (j == e || edges_share_vertex(h.edges[e], h.edges[j])) out.push_back(j);
    return out;
}

Hypergraph delete_edges(const Hypergraph& h, const std::vector<int>& remove) {
    std::vector<char> dead(h.num_edges(), 0);
    for (int e : remove) {
        if (e < 0 || e >= h.num_edges()) throw std::out_of_range("edge index out of range");
        dead[e] = 1;
    }
    Hypergraph out;
    out.num_vertices = h.num_vertices;
    for (int e = 0; e < h.num_edges(); ++e) {
        if (dead[e]) continue;
        out.edges.push_back(h.edges[e]);
        out.provenance.push_back(h.provenance[e]);
    }
    return out;
}

}  // namespace rangehit
