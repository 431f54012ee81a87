#include "rangehit/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace rangehit {

namespace {

// find_small_edge restricted to the edges flagged alive, reusing one
// intersection graph across greedy_matching steps. Indices are original.
SmallEdgeReport small_edge_among(const IntersectionGraph& g, const std::vector<char>& alive,
                                 const GreedyOptions& opts, long long alive_count) {
    auto intersecting = [&](int e) {
        std::vector<int> set{e};
        for (int u : g.neighbors[e])
            if (alive[u]) set.push_back(u);
        std::sort(set.begin(), set.end());
        return set;
    };
    auto local_nu = [&](int e) {
        return static_cast<int>(max_independent_set(g.neighbors, intersecting(e), opts.node_budget).size());
    };

    SmallEdgeReport report;
    if (alive_count > opts.exact_small_edge_limit) {
        // Surrogate: fewest intersecting edges. The reported value is still
        // the exact local matching number of the chosen edge.
        long long pick_size = 0;
        for (int e = 0; e < g.num_nodes; ++e) {
            if (!alive[e]) continue;
            long long size = 1;
            for (int u : g.neighbors[e]) size += alive[u];
            if (report.edge_index < 0 || size < pick_size) {
                report.edge_index = e;
                pick_size = size;
            }
        }
        report.heuristic = true;
        report.local_matching_value = local_nu(report.edge_index);
        return report;
    }

    for (int e = 0; e < g.num_nodes; ++e) {
        if (!alive[e]) continue;
        int value = local_nu(e);
        if (report.edge_index < 0 || value < report.local_matching_value) {
            report.edge_index = e;
            report.local_matching_value = value;
        }
    }
    return report;
}

}  // namespace

SmallEdgeReport find_small_edge(const Hypergraph& h, const GreedyOptions& opts) {
    if (h.num_edges() == 0) throw std::invalid_argument("find_small_edge: no edges");
    IntersectionGraph g = intersection_graph(h);
    std::vector<char> alive(h.num_edges(), 1);
    return small_edge_among(g, alive, opts, h.num_edges());
}

Decomposition greedy_matching(const Hypergraph& h, const GreedyOptions& opts) {
    Decomposition d;
    IntersectionGraph g = intersection_graph(h);
    std::vector<char> alive(h.num_edges(), 1);
    long long alive_count = h.num_edges();
    while (alive_count > 0) {
        SmallEdgeReport report = small_edge_among(g, alive, opts, alive_count);
        std::vector<int> cls{report.edge_index};
        for (int u : g.neighbors[report.edge_index])
            if (alive[u]) cls.push_back(u);
        std::sort(cls.begin(), cls.end());
        for (int e : cls) alive[e] = 0;
        alive_count -= static_cast<long long>(cls.size());
        d.chosen.push_back(report.edge_index);
        d.classes.push_back(std::move(cls));
    }
    return d;
}

HittingSetResult hitting_from_decomposition(const Hypergraph& h, const Decomposition& d,
                                            const GreedyOptions& opts) {
    return hitting_from_decomposition_detailed(h, d, opts).combined;
}

ClassCoverDetail hitting_from_decomposition_detailed(const Hypergraph& h, const Decomposition& d,
                                                     const GreedyOptions& opts) {
    if (d.chosen.size() != d.classes.size())
        throw std::invalid_argument("decomposition: one chosen edge per class required");
    std::vector<char> seen(h.num_edges(), 0);
    int total = 0;
    for (std::size_t i = 0; i < d.classes.size(); ++i) {
        bool chosen_in_class = false;
        for (int e : d.classes[i]) {
            if (e < 0 || e >= h.num_edges() || seen[e])
                throw std::invalid_argument("decomposition: classes must partition the edges");
            seen[e] = 1;
            ++total;
            chosen_in_class = chosen_in_class || e == d.chosen[i];
        }
        if (!chosen_in_class) throw std::invalid_argument("decomposition: chosen edge outside its class");
    }
    if (total != h.num_edges()) throw std::invalid_argument("decomposition: classes must partition the edges");
    for (std::size_t i = 0; i < d.chosen.size(); ++i)
        for (std::size_t j = i + 1; j < d.chosen.size(); ++j)
            if (edges_share_vertex(h.edges[d.chosen[i]], h.edges[d.chosen[j]]))
                throw std::invalid_argument("decomposition: chosen edges must be disjoint");

    ClassCoverDetail detail;
    std::vector<char> in_union(h.num_vertices, 0);
    for (const auto& cls : d.classes) {
        Hypergraph sub;
        sub.num_vertices = h.num_vertices;
        for (int e : cls) sub.edges.push_back(h.edges[e]);
        sub.provenance.assign(sub.edges.size(), {});

        HittingSetResult part;
        bool exact = static_cast<int>(cls.size()) <= opts.exact_class_tau_limit;
        if (exact) {
            try {
                part = tau_exact(sub, opts.node_budget);
            } catch (const BudgetExceededError&) {
                exact = false;
                part = greedy_hitting_set(sub);
            }
        } else {
            part = greedy_hitting_set(sub);
        }
        for (int v : part.witness) in_union[v] = 1;
        detail.per_class.push_back(std::move(part));
        detail.exact.push_back(exact);
    }

    for (int v = 0; v < h.num_vertices; ++v)
        if (in_union[v]) detail.combined.witness.push_back(v);
    detail.combined.value = static_cast<int>(detail.combined.witness.size());
    if (!is_hitting_set(h, detail.combined.witness))
        throw std::logic_error("per-class union failed to hit all edges");
    return detail;
}

std::vector<int> epsilon_net(const Hypergraph& h, int total_points, const Rational& eps,
                             const GreedyOptions& opts) {
    if (eps <= 0 || eps > 1) throw std::invalid_argument("eps must lie in (0, 1]");
    if (total_points < 0) throw std::invalid_argument("negative point count");

    std::vector<int> light;
    const Rational threshold = eps * Rational(total_points);
    for (int e = 0; e < h.num_edges(); ++e)
        if (Rational(static_cast<int>(h.edges[e].size())) < threshold) light.push_back(e);
    Hypergraph heavy = delete_edges(h, light);
    if (heavy.num_edges() == 0) return {};

    Decomposition d = greedy_matching(heavy, opts);
    HittingSetResult cover = hitting_from_decomposition(heavy, d, opts);

    for (const auto& e : h.edges) {
        if (Rational(static_cast<int>(e.size())) < threshold) continue;
        bool hit = false;
        for (int v : e) hit = hit || std::binary_search(cover.witness.begin(), cover.witness.end(), v);
        if (!hit) throw std::logic_error("net missed a heavy edge");
    }
    return cover.witness;
}

}  // namespace rangehit
