#include "rangehit/solvers.hpp"

#include <algorithm>

#include "rangehit/lp.hpp"

namespace rangehit {

namespace {

struct MisSearch {
    const std::vector<std::vector<int>>& neighbors;
    long long budget;
    long long nodes = 0;
    std::vector<int> best;
    std::vector<int> current;
    std::vector<char> in_cand;

    void recurse(const std::vector<int>& candidates) {
        if (++nodes > budget) throw BudgetExceededError("independent-set search budget exhausted", nodes);
        if (current.size() > best.size()) best = current;
        if (candidates.empty()) return;
        if (current.size() + candidates.size() <= best.size()) return;

        for (int v : candidates) in_cand[v] = 1;
        int pick = -1, pick_deg = 0;
        for (int v : candidates) {
            int deg = 0;
            for (int u : neighbors[v]) deg += in_cand[u];
            if (pick < 0 || deg < pick_deg) {
                pick = v;
                pick_deg = deg;
            }
            if (pick_deg == 0) break;  // cannot do better; v is forced in
        }
        for (int v : candidates) in_cand[v] = 0;

        std::vector<int> rest;
        rest.reserve(candidates.size());

        // Include pick.
        for (int v : candidates)
            if (v != pick && !std::binary_search(neighbors[pick].begin(), neighbors[pick].end(), v))
                rest.push_back(v);
        current.push_back(pick);
        recurse(rest);
        current.pop_back();

        // Exclude pick — pointless when pick has no candidate neighbors.
        if (pick_deg == 0) return;
        rest.clear();
        for (int v : candidates)
            if (v != pick) rest.push_back(v);
        recurse(rest);
    }
};

struct TauSearch {
    const Hypergraph& h;
    const std::vector<std::vector<int>>& vertex_edges;
    long long budget;
    long long nodes = 0;
    std::vector<int> best;
    std::vector<int> current;
    std::vector<char> forbidden;
    std::vector<int> cover_count;  // per edge: chosen vertices hitting it

    // Pairwise-disjoint uncovered edges each need their own vertex.
    int disjoint_lower_bound(const std::vector<int>& uncovered) const {
        std::vector<char> used(h.num_vertices, 0);
        int count = 0;
        for (int e : uncovered) {
            bool free = true;
            for (int v : h.edges[e])
                if (used[v]) {
                    free = false;
                    break;
                }
            if (!free) continue;
            ++count;
            for (int v : h.edges[e]) used[v] = 1;
        }
        return count;
    }

    void recurse() {
        if (++nodes > budget) throw BudgetExceededError("hitting-set search budget exhausted", nodes);

        std::vector<int> uncovered;
        for (int e = 0; e < h.num_edges(); ++e)
            if (cover_count[e] == 0) uncovered.push_back(e);
        if (uncovered.empty()) {
            if (current.size() < best.size()) best = current;
            return;
        }
        if (current.size() + static_cast<std::size_t>(disjoint_lower_bound(uncovered)) >= best.size()) return;

        // Branch on the uncovered edge with fewest usable vertices.
        int branch = -1;
        std::size_t branch_avail = 0;
        for (int e : uncovered) {
            std::size_t avail = 0;
            for (int v : h.edges[e]) avail += !forbidden[v];
            if (branch < 0 || avail < branch_avail) {
                branch = e;
                branch_avail = avail;
            }
        }
        if (branch_avail == 0) return;  // every hitter of this edge is barred

        std::vector<int> options;
        for (int v : h.edges[branch])
            if (!forbidden[v]) options.push_back(v);
        // Highest coverage of uncovered edges first, ties by lowest index.
        std::vector<int> coverage(options.size(), 0);
        std::vector<char> is_uncovered(h.num_edges(), 0);
        for (int e : uncovered) is_uncovered[e] = 1;
        for (std::size_t i = 0; i < options.size(); ++i)
            for (int e : vertex_edges[options[i]]) coverage[i] += is_uncovered[e];
        std::vector<std::size_t> order(options.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return coverage[a] > coverage[b]; });

        std::vector<int> tried;
        for (std::size_t oi : order) {
            int v = options[oi];
            current.push_back(v);
            for (int e : vertex_edges[v]) ++cover_count[e];
            recurse();
            for (int e : vertex_edges[v]) --cover_count[e];
            current.pop_back();
            forbidden[v] = 1;  // later siblings must hit `branch` differently
            tried.push_back(v);
        }
        for (int v : tried) forbidden[v] = 0;
    }
};

std::vector<std::vector<int>> incidence_lists(const Hypergraph& h) {
    std::vector<std::vector<int>> vertex_edges(h.num_vertices);
    for (int e = 0; e < h.num_edges(); ++e)
        for (int v : h.edges[e]) vertex_edges[v].push_back(e);
    return vertex_edges;
}

void reject_empty_edges(const Hypergraph& h) {
    for (const auto& e : h.edges)
        if (e.empty()) throw std::invalid_argument("empty edge cannot be hit");
}

}  // namespace

std::vector<int> max_independent_set(const std::vector<std::vector<int>>& neighbors,
                                     std::vector<int> candidates, long long node_budget) {
    std::sort(candidates.begin(), candidates.end());
    MisSearch search{neighbors, node_budget};
    search.in_cand.assign(neighbors.size(), 0);
    search.recurse(candidates);
    std::sort(search.best.begin(), search.best.end());
    return search.best;
}

MatchingResult nu_exact(const Hypergraph& h, long long node_budget) {
    IntersectionGraph g = intersection_graph(h);
    for (auto& adj : g.neighbors) std::sort(adj.begin(), adj.end());
    std::vector<int> all(g.num_nodes);
    for (int i = 0; i < g.num_nodes; ++i) all[i] = i;
    MatchingResult res;
    res.witness = max_independent_set(g.neighbors, all, node_budget);
    res.value = static_cast<int>(res.witness.size());
    return res;
}

HittingSetResult tau_exact(const Hypergraph& h, long long node_budget) {
    reject_empty_edges(h);
    if (h.num_edges() == 0) return {};
    const auto vertex_edges = incidence_lists(h);
    TauSearch search{h, vertex_edges, node_budget};
    search.best = greedy_hitting_set(h).witness;
    search.forbidden.assign(h.num_vertices, 0);
    search.cover_count.assign(h.num_edges(), 0);
    search.recurse();
    std::sort(search.best.begin(), search.best.end());
    return {static_cast<int>(search.best.size()), std::move(search.best)};
}

FractionalSolution nu_star(const Hypergraph& h) {
    const int m = h.num_edges();
    if (m == 0) return {Rational(0), {}};
    lp::Problem p;
    p.num_vars = m;
    p.sense = lp::Sense::Maximize;
    p.objective.assign(m, Rational(1));
    for (const auto& incident : incidence_lists(h)) {
        if (incident.empty()) continue;
        lp::Constraint c;
        c.coeffs.assign(m, Rational(0));
        for (int e : incident) c.coeffs[e] = 1;
        c.rel = lp::Relation::LessEq;
        c.rhs = 1;
        p.constraints.push_back(std::move(c));
    }
    lp::Result r = lp::solve(p);
    if (r.status != lp::Status::Optimal) throw std::logic_error("packing LP must have an optimum");
    return {r.objective, r.solution};
}

FractionalSolution tau_star(const Hypergraph& h) {
    reject_empty_edges(h);
    const int n = h.num_vertices;
    if (h.num_edges() == 0) return {Rational(0), std::vector<Rational>(n, Rational(0))};
    lp::Problem p;
    p.num_vars = n;
    p.sense = lp::Sense::Minimize;
    p.objective.assign(n, Rational(1));
    for (const auto& e : h.edges) {
        lp::Constraint c;
        c.coeffs.assign(n, Rational(0));
        for (int v : e) c.coeffs[v] = 1;
        c.rel = lp::Relation::GreaterEq;
        c.rhs = 1;
        p.constraints.push_back(std::move(c));
    }
    lp::Result r = lp::solve(p);
    if (r.status != lp::Status::Optimal) throw std::logic_error("covering LP must have an optimum");
    return {r.objective, r.solution};
}

HittingSetResult greedy_hitting_set(const Hypergraph& h) {
    reject_empty_edges(h);
    const auto vertex_edges = incidence_lists(h);
    std::vector<char> covered(h.num_edges(), 0);
    int remaining = h.num_edges();
    HittingSetResult res;
    while (remaining > 0) {
        int pick = -1, pick_cov = 0;
        for (int v = 0; v < h.num_vertices; ++v) {
            int cov = 0;
            for (int e : vertex_edges[v]) cov += !covered[e];
            if (cov > pick_cov) {
                pick = v;
                pick_cov = cov;
            }
        }
        if (pick < 0) throw std::logic_error("uncoverable edge in greedy cover");
        res.witness.push_back(pick);
        for (int e : vertex_edges[pick])
            if (!covered[e]) {
                covered[e] = 1;
                --remaining;
            }
    }
    std::sort(res.witness.begin(), res.witness.end());
    res.value = static_cast<int>(res.witness.size());
    return res;
}

bool is_matching(const Hypergraph& h, const std::vector<int>& edge_indices) {
    for (int e : edge_indices)
        if (e < 0 || e >= h.num_edges()) return false;
    for (std::size_t i = 0; i < edge_indices.size(); ++i)
        for (std::size_t j = i + 1; j < edge_indices.size(); ++j) {
            if (edge_indices[i] == edge_indices[j]) return false;
            if (edges_share_vertex(h.edges[edge_indices[i]], h.edges[edge_indices[j]])) return false;
        }
    return true;
}

bool is_hitting_set(const Hypergraph& h, const std::vector<int>& vertices) {
    for (int v : vertices)
        if (v < 0 || v >= h.num_vertices) return false;
    std::vector<char> chosen(h.num_vertices, 0);
    for (int v : vertices) chosen[v] = 1;
    for (const auto& e : h.edges) {
        bool hit = false;
        for (int v : e) hit = hit || chosen[v];
        if (!hit) return false;
    }
    return true;
}

}  // namespace rangehit
