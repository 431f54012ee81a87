#include "rangehit/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "rangehit/lp.hpp"
#include "rangehit/rng.hpp"

namespace rangehit {

Graph TwoIntersectionGraph::graph() const {
    Graph g;
    g.num_vertices = static_cast<int>(nodes.size());
    g.edges = adjacency;
    return g;
}

TwoIntersectionGraph two_intersection_graph(const Hypergraph& h, const std::vector<int>& matching) {
    if (!is_matching(h, matching)) throw std::invalid_argument("two_intersection_graph: not a matching");
    TwoIntersectionGraph g;
    g.nodes = matching;
    const int b = static_cast<int>(matching.size());
    for (int i = 0; i < b; ++i)
        for (int j = i + 1; j < b; ++j) {
            for (int f = 0; f < h.num_edges(); ++f) {
                if (!edges_share_vertex(h.edges[f], h.edges[matching[i]]) ||
                    !edges_share_vertex(h.edges[f], h.edges[matching[j]]))
                    continue;
                bool touches_other = false;
                for (int k = 0; k < b && !touches_other; ++k)
                    if (k != i && k != j)
                        touches_other = edges_share_vertex(h.edges[f], h.edges[matching[k]]);
                if (touches_other) continue;
                g.adjacency.emplace_back(i, j);
                g.witnesses.push_back(f);
                break;
            }
        }
    return g;
}

PlanarityPropertyReport check_planarity_property(
    const GeometricInstance& instance, const std::optional<std::vector<int>>& matching_override,
    long long node_budget) {
    if (instance.dim != 2 && instance.dim != 3)
        throw std::invalid_argument("planarity property: only R2 and R3 instances qualify");
    PlanarityPropertyReport report;
    const Hypergraph h = build_hypergraph(instance).hypergraph;
    report.matching = matching_override ? *matching_override : nu_exact(h, node_budget).witness;
    report.two_graph = two_intersection_graph(h, report.matching);
    report.certificate = is_planar(report.two_graph.graph());
    report.certificate_verified = verify_planarity_certificate(report.two_graph.graph(), report.certificate);
    report.planar = report.certificate.planar;
    return report;
}

std::vector<int> random_maximal_matching(const Hypergraph& h, std::uint64_t seed) {
    std::vector<int> order(h.num_edges());
    for (int e = 0; e < h.num_edges(); ++e) order[e] = e;
    Rng rng(seed);
    rng.shuffle(order);
    std::vector<int> taken;
    for (int e : order) {
        bool clash = false;
        for (int t : taken) clash = clash || edges_share_vertex(h.edges[e], h.edges[t]);
        if (!clash) taken.push_back(e);
    }
    std::sort(taken.begin(), taken.end());
    return taken;
}

namespace {

// Feasibility of: exists n in R^3, c with <n, inside_k> - c >= 1 (k = 1, 2)
// and <n, out_k> - c <= -1 (k = 1..4). Free variables split into differences
// of nonnegative parts: n = a - b, c = cp - cm.
bool margin_separable(const std::vector<const Point*>& inside, const std::vector<const Point*>& outside) {
    lp::Problem p;
    p.num_vars = 8;
    p.sense = lp::Sense::Minimize;
    p.objective.assign(8, Rational(0));
    auto add = [&](const Point& pt, bool in) {
        lp::Constraint c;
        c.coeffs.resize(8);
        for (int k = 0; k < 3; ++k) {
            c.coeffs[k] = pt.coords[k];
            c.coeffs[3 + k] = -pt.coords[k];
        }
        c.coeffs[6] = -1;
        c.coeffs[7] = 1;
        c.rel = in ? lp::Relation::GreaterEq : lp::Relation::LessEq;
        c.rhs = in ? 1 : -1;
        p.constraints.push_back(std::move(c));
    };
    for (const Point* pt : inside) add(*pt, true);
    for (const Point* pt : outside) add(*pt, false);
    return lp::feasible(p);
}

}  // namespace

K33SeparationReport check_k33_separations(const std::vector<Point>& points, bool allow_degenerate) {
    if (points.size() != 6) throw std::invalid_argument("six points required");
    for (const Point& p : points)
        if (p.dim() != 3) throw std::invalid_argument("points must lie in R^3");
    if (!allow_degenerate && !general_position_3d(points))
        throw std::invalid_argument("degenerate position rejected");

    K33SeparationReport report;
    report.all_nine = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            std::vector<const Point*> inside{&points[i], &points[3 + j]};
            std::vector<const Point*> outside;
            for (int k = 0; k < 6; ++k)
                if (k != i && k != 3 + j) outside.push_back(&points[k]);
            const bool ok = margin_separable(inside, outside);
            report.feasible[i][j] = ok;
            if (ok)
                report.feasible_pairs.emplace_back(i, j);
            else
                report.all_nine = false;
        }
    return report;
}

DualityReport check_duality_chain(const Hypergraph& h, long long node_budget) {
    DualityReport r;
    r.nu = nu_exact(h, node_budget);
    r.nu_star_sol = nu_star(h);
    r.tau_star_sol = tau_star(h);
    r.tau = tau_exact(h, node_budget);
    r.star_equal = r.nu_star_sol.objective == r.tau_star_sol.objective;
    r.chain_holds = r.star_equal && Rational(r.nu.value) <= r.nu_star_sol.objective &&
                    r.tau_star_sol.objective <= Rational(r.tau.value);
    return r;
}

HellyStat fractional_helly_stat(const Hypergraph& h) {
    const int m = h.num_edges();
    if (m == 0) throw std::invalid_argument("statistic needs at least one edge");
    HellyStat stat{Rational(0), Rational(0)};
    if (m >= 2) {
        long long meeting = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) meeting += edges_share_vertex(h.edges[i], h.edges[j]);
        stat.alpha = Rational(meeting) / (Rational(m) * Rational(m - 1) / 2);
    }
    std::vector<int> degree(h.num_vertices, 0);
    int max_degree = 0;
    for (const auto& e : h.edges)
        for (int v : e) max_degree = std::max(max_degree, ++degree[v]);
    stat.beta = Rational(max_degree) / Rational(m);
    return stat;
}

}  // namespace rangehit
