#include "rangehit/hardness.hpp"

#include <algorithm>
#include <stdexcept>

namespace rangehit {

namespace {

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

int max_vertex_degree(const Hypergraph& h) {
    std::vector<int> degree(h.num_vertices, 0);
    for (const auto& e : h.edges)
        for (int v : e) ++degree[v];
    int d = 0;
    for (int v : degree) d = std::max(d, v);
    return d;
}

BoundedDegreeHypergraph star_hypergraph(int n) {
    if (n < 2) throw std::invalid_argument("star_hypergraph: n >= 2 required");
    std::vector<std::vector<int>> stars(n);
    int pairs = 0;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            stars[a - 1].push_back(pairs);
            stars[b - 1].push_back(pairs);
            ++pairs;
        }
    BoundedDegreeHypergraph out;
    out.base = hypergraph_from_edges(pairs, stars);
    out.max_degree = max_vertex_degree(out.base);
    return out;
}

Embedding embed(const BoundedDegreeHypergraph& h) {
    const Hypergraph& base = h.base;
    const int m = base.num_edges();
    if (m == 0) throw std::invalid_argument("embed: at least one edge required");
    if (h.max_degree != max_vertex_degree(base))
        throw std::invalid_argument("embed: max_degree does not match the hypergraph");
    const int dim = 2 * h.max_degree;

    Embedding out;
    out.dim = dim;
    for (int i = 1; i <= m; ++i) {
        std::vector<Rational> normal(dim);
        Rational power = 1;
        for (int k = 0; k < dim; ++k) {
            power *= i;
            normal[k] = power;
        }
        out.halfspaces.emplace_back(std::move(normal), Rational(1));
    }

    std::vector<std::vector<int>> incident(base.num_vertices);  // 1-based edge ids
    for (int e = 0; e < m; ++e)
        for (int v : base.edges[e]) incident[v].push_back(e + 1);

    for (int v = 0; v < base.num_vertices; ++v) {
        std::vector<Rational> q{Rational(1)};
        for (int i : incident[v]) {
            // (x - (i + 1/4))(x - (i - 1/4)) = x^2 - 2i x + (i^2 - 1/16)
            const std::vector<Rational> factor{Rational(i) * Rational(i) - make_rational(1, 16),
                                               Rational(-2 * i), Rational(1)};
            q = poly_mul(q, factor);
        }
        const Rational q0 = q[0];  // Q_v(0) > 0 since every factor i^2 - 1/16 > 0
        std::vector<Rational> p(dim + 1, Rational(0));
        for (std::size_t k = 0; k < q.size(); ++k) p[k] = -q[k] / q0;
        if (p[0] != -1) throw std::logic_error("embed: constant coefficient must be -1");
        out.points.emplace_back(std::vector<Rational>(p.begin() + 1, p.end()));
        out.coefficients.push_back(std::move(p));
    }

    out.certificates.assign(base.num_vertices, {});
    for (int v = 0; v < base.num_vertices; ++v) {
        for (int i = 1; i <= m; ++i) {
            Rational value = dot(out.points[v].coords, out.halfspaces[i - 1].normal);
            const auto& edge = base.edges[i - 1];
            const bool member = std::binary_search(edge.begin(), edge.end(), v);
            if (value == 1 || member != (value > 1))
                throw std::logic_error("embed: incidence certificate violated");
            out.certificates[v].push_back(std::move(value));
        }
    }
    return out;
}

GeometricInstance hard_instance_r4(int n) {
    Embedding emb = embed(star_hypergraph(n));
    std::vector<Range> ranges(emb.halfspaces.begin(), emb.halfspaces.end());
    return GeometricInstance(emb.dim, std::move(emb.points), std::move(ranges));
}

}  // namespace rangehit
