#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "rangehit/hardness.hpp"
#include "rangehit/solvers.hpp"

using namespace rangehit;

TEST_CASE("max_vertex_degree") {
    CHECK(max_vertex_degree(hypergraph_from_edges(3, {{0, 1}, {0, 2}, {0}})) == 3);
    CHECK(max_vertex_degree(Hypergraph{2, {}, {}}) == 0);
}

TEST_CASE("star hypergraph shapes") {
    CHECK_THROWS_AS(star_hypergraph(1), std::invalid_argument);

    // n = 2: both stars trace to the single pair and collapse to one edge.
    const BoundedDegreeHypergraph two = star_hypergraph(2);
    CHECK(two.base.num_vertices == 1);
    CHECK(two.base.num_edges() == 1);
    CHECK(two.max_degree == 1);

    const BoundedDegreeHypergraph three = star_hypergraph(3);
    CHECK(three.base.num_vertices == 3);
    REQUIRE(three.base.num_edges() == 3);
    CHECK(three.base.edges[0] == std::vector<int>{0, 1});
    CHECK(three.base.edges[1] == std::vector<int>{0, 2});
    CHECK(three.base.edges[2] == std::vector<int>{1, 2});
    CHECK(three.max_degree == 2);

    const BoundedDegreeHypergraph five = star_hypergraph(5);
    CHECK(five.base.num_vertices == 10);
    CHECK(five.base.num_edges() == 5);
    for (const auto& e : five.base.edges) CHECK(e.size() == 4);
    CHECK(five.max_degree == 2);  // every pair belongs to exactly two stars
}

TEST_CASE("single-incidence realization, fully by hand") {
    // One vertex in one edge: Q(x) = (x - 5/4)(x - 3/4) = x^2 - 2x + 15/16,
    // so the realized point is (32/15, -16/15) and the incidence value 16/15.
    const Hypergraph h = hypergraph_from_edges(1, {{0}});
    const Embedding emb = embed({h, 1});
    CHECK(emb.dim == 2);
    REQUIRE(emb.points.size() == 1);
    CHECK(emb.points[0].coords ==
          std::vector<Rational>{make_rational(32, 15), make_rational(-16, 15)});
    REQUIRE(emb.coefficients.size() == 1);
    CHECK(emb.coefficients[0] ==
          std::vector<Rational>{Rational(-1), make_rational(32, 15), make_rational(-16, 15)});
    REQUIRE(emb.halfspaces.size() == 1);
    CHECK(emb.halfspaces[0].normal == std::vector<Rational>{Rational(1), Rational(1)});
    CHECK(emb.halfspaces[0].offset == 1);
    REQUIRE(emb.certificates.size() == 1);
    CHECK(emb.certificates[0] == std::vector<Rational>{make_rational(16, 15)});
}

TEST_CASE("embedding input validation") {
    const Hypergraph none = hypergraph_from_edges(2, {});
    CHECK_THROWS_AS(embed({none, 0}), std::invalid_argument);
    const Hypergraph h = hypergraph_from_edges(2, {{0, 1}});
    CHECK_THROWS_AS(embed({h, 2}), std::invalid_argument);  // declared degree is wrong
}

TEST_CASE("certificates separate members from non-members with a real margin") {
    for (int n = 2; n <= 9; ++n) {
        CAPTURE(n);
        const BoundedDegreeHypergraph star = star_hypergraph(n);
        const Embedding emb = embed(star);
        CHECK(emb.dim == 2 * star.max_degree);
        const int m = star.base.num_edges();
        REQUIRE(static_cast<int>(emb.halfspaces.size()) == m);
        for (int v = 0; v < star.base.num_vertices; ++v) {
            REQUIRE(static_cast<int>(emb.certificates[v].size()) == m);
            CHECK(emb.coefficients[v][0] == -1);
            for (int i = 0; i < m; ++i) {
                const Rational& value = emb.certificates[v][i];
                const bool member = std::binary_search(star.base.edges[i].begin(),
                                                       star.base.edges[i].end(), v);
                CHECK(value != 1);
                CHECK(member == (value > 1));
                // The certificate is the actual inner product, re-derived here.
                CHECK(value == dot(emb.points[v].coords, emb.halfspaces[i].normal));
            }
        }
    }
}

TEST_CASE("packaged instances rebuild their own combinatorics") {
    for (int n : {3, 4, 5}) {
        CAPTURE(n);
        const GeometricInstance inst = hard_instance_r4(n);
        CHECK(inst.dim == 4);
        CHECK(static_cast<int>(inst.points.size()) == n * (n - 1) / 2);
        CHECK(static_cast<int>(inst.ranges.size()) == n);
        const Hypergraph rebuilt = build_hypergraph(inst).hypergraph;
        const BoundedDegreeHypergraph star = star_hypergraph(n);
        CHECK(rebuilt.edges == star.base.edges);
        CHECK(rebuilt.num_vertices == star.base.num_vertices);
    }
}

TEST_CASE("gap family: matchings stay at one while covers grow") {
    // Any two stars share the pair of their centers, so no two edges are
    // disjoint; covering needs one chosen pair per leftover center.
    const Hypergraph star9 = star_hypergraph(9).base;
    CHECK(nu_exact(star9).value == 1);
    CHECK(tau_exact(star9).value == 5);
    CHECK(oracle::exhaustive_nu(star9) == 1);
    CHECK(oracle::exhaustive_tau_by_size(star9, 6) == 5);
    CHECK(nu_star(star9).objective == make_rational(9, 2));
    CHECK(tau_star(star9).objective == make_rational(9, 2));

    const Hypergraph star5 = star_hypergraph(5).base;
    CHECK(nu_exact(star5).value == 1);
    CHECK(tau_exact(star5).value == 3);
    CHECK(nu_star(star5).objective == make_rational(5, 2));

    const Hypergraph star4 = star_hypergraph(4).base;
    CHECK(tau_exact(star4).value == 2);
    CHECK(nu_star(star4).objective == 2);
}
