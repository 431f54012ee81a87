#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "rangehit/gen.hpp"
#include "rangehit/solvers.hpp"

using namespace rangehit;

namespace {

void check_fractional_matching_feasible(const Hypergraph& h, const FractionalSolution& s) {
    REQUIRE(s.weights.size() == static_cast<std::size_t>(h.num_edges()));
    Rational total = 0;
    for (const Rational& w : s.weights) {
        CHECK(w >= 0);
        total += w;
    }
    CHECK(total == s.objective);
    std::vector<Rational> load(h.num_vertices, Rational(0));
    for (int e = 0; e < h.num_edges(); ++e)
        for (int v : h.edges[e]) load[v] += s.weights[e];
    for (const Rational& l : load) CHECK(l <= 1);
}

void check_fractional_cover_feasible(const Hypergraph& h, const FractionalSolution& s) {
    REQUIRE(s.weights.size() == static_cast<std::size_t>(h.num_vertices));
    Rational total = 0;
    for (const Rational& w : s.weights) {
        CHECK(w >= 0);
        total += w;
    }
    CHECK(total == s.objective);
    for (const auto& e : h.edges) {
        Rational got = 0;
        for (int v : e) got += s.weights[v];
        CHECK(got >= 1);
    }
}

}  // namespace

TEST_CASE("independent set on a path") {
    const std::vector<std::vector<int>> nb{{1}, {0, 2}, {1, 3}, {2}};
    CHECK(max_independent_set(nb, {0, 1, 2, 3}) == std::vector<int>{0, 2});
    CHECK(max_independent_set(nb, {1, 2, 3}) == std::vector<int>{1, 3});
    CHECK(max_independent_set(nb, {}).empty());
    CHECK(max_independent_set(nb, {2}) == std::vector<int>{2});
}

TEST_CASE("search budgets abort with node counts instead of lying") {
    const Hypergraph fano = gen_fano();
    try {
        nu_exact(fano, 1);
        FAIL("expected the matching search to exhaust its budget");
    } catch (const BudgetExceededError& e) {
        CHECK(e.nodes_explored == 2);
    }
    try {
        tau_exact(fano, 1);
        FAIL("expected the cover search to exhaust its budget");
    } catch (const BudgetExceededError& e) {
        CHECK(e.nodes_explored == 2);
    }
    CHECK(nu_exact(fano, 100000).value == 1);  // ample budget succeeds
}

TEST_CASE("projective-plane values") {
    const Hypergraph fano = gen_fano();
    const MatchingResult nu = nu_exact(fano);
    CHECK(nu.value == 1);
    CHECK(is_matching(fano, nu.witness));

    const HittingSetResult tau = tau_exact(fano);
    CHECK(tau.value == 3);
    CHECK(tau.witness == std::vector<int>{0, 1, 2});
    CHECK(is_hitting_set(fano, tau.witness));

    const FractionalSolution ns = nu_star(fano);
    const FractionalSolution ts = tau_star(fano);
    CHECK(ns.objective == make_rational(7, 3));
    CHECK(ts.objective == make_rational(7, 3));
    check_fractional_matching_feasible(fano, ns);
    check_fractional_cover_feasible(fano, ts);

    CHECK(greedy_hitting_set(fano).witness == std::vector<int>{0, 1, 2});
}

TEST_CASE("disjoint edges make every measure coincide") {
    const Hypergraph h = hypergraph_from_edges(3, {{0}, {1}, {2}});
    CHECK(nu_exact(h).value == 3);
    CHECK(nu_exact(h).witness == std::vector<int>{0, 1, 2});
    CHECK(tau_exact(h).value == 3);
    CHECK(nu_star(h).objective == 3);
    CHECK(tau_star(h).objective == 3);
}

TEST_CASE("exact search beats the greedy incumbent when a decoy dominates") {
    // Vertex 0 covers four edges but any cover through it still needs two
    // more picks; {1,2} covers everything.
    const Hypergraph h = hypergraph_from_edges(
        7, {{0, 1}, {0, 1, 3}, {0, 2}, {0, 2, 4}, {1, 5}, {2, 6}});
    const HittingSetResult greedy = greedy_hitting_set(h);
    CHECK(greedy.value == 3);
    CHECK(greedy.witness == std::vector<int>{0, 1, 2});
    const HittingSetResult exact = tau_exact(h);
    CHECK(exact.value == 2);
    CHECK(exact.witness == std::vector<int>{1, 2});
    CHECK(oracle::exhaustive_tau(h) == 2);
}

TEST_CASE("edgeless hypergraphs solve to zero everywhere") {
    Hypergraph h;
    h.num_vertices = 3;
    CHECK(nu_exact(h).value == 0);
    CHECK(tau_exact(h).value == 0);
    CHECK(tau_exact(h).witness.empty());
    CHECK(nu_star(h).objective == 0);
    CHECK(nu_star(h).weights.empty());
    const FractionalSolution ts = tau_star(h);
    CHECK(ts.objective == 0);
    CHECK(ts.weights == std::vector<Rational>(3, Rational(0)));
    CHECK(greedy_hitting_set(h).value == 0);
}

TEST_CASE("empty edges are rejected by cover solvers") {
    Hypergraph h;
    h.num_vertices = 2;
    h.edges = {{0}, {}};
    h.provenance = {{}, {}};
    CHECK_THROWS_AS(tau_exact(h), std::invalid_argument);
    CHECK_THROWS_AS(tau_star(h), std::invalid_argument);
    CHECK_THROWS_AS(greedy_hitting_set(h), std::invalid_argument);
}

TEST_CASE("definition-level verifiers reject junk") {
    const Hypergraph h = hypergraph_from_edges(4, {{0, 1}, {2, 3}, {1, 2}});
    CHECK(is_matching(h, {0, 1}));
    CHECK(is_matching(h, {}));
    CHECK(!is_matching(h, {0, 2}));   // share vertex 1
    CHECK(!is_matching(h, {0, 0}));   // duplicate
    CHECK(!is_matching(h, {0, 3}));   // out of range
    CHECK(is_hitting_set(h, {1, 2}));
    CHECK(is_hitting_set(h, {1, 3}));
    CHECK(!is_hitting_set(h, {0, 3}));  // {1,2} stays unhit
    CHECK(!is_hitting_set(h, {4}));
    CHECK(!is_hitting_set(h, {-1}));
}

TEST_CASE("branch-and-bound matches plain enumeration on random hypergraphs") {
    for (int t = 0; t < 40; ++t) {
        const Hypergraph h = gen_random_abstract(10, 8, 5000 + static_cast<std::uint64_t>(t));
        CAPTURE(t);
        const MatchingResult nu = nu_exact(h);
        const HittingSetResult tau = tau_exact(h);
        CHECK(nu.value == oracle::exhaustive_nu(h));
        CHECK(tau.value == oracle::exhaustive_tau(h));
        CHECK(is_matching(h, nu.witness));
        CHECK(is_hitting_set(h, tau.witness));

        const FractionalSolution ns = nu_star(h);
        const FractionalSolution ts = tau_star(h);
        CHECK(ns.objective == ts.objective);
        CHECK(Rational(nu.value) <= ns.objective);
        CHECK(ts.objective <= Rational(tau.value));
        check_fractional_matching_feasible(h, ns);
        check_fractional_cover_feasible(h, ts);
    }
}
