#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tfl/edge_coloring.hpp"
#include "tfl/enumerate.hpp"

using namespace tfl;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution edge(p);
    Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (edge(rng)) g = g.with_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("vizing_color is proper with at most max_degree+1 colors") {
    std::mt19937 rng(101);
    for (int iter = 0; iter < 120; ++iter) {
        int n = 2 + int(rng() % 49);  // up to 50 vertices
        Graph g = random_graph(rng, n, 0.15 + 0.5 * (rng() % 3));
        EdgeColoring col = vizing_color(g);
        CHECK(col.is_proper(g));
        CHECK(col.max_color_used() <= g.max_degree() + 1);
    }
    for (Family f : {Family::petersen, Family::petersen_minus_vertex}) {
        Graph g = generate(f);
        EdgeColoring col = vizing_color(g);
        CHECK(col.is_proper(g));
        CHECK(col.max_color_used() <= g.max_degree() + 1);
    }
}

TEST_CASE("chromatic_index fixtures") {
    auto chi = [](const Graph& g) {
        auto r = chromatic_index(g);
        REQUIRE(r.status == Decision::decided);
        CHECK(r.witness.is_proper(g));
        CHECK(r.witness.max_color_used() <= r.value);
        return r.value;
    };
    CHECK(chi(generate(Family::complete, 4)) == 3);
    CHECK(chi(generate(Family::cycle, 5)) == 3);       // odd cycle, class two
    CHECK(chi(generate(Family::cycle, 6)) == 2);
    CHECK(chi(generate(Family::complete, 3)) == 3);
    CHECK(chi(generate(Family::petersen)) == 4);       // class two, Delta = 3
    CHECK(chi(generate(Family::star, 5)) == 5);
    CHECK(chromatic_index(Graph(3)).value == 0);
}

TEST_CASE("chromatic_index agrees with plain backtracking oracle") {
    std::mt19937 rng(202);
    for (int iter = 0; iter < 150; ++iter) {
        Graph g = random_graph(rng, 1 + int(rng() % 7), 0.5);
        auto r = chromatic_index(g);
        REQUIRE(r.status == Decision::decided);
        CHECK(r.value == oracle::chi_prime(g));
    }
}

TEST_CASE("chromatic_index reports undecided when the budget is tiny") {
    Graph p = generate(Family::petersen);
    auto r = chromatic_index(p, Budget(5));
    CHECK(r.status == Decision::undecided);
    // the constructive witness is still a valid upper bound
    CHECK(r.witness.is_proper(p));
    CHECK(r.witness.max_color_used() <= p.max_degree() + 1);
}

TEST_CASE("is_delta_critical fixtures") {
    auto c5 = is_delta_critical(generate(Family::cycle, 5));
    CHECK(c5.status == Decision::decided);
    CHECK(c5.is_class_two);
    CHECK(c5.is_critical);

    auto k4 = is_delta_critical(generate(Family::complete, 4));
    CHECK(k4.status == Decision::decided);
    CHECK_FALSE(k4.is_class_two);   // class one, so not critical
    CHECK_FALSE(k4.is_critical);

    auto pmv = is_delta_critical(generate(Family::petersen_minus_vertex));
    CHECK(pmv.status == Decision::decided);
    CHECK(pmv.is_class_two);
    CHECK(pmv.is_critical);

    auto pet = is_delta_critical(generate(Family::petersen));
    CHECK(pet.status == Decision::decided);
    CHECK(pet.is_class_two);
    CHECK_FALSE(pet.is_critical);
    REQUIRE(pet.witness_edge.has_value());
    // deleting the witness edge must leave a class-two graph with same Delta
    auto [wu, wv] = *pet.witness_edge;
    Graph minus = generate(Family::petersen).without_edge(wu, wv);
    CHECK(minus.max_degree() == 3);
    CHECK(oracle::chi_prime(minus) == 4);
}

TEST_CASE("criticality implies class two and edge-deletion drop, exhaustively at n<=6") {
    for (const Graph& g : enumerate_small(6, /*connected=*/true)) {
        auto rep = is_delta_critical(g);
        REQUIRE(rep.status == Decision::decided);
        int delta = g.max_degree();
        CHECK(rep.is_class_two == (oracle::chi_prime(g) == delta + 1));
        if (rep.is_critical) {
            CHECK(rep.is_class_two);
            for (auto [u, v] : g.edges())
                CHECK(oracle::chi_prime(g.without_edge(u, v)) <= delta);
        } else if (rep.is_class_two && rep.witness_edge) {
            auto [u, v] = *rep.witness_edge;
            CHECK(oracle::chi_prime(g.without_edge(u, v)) == delta + 1);
        }
    }
}

TEST_CASE("verify_val on critical graphs") {
    CHECK(verify_val(generate(Family::cycle, 5)).pass);
    CHECK(verify_val(generate(Family::complete, 3)).pass);
    CHECK(verify_val(generate(Family::petersen_minus_vertex)).pass);

    // rows carry the required/actual counts for every ordered adjacent pair
    auto rep = verify_val(generate(Family::cycle, 5));
    CHECK(rep.rows.size() == 10);
    for (const auto& row : rep.rows) {
        CHECK(row.required == 1);  // Delta - d(y) + 1 = 2 - 2 + 1
        CHECK(row.actual == 1);    // the neighbor other than y, degree 2 = Delta
    }
}

TEST_CASE("verify_lemma_bipartite_bound") {
    // C5 with T = {0, 2}: independent, bound must hold on a critical graph.
    Graph c5 = generate(Family::cycle, 5);
    VertexSet t;
    t.add(0);
    t.add(2);
    auto rep = verify_lemma_bipartite_bound(c5, t);
    CHECK(rep.pass);
    CHECK(rep.rows.size() == 4);  // each T vertex has two S-neighbors

    // non-independent T is a precondition violation
    VertexSet bad;
    bad.add(0);
    bad.add(1);
    CHECK_THROWS_AS(verify_lemma_bipartite_bound(c5, bad), std::invalid_argument);

    Graph pmv = generate(Family::petersen_minus_vertex);
    VertexSet t2;
    t2.add(0);
    t2.add(2);
    t2.add(6);
    REQUIRE(pmv.is_independent(t2));
    CHECK(verify_lemma_bipartite_bound(pmv, t2).pass);
}
