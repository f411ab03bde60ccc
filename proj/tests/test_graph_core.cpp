#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tfl/graph.hpp"

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

TEST_CASE("graph6 fixtures") {
    Graph k3 = parse_graph6("Bw");
    CHECK(k3.n() == 3);
    CHECK(k3.m() == 3);
    CHECK(write_graph6(k3) == "Bw");

    Graph two = parse_graph6("A?");
    CHECK(two.n() == 2);
    CHECK(two.m() == 0);

    Graph c5 = parse_graph6("Dhc");
    CHECK(c5.n() == 5);
    CHECK(c5.m() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    CHECK(c5.adjacent(0, 1));
    CHECK(c5.adjacent(3, 4));
    CHECK(c5.adjacent(0, 4));

    CHECK(write_graph6(Graph(0)) == "?");
    CHECK(write_graph6(generate(Family::cycle, 5)) == "Dhc");
    CHECK(write_graph6(generate(Family::complete, 3)) == "Bw");
}

TEST_CASE("graph6 errors carry byte offsets") {
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("Bw "), Graph6Error);  // space below offset 63
    CHECK_THROWS_AS(parse_graph6("Bww"), Graph6Error);  // payload too long
    CHECK_THROWS_AS(parse_graph6("B"), Graph6Error);    // payload too short
    CHECK_THROWS(write_graph6(Graph(63)));              // long form out of scope

    try {
        parse_graph6(std::string(1, char(20)) + "w");
    } catch (const Graph6Error& e) {
        CHECK(e.offset == 0);
    }
}

TEST_CASE("graph6 round-trip against independent encoder") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 300; ++iter) {
        int n = int(rng() % 13);
        Graph g = random_graph(rng, n, 0.4);
        std::string mine = write_graph6(g);
        CHECK(mine == oracle::encode_graph6(g));
        CHECK(parse_graph6(mine) == g);
    }
}

TEST_CASE("handshake on random graphs") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 100; ++iter) {
        Graph g = random_graph(rng, 1 + int(rng() % 20), 0.5);
        int sum = 0;
        for (int v = 0; v < g.n(); ++v) sum += g.degree(v);
        CHECK(sum == 2 * g.m());
    }
}

TEST_CASE("generators") {
    Graph c5 = generate(Family::cycle, 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    Graph p = generate(Family::petersen);
    CHECK(p.n() == 10);
    CHECK(p.m() == 15);
    for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
    CHECK(oracle::girth(p) == 5);

    Graph star = generate(Family::star, 3);
    CHECK(star.degree(0) == 3);
    for (int v = 1; v <= 3; ++v) CHECK(star.degree(v) == 1);

    Graph pmv = generate(Family::petersen_minus_vertex);
    CHECK(pmv.n() == 9);
    CHECK(pmv.m() == 12);

    CHECK_THROWS(generate(Family::cycle, 2));
    CHECK(parse_family("K3,3").m() == 9);
}

TEST_CASE("components_of") {
    Graph c5 = generate(Family::cycle, 5);
    auto parts = components_of(c5, c5.vertices() - VertexSet::single(0)).parts;
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].size() == 4);

    Graph star = generate(Family::star, 3);
    auto leaf_parts = components_of(star, star.vertices() - VertexSet::single(0)).parts;
    CHECK(leaf_parts.size() == 3);
    for (const auto& part : leaf_parts) CHECK(part.size() == 1);

    Graph p = generate(Family::petersen);
    CHECK(components_of(p, p.vertices()).parts.size() == 1);

    CHECK(components_of(c5, VertexSet()).parts.empty());
}

TEST_CASE("components partition the ground set with no cross edges") {
    std::mt19937 rng(3);
    for (int iter = 0; iter < 200; ++iter) {
        Graph g = random_graph(rng, 1 + int(rng() % 12), 0.3);
        VertexSet ground(rng() & VertexSet::full(g.n()).bits);
        auto parts = components_of(g, ground).parts;
        VertexSet un;
        for (const auto& p : parts) {
            CHECK((un & p).empty());
            un = un | p;
        }
        CHECK(un == ground);
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                CHECK(g.edges_between(parts[i], parts[j]) == 0);
    }
}
