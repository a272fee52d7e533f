#include "doctest.h"

#include <stdexcept>

#include <map>
#include <random>

#include "cbo/families.hpp"
#include "cbo/graph.hpp"

using namespace cbo;

TEST_CASE("triangular grid counting") {
    CHECK(triangular_grid(1).num_vertices() == 1);
    CHECK(triangular_grid(1).num_edges() == 0);
    CHECK(triangular_grid(2).num_vertices() == 3);
    CHECK(triangular_grid(2).num_edges() == 3);
    CHECK(triangular_grid(4).num_vertices() == 10);
    CHECK(triangular_grid(4).num_edges() == 18);
    CHECK_THROWS_AS(triangular_grid(0), std::invalid_argument);
    for (int k = 1; k <= 12; ++k) {
        const Graph g = triangular_grid(k);
        CHECK(g.num_vertices() == k * (k + 1) / 2);
        CHECK(g.num_edges() == 3 * k * (k - 1) / 2);
        CHECK(is_connected(g));
    }
}

TEST_CASE("triangular grid rows match the reference labeling") {
    const Graph t3 = triangular_grid(3);
    for (auto [u, v] : {std::pair{1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {3, 6},
                        {4, 5}, {5, 6}})
        CHECK(t3.find_edge(u, v) >= 0);
}

TEST_CASE("theta counting and labeling") {
    CHECK(theta({3, 4, 4}).num_vertices() == 10);
    CHECK(theta({3, 4, 4}).num_edges() == 11);
    CHECK(theta({1, 2, 5}).num_vertices() == 7);
    CHECK(theta({1, 2, 5}).num_edges() == 8);
    CHECK_THROWS_AS(theta({}), std::invalid_argument);
    CHECK_THROWS_AS(theta({0, 2}), std::invalid_argument);

    // (2,2) is the 4-cycle through both hubs.
    const Graph c4ish = theta({2, 2});
    CHECK(c4ish.num_vertices() == 4);
    CHECK(c4ish.num_edges() == 4);
    CHECK(degree(c4ish, 1) == 2);
    CHECK(degree(c4ish, 2) == 2);

    // The j-th edge of path i has index l_1+...+l_{i-1}+j-1.
    const Graph g = theta({1, 2, 5});
    CHECK(g.edge(0).connects(1, 2));
    CHECK(g.edge(1).connects(1, 3));
    CHECK(g.edge(2).connects(3, 2));
    CHECK(g.edge(3).connects(1, 4));
    CHECK(g.edge(7).connects(7, 2));

    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> count(1, 5);
        const int k = count(rng);
        std::vector<int> lengths;
        int total = 0;
        for (int i = 0; i < k; ++i) {
            std::uniform_int_distribution<int> length(1, std::max(1, (20 - total) / (k - i)));
            lengths.push_back(length(rng));
            total += lengths.back();
        }
        const Graph t = theta(lengths);
        CHECK(t.num_edges() == total);
        CHECK(t.num_vertices() == total - k + 2);
        CHECK(is_connected(t));
    }
}

TEST_CASE("circulant counting and step validation") {
    CHECK(circulant(6, {1, 2}).num_edges() == 12);
    CHECK(circulant(9, {1, 4}).num_edges() == 18);
    CHECK(circulant(5, {1}).num_edges() == 5);  // C5
    CHECK_THROWS_AS(circulant(8, {4}), std::invalid_argument);   // step = n/2
    CHECK_THROWS_AS(circulant(9, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(circulant(9, {}), std::invalid_argument);
    for (int n : {5, 6, 9, 12, 16})
        for (int x = 2; 2 * x < n; ++x) {
            const Graph g = circulant(n, {1, x});
            CHECK(g.num_edges() == 2 * n);
            CHECK(is_connected(g));
        }
}

TEST_CASE("windmill and friendship counting") {
    const Graph bowtie = windmill(3, 2);
    CHECK(bowtie.num_vertices() == 5);
    CHECK(bowtie.num_edges() == 6);
    CHECK(windmill(3, 1) == complete_graph(3));
    CHECK(windmill(4, 2).num_vertices() == 7);
    CHECK(windmill(4, 2).num_edges() == 12);
    CHECK_THROWS_AS(windmill(1, 2), std::invalid_argument);
    for (int k = 2; k <= 5; ++k)
        for (int t = 1; t <= 4; ++t) {
            const Graph g = windmill(k, t);
            CHECK(g.num_vertices() == t * (k - 1) + 1);
            CHECK(g.num_edges() == t * k * (k - 1) / 2);
            CHECK(degree(g, 1) == t * (k - 1));
            CHECK(is_connected(g));
        }
    for (int t = 1; t <= 4; ++t) CHECK(friendship(t) == windmill(3, t));
}

TEST_CASE("polygon chain counting and the pentagonal labeling") {
    CHECK(polygon_chain(5, 5).num_vertices() == 17);
    CHECK(polygon_chain(5, 5).num_edges() == 21);
    CHECK(polygon_chain(3, 2).num_vertices() == 4);
    CHECK(polygon_chain(3, 2).num_edges() == 5);
    CHECK(polygon_chain(4, 1).num_edges() == 4);
    CHECK_THROWS_AS(polygon_chain(2, 3), std::invalid_argument);
    for (int g = 3; g <= 8; ++g)
        for (int t = 1; t <= 8; ++t) {
            const Graph chain = polygon_chain(g, t);
            CHECK(chain.num_vertices() == t * (g - 2) + 2);
            CHECK(chain.num_edges() == t * g - (t - 1));
            CHECK(is_connected(chain));
        }

    // Pentagon chain vertices as drawn: consecutive pentagons share
    // (4,5), (7,8), (10,11), (13,14).
    const Graph penta = polygon_chain(5, 5);
    for (auto [u, v] : {std::pair{4, 5}, {7, 8}, {10, 11}, {13, 14}, {16, 17}, {1, 5}, {2, 3}})
        CHECK(penta.find_edge(u, v) >= 0);
    const auto cycles = polygon_chain_cycles(5, 5);
    CHECK(cycles[0] == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(cycles[1] == std::vector<int>{4, 5, 6, 7, 8});
    CHECK(cycles[4] == std::vector<int>{13, 14, 15, 16, 17});
}

TEST_CASE("series composition counts, labels, degrees") {
    const Graph k3 = complete_graph(3);
    const Graph bowtie = series_compose(k3, 1, k3, 1);
    CHECK(bowtie.num_vertices() == 5);
    CHECK(bowtie.num_edges() == 6);
    CHECK(bowtie == windmill(3, 2));

    const Graph k2 = complete_graph(2);
    const Graph path = series_compose(k2, 2, k2, 1);
    CHECK(path.num_vertices() == 3);
    CHECK(path.num_edges() == 2);

    const Graph mixed = series_compose(k3, 1, theta({2, 2, 2}), 1);
    CHECK(mixed.num_vertices() == 7);
    CHECK(mixed.num_edges() == 9);

    CHECK_THROWS_AS(series_compose(k3, 4, k3, 1), std::invalid_argument);

    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> k(2, 5), t(1, 3);
        const Graph g = windmill(k(rng), t(rng));
        const Graph h = triangular_grid(t(rng) + 1);
        std::uniform_int_distribution<int> gu(1, g.num_vertices()), hv(1, h.num_vertices());
        const int u = gu(rng), v = hv(rng);
        const Graph glued = series_compose(g, u, h, v);
        CHECK(glued.num_vertices() == g.num_vertices() + h.num_vertices() - 1);
        CHECK(glued.num_edges() == g.num_edges() + h.num_edges());
        CHECK(degree(glued, u) == degree(g, u) + degree(h, v));
    }
}

TEST_CASE("equal-density parts compose to the same density") {
    // Pools of graphs bucketed by density; any same-bucket pair composes to it.
    std::vector<Graph> pool;
    for (int n = 3; n <= 6; ++n) pool.push_back(cycle_graph(n));
    for (int k = 2; k <= 4; ++k) pool.push_back(complete_graph(k));
    for (int t = 1; t <= 3; ++t) pool.push_back(friendship(t));
    pool.push_back(theta({2, 2, 2}));
    pool.push_back(theta({3, 3, 3}));

    std::map<std::pair<long long, long long>, std::vector<const Graph*>> buckets;
    for (const Graph& g : pool) {
        const Rational d = density(g);
        buckets[{d.num(), d.den()}].push_back(&g);
    }
    int tested = 0;
    for (const auto& [key, members] : buckets)
        for (const Graph* a : members)
            for (const Graph* b : members) {
                const Graph glued = series_compose(*a, 1, *b, 1);
                CHECK(density(glued) == density(*a));
                ++tested;
            }
    CHECK(tested > 4);  // K3 and the friendship graphs share 3/2, cycles pair up, ...
}

TEST_CASE("family spec grammar") {
    CHECK(make_graph(parse_family_spec("triangular:4")) == triangular_grid(4));
    CHECK(make_graph(parse_family_spec("theta:1,2,5")) == theta({1, 2, 5}));
    CHECK(make_graph(parse_family_spec("circulant:9:1,4")) == circulant(9, {1, 4}));
    CHECK(make_graph(parse_family_spec("windmill:4,2")) == windmill(4, 2));
    CHECK(make_graph(parse_family_spec("friendship:3")) == friendship(3));
    CHECK(make_graph(parse_family_spec("polygon:5,5")) == polygon_chain(5, 5));
    CHECK(make_graph(parse_family_spec("complete:5")) == complete_graph(5));
    CHECK(make_graph(parse_family_spec("cycle:5")) == cycle_graph(5));

    CHECK_THROWS_AS(parse_family_spec("nonsense:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("triangular"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("triangular:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("triangular:2,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("circulant:9"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("theta:a,b"), std::invalid_argument);
}
