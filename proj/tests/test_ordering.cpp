#include "doctest.h"

#include <stdexcept>

#include <random>

#include "cbo/families.hpp"
#include "cbo/fixtures.hpp"
#include "cbo/ordering.hpp"
#include "test_oracles.hpp"

using namespace cbo;

TEST_CASE("edge ordering must be a permutation") {
    CHECK_THROWS_AS(EdgeOrdering({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(EdgeOrdering({0, 3, 1}), std::invalid_argument);
    const EdgeOrdering o({2, 0, 1});
    CHECK(o.edge_at_rank(1) == 2);
    CHECK(o.rank_of_edge(2) == 1);
    CHECK(o.rank_of_edge(1) == 3);
    CHECK(EdgeOrdering::from_ranks({3, 1, 2}) == EdgeOrdering({1, 2, 0}));
}

TEST_CASE("verify_cbo on the reference triangle ordering") {
    const auto [graph, ordering] = paper_fixture("T2");
    const VerificationReport report = verify_cbo(graph, ordering);
    CHECK(report.passed);
    CHECK(report.total_windows == 3);
    CHECK_FALSE(report.first_failure.has_value());
}

TEST_CASE("any cyclic ordering of a cycle passes") {
    const Graph c4 = cycle_graph(4);
    CHECK(verify_cbo(c4, EdgeOrdering({0, 1, 2, 3})).passed);
    CHECK(verify_cbo(c4, EdgeOrdering({2, 0, 3, 1})).passed);
}

TEST_CASE("triangle-first ordering of K4 fails at window 1 with a cycle") {
    const Graph k4 = complete_graph(4);
    // (1,2)->1, (1,3)->2, (2,3)->3, (1,4)->4, (2,4)->5, (3,4)->6
    const EdgeOrdering o = EdgeOrdering::from_ranks({1, 2, 4, 3, 5, 6});
    const VerificationReport report = verify_cbo(k4, o);
    CHECK_FALSE(report.passed);
    REQUIRE(report.first_failure.has_value());
    CHECK(report.first_failure->start_rank == 1);
    CHECK(report.first_failure->kind == FailureKind::cycle);
    CHECK(report.total_windows == 6);
}

TEST_CASE("verify_cbo rejects bad inputs") {
    const Graph k3 = complete_graph(3);
    CHECK_THROWS_AS(verify_cbo(k3, EdgeOrdering({0, 1})), std::invalid_argument);
    CHECK_THROWS_AS(verify_cbo(Graph(4, {{1, 2}, {3, 4}}), EdgeOrdering({0, 1})),
                    std::invalid_argument);
    // Fewer edges than n-1: no spanning set is possible.
    CHECK_THROWS_AS(verify_cbo(Graph(3, {{1, 2}}), EdgeOrdering({0})), std::invalid_argument);
}

TEST_CASE("single-vertex graph verifies trivially") {
    const VerificationReport report = verify_cbo(Graph(1, {}), EdgeOrdering(std::vector<int>{}));
    CHECK(report.passed);
    CHECK(report.total_windows == 0);
}

TEST_CASE("rotation basics") {
    const auto [graph, ordering] = paper_fixture("T2");
    CHECK(rotate(ordering, 0) == ordering);
    CHECK(rotate(ordering, ordering.size()) == ordering);
    CHECK(rotate(ordering, -ordering.size()) == ordering);
    CHECK(verify_cbo(graph, rotate(ordering, 1)).passed);
    CHECK(rotate(rotate(ordering, 2), -2) == ordering);
}

TEST_CASE("verdict is invariant under rotation") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<int> size(2, 6);
        const int n = size(rng);
        std::uniform_int_distribution<int> extra(0, 4);
        const Graph g = oracle::random_connected_graph(rng, n, n - 1 + extra(rng));
        const EdgeOrdering o = oracle::random_ordering(rng, g.num_edges());
        const bool verdict = verify_cbo(g, o).passed;
        for (int shift = 1; shift < g.num_edges(); ++shift)
            CHECK(verify_cbo(g, rotate(o, shift)).passed == verdict);
    }
}

TEST_CASE("verifier agrees with the naive per-window oracle") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> size(2, 7);
        const int n = size(rng);
        std::uniform_int_distribution<int> m_choice(n - 1, 12);
        const Graph g = oracle::random_connected_graph(rng, n, m_choice(rng));
        const EdgeOrdering o = oracle::random_ordering(rng, g.num_edges());
        const VerificationReport got = verify_cbo(g, o);
        const oracle::NaiveVerdict want = oracle::naive_verify(g, o);
        CHECK(got.passed == want.passed);
        if (!want.passed) CHECK(got.first_failure->start_rank == want.first_failing_start);
    }
}

TEST_CASE("every reference fixture passes") {
    for (const std::string& name : fixture_names()) {
        CAPTURE(name);
        const auto [graph, ordering] = paper_fixture(name);
        CHECK(verify_cbo(graph, ordering).passed);
    }
    CHECK_THROWS_AS(paper_fixture("T9"), std::invalid_argument);
}

TEST_CASE("fixture spot values") {
    const auto t4 = paper_fixture("T4");
    CHECK(t4.graph.num_vertices() == 10);
    CHECK(t4.ordering.size() == 18);
    CHECK(t4.ordering.edge_at_rank(18) == t4.graph.find_edge(3, 6));

    // Path i, edge j carries rank (j-1)*3+i.
    const auto theta555 = paper_fixture("Theta555");
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 5; ++j)
            CHECK(theta555.ordering.rank_of_edge((i - 1) * 5 + (j - 1)) == (j - 1) * 3 + i);

    const auto ci9 = paper_fixture("Ci9_14");
    for (int i = 1; i <= 9; ++i)  // chord leaving v_i is edge 9+i-1
        CHECK(ci9.ordering.rank_of_edge(9 + i - 1) == 2 * i - 1);
    CHECK(ci9.ordering.rank_of_edge(ci9.graph.find_edge(1, 2)) == 10);
    CHECK(ci9.ordering.rank_of_edge(ci9.graph.find_edge(6, 7)) == 2);

    const auto pentagon = paper_fixture("Pentagon5");
    CHECK(pentagon.ordering.rank_of_edge(pentagon.graph.find_edge(2, 3)) == 1);
    CHECK(pentagon.ordering.rank_of_edge(pentagon.graph.find_edge(1, 2)) == 16);
    CHECK(pentagon.ordering.rank_of_edge(pentagon.graph.find_edge(4, 5)) == 17);
    CHECK(pentagon.ordering.rank_of_edge(pentagon.graph.find_edge(16, 17)) == 21);
}
