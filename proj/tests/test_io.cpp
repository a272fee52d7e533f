#include "doctest.h"

#include <stdexcept>

#include "cbo/families.hpp"
#include "cbo/fixtures.hpp"
#include "cbo/io.hpp"

using namespace cbo;

TEST_CASE("graph JSON round-trips byte for byte") {
    for (const Graph& g : {triangular_grid(4), theta({1, 2, 5}), circulant(9, {1, 4}),
                           Graph(2, {{1, 2}, {1, 2}})}) {
        const std::string text = graph_to_json(g);
        const Graph back = graph_from_json(text);
        CHECK(back == g);
        CHECK(graph_to_json(back) == text);
    }
}

TEST_CASE("graph JSON parsing is strict about shape") {
    CHECK_THROWS_AS(graph_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json("{\"edges\": []}"), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json("{\"num_vertices\": 2, \"edges\": [[1]]}"),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json("{\"num_vertices\": 2, \"edges\": [[1, 1]]}"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        graph_from_json("{\"format\": \"cbo/9\", \"num_vertices\": 2, \"edges\": []}"),
        std::invalid_argument);
    // Edge order is preserved exactly.
    const Graph g = graph_from_json("{\"num_vertices\": 3, \"edges\": [[2, 3], [1, 2]]}");
    CHECK(g.edge(0).connects(2, 3));
    CHECK(g.edge(1).connects(1, 2));
}

TEST_CASE("ordering JSON round-trips") {
    const EdgeOrdering o = paper_fixture("T3").ordering;
    const std::string text = ordering_to_json(o);
    CHECK(ordering_from_json(text) == o);
    CHECK(ordering_to_json(ordering_from_json(text)) == text);
    CHECK_THROWS_AS(ordering_from_json("{\"order\": [0, 0]}"), std::invalid_argument);
    CHECK_THROWS_AS(ordering_from_json("{}"), std::invalid_argument);
}

TEST_CASE("DOT export emits edges in rank order with rank labels") {
    const auto [graph, ordering] = paper_fixture("T2");
    const std::string dot = to_dot(graph, &ordering);
    CHECK(dot == "graph cbo {\n"
                 "  1;\n"
                 "  2;\n"
                 "  3;\n"
                 "  1 -- 2 [label=1];\n"
                 "  1 -- 3 [label=2];\n"
                 "  2 -- 3 [label=3];\n"
                 "}\n");
    const std::string plain = to_dot(graph);
    CHECK(plain.find("label") == std::string::npos);

    const auto ci9 = paper_fixture("Ci9_14");
    const std::string big = to_dot(ci9.graph, &ci9.ordering);
    std::size_t labels = 0;
    for (std::size_t at = big.find("label"); at != std::string::npos;
         at = big.find("label", at + 1))
        ++labels;
    CHECK(labels == 18);
}

TEST_CASE("sweep CSV has the fixed column set") {
    SweepRow row;
    row.n = 3;
    row.m = 3;
    row.edges = "1-2;1-3;2-3";
    row.uniformly_dense = true;
    row.status = SearchStatus::found;
    row.nodes_explored = 2;
    row.agree = true;
    const std::string csv = sweep_to_csv({row});
    CHECK(csv == "n,m,edges,uniformly_dense,cbo_status,nodes_explored,agree\n"
                 "3,3,1-2;1-3;2-3,true,found,2,yes\n");
}

TEST_CASE("missing files raise runtime errors") {
    CHECK_THROWS_AS(read_file("/nonexistent/cbo.json"), std::runtime_error);
}
