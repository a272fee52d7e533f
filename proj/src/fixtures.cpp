#include "cbo/fixtures.hpp"

#include <stdexcept>

#include "cbo/families.hpp"

namespace cbo {

namespace {

struct RankEntry {
    int u;
    int v;
    int rank;
};

// The tables are transcribed verbatim from the reference drawings, not
// re-derived, so a transcription error shows up as a named test failure.

const RankEntry kT2[] = {
    {1, 2, 1}, {1, 3, 2}, {2, 3, 3},
};

const RankEntry kT3[] = {
    {1, 2, 1}, {1, 3, 5}, {2, 3, 6}, {2, 4, 2}, {2, 5, 3},
    {3, 5, 8}, {3, 6, 9}, {4, 5, 7}, {5, 6, 4},
};

const RankEntry kT4[] = {
    {1, 2, 1},  {1, 3, 10}, {2, 3, 11}, {2, 4, 5},  {2, 5, 14}, {3, 5, 2},
    {3, 6, 18}, {4, 5, 3},  {5, 6, 9},  {4, 7, 6},  {4, 8, 12}, {5, 8, 7},
    {5, 9, 4},  {6, 9, 13}, {6, 10, 17}, {7, 8, 15}, {8, 9, 16}, {9, 10, 8},
};

const RankEntry kTheta555[] = {
    {1, 3, 1},   {3, 4, 4},   {4, 5, 7},   {5, 6, 10},  {6, 2, 13},
    {1, 7, 2},   {7, 8, 5},   {8, 9, 8},   {9, 10, 11}, {10, 2, 14},
    {1, 11, 3},  {11, 12, 6}, {12, 13, 9}, {13, 14, 12}, {14, 2, 15},
};

const RankEntry kCi9[] = {
    {1, 2, 10}, {2, 3, 12}, {3, 4, 14}, {4, 5, 16}, {5, 6, 18},
    {6, 7, 2},  {7, 8, 4},  {8, 9, 6},  {9, 1, 8},
    {1, 5, 1},  {2, 6, 3},  {3, 7, 5},  {4, 8, 7},  {5, 9, 9},
    {6, 1, 11}, {7, 2, 13}, {8, 3, 15}, {9, 4, 17},
};

const RankEntry kCi10[] = {
    {1, 2, 12},  {2, 3, 14}, {3, 4, 16}, {4, 5, 18}, {5, 6, 20},
    {6, 7, 2},   {7, 8, 4},  {8, 9, 6},  {9, 10, 8}, {10, 1, 10},
    {1, 5, 1},   {2, 6, 3},  {3, 7, 5},  {4, 8, 7},  {5, 9, 9},
    {6, 10, 11}, {7, 1, 13}, {8, 2, 15}, {9, 3, 17}, {10, 4, 19},
};

const RankEntry kCi12[] = {
    {1, 2, 12},  {2, 3, 14},  {3, 4, 16},  {4, 5, 18},  {5, 6, 20},  {6, 7, 22},
    {7, 8, 24},  {8, 9, 2},   {9, 10, 4},  {10, 11, 6}, {11, 12, 8}, {12, 1, 10},
    {1, 5, 23},  {2, 6, 1},   {3, 7, 3},   {4, 8, 5},   {5, 9, 7},   {6, 10, 9},
    {7, 11, 11}, {8, 12, 13}, {9, 1, 15},  {10, 2, 17}, {11, 3, 19}, {12, 4, 21},
};

const RankEntry kPentagon5[] = {
    {1, 2, 16},  {2, 3, 1},   {3, 4, 6},   {4, 5, 17},  {1, 5, 11},
    {5, 6, 2},   {6, 7, 7},   {7, 8, 18},  {4, 8, 12},  {8, 9, 3},
    {9, 10, 8},  {10, 11, 19}, {7, 11, 13}, {11, 12, 4}, {12, 13, 9},
    {13, 14, 20}, {10, 14, 14}, {14, 15, 5}, {15, 16, 10}, {16, 17, 21},
    {13, 17, 15},
};

template <std::size_t N>
Fixture build(Graph graph, const RankEntry (&table)[N]) {
    if (static_cast<std::size_t>(graph.num_edges()) != N)
        throw std::logic_error("paper_fixture: table size does not match the graph");
    std::vector<int> ranks(N, 0);
    for (const RankEntry& entry : table) {
        const int index = graph.find_edge(entry.u, entry.v);
        if (index < 0) throw std::logic_error("paper_fixture: edge missing from graph");
        ranks[static_cast<std::size_t>(index)] = entry.rank;
    }
    return Fixture{std::move(graph), EdgeOrdering::from_ranks(ranks)};
}

}  // namespace

Fixture paper_fixture(const std::string& name) {
    if (name == "T2") return build(triangular_grid(2), kT2);
    if (name == "T3") return build(triangular_grid(3), kT3);
    if (name == "T4") return build(triangular_grid(4), kT4);
    if (name == "Theta555") return build(theta({5, 5, 5}), kTheta555);
    if (name == "Ci9_14") return build(circulant(9, {1, 4}), kCi9);
    if (name == "Ci10_14") return build(circulant(10, {1, 4}), kCi10);
    if (name == "Ci12_14") return build(circulant(12, {1, 4}), kCi12);
    if (name == "Pentagon5") return build(polygon_chain(5, 5), kPentagon5);
    throw std::invalid_argument("paper_fixture: unknown fixture '" + name + "'");
}

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {
        "T2", "T3", "T4", "Theta555", "Ci9_14", "Ci10_14", "Ci12_14", "Pentagon5",
    };
    return names;
}

}  // namespace cbo
