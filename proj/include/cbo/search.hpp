#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cbo/graph.hpp"
#include "cbo/ordering.hpp"

namespace cbo {

// Limits for the exhaustive search; zero means unlimited. Exceeding either
// limit yields budget_exceeded, never a false "exhausted".
struct SearchBudget {
    std::uint64_t max_nodes = 0;
    double max_seconds = 0.0;
};

enum class SearchStatus { found, exhausted, budget_exceeded };

const char* search_status_name(SearchStatus status);

struct SearchOutcome {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<EdgeOrdering> ordering;  // present iff status == found
    std::uint64_t nodes_explored = 0;
    double elapsed_seconds = 0.0;
};

// Exhaustive backtracking search for a cyclic base ordering. Edge 0 is fixed
// at rank 1 (the property is rotation-invariant, so no solutions are lost),
// candidates are tried in ascending edge-index order, and a partial
// assignment is pruned as soon as its trailing min(assigned, n-1) edges
// contain a cycle. Wraparound windows are checked when an assignment
// completes. Returns the lexicographically first ordering by edge-index
// sequence; "exhausted" certifies that no cyclic base ordering exists.
// Requires a connected graph with m >= n-1; practical for exhaustion up to
// m ~ 14.
SearchOutcome find_cbo(const Graph& g, const SearchBudget& budget = {},
                       bool deterministic = true);

struct SweepRow {
    int n = 0;
    int m = 0;
    std::string edges;  // "u-v;u-v;..." in edge order
    bool uniformly_dense = false;
    SearchStatus status = SearchStatus::exhausted;
    std::uint64_t nodes_explored = 0;
    std::optional<bool> agree;  // nullopt when the search exceeded its budget
};

struct SweepOptions {
    int max_n = 5;
    int max_m = 8;
    bool dedup = false;       // drop isomorphic duplicates (exact, n! canonical form)
    bool multigraph = false;  // enumerate parallel edges too (keep n small)
    SearchBudget budget;      // per-graph search budget
    int workers = 1;          // worker threads; output order is deterministic
};

// Enumerates connected graphs with n <= max_n and n-1 <= m <= max_m
// (ascending n, then ascending edge bitmask / multiset) and pairs the
// uniform-density verdict with the exhaustive search on each. Rows where the
// two sides disagree are the interesting ones.
std::vector<SweepRow> sweep_small_graphs(const SweepOptions& options);

}  // namespace cbo
