#pragma once

#include <optional>
#include <vector>

#include "cbo/graph.hpp"

namespace cbo {

// Bijection from a graph's m edges to ranks 1..m. Position p of order() holds
// the edge index with rank p+1. Validated to be a permutation of 0..m-1 at
// construction.
class EdgeOrdering {
public:
    explicit EdgeOrdering(std::vector<int> order);

    // Builds from the inverse map: ranks[e] is the rank (1..m) of edge e.
    static EdgeOrdering from_ranks(const std::vector<int>& ranks);

    int size() const { return static_cast<int>(order_.size()); }
    const std::vector<int>& order() const { return order_; }

    int edge_at_rank(int rank) const;   // rank in 1..m
    int rank_of_edge(int edge) const;   // inverse lookup

    bool operator==(const EdgeOrdering& other) const = default;

private:
    std::vector<int> order_;
    std::vector<int> rank_of_;
};

enum class FailureKind { cycle, disconnected, cardinality };

const char* failure_kind_name(FailureKind kind);

struct WindowFailure {
    int start_rank = 0;
    FailureKind kind = FailureKind::cycle;

    bool operator==(const WindowFailure&) const = default;
};

struct VerificationReport {
    bool passed = false;
    int total_windows = 0;
    std::optional<WindowFailure> first_failure;
};

// Checks every window of n-1 cyclically consecutive ranks against the
// spanning-tree requirement. Windows are indexed by start rank 1..m; the
// report carries the smallest failing start rank. Requires a connected graph,
// an ordering of matching length, and m >= n-1 (throws std::invalid_argument
// otherwise). A single-vertex graph passes with zero windows.
VerificationReport verify_cbo(const Graph& g, const EdgeOrdering& o);

// Cyclic shift: the edge at rank r moves to rank ((r-1+shift) mod m)+1.
// Negative shifts allowed. verify_cbo's verdict is invariant under rotation.
EdgeOrdering rotate(const EdgeOrdering& o, int shift);

}  // namespace cbo
