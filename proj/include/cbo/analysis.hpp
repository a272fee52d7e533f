#pragma once

#include <optional>
#include <vector>

#include "cbo/graph.hpp"
#include "cbo/rational.hpp"
#include "cbo/search.hpp"

namespace cbo {

struct DensityWitness {
    std::vector<int> vertices;
    Rational density;
};

struct DensityReport {
    Rational graph_density;
    bool uniformly_dense = false;
    // Present iff not uniformly dense; the smallest violating vertex subset
    // (by size, then lexicographic), whose induced density strictly exceeds
    // the graph's.
    std::optional<DensityWitness> witness;
};

// Brute-force uniform-density test over connected induced vertex subsets of
// size >= 2, compared with exact rationals. Requires a connected graph with
// n >= 2; practical up to n ~ 14.
DensityReport is_uniformly_dense(const Graph& g);

// True iff min degree >= |E|/(|V|-1) exactly. False certifies that no cyclic
// base ordering exists.
bool min_degree_condition(const Graph& g);

// For path lengths l_1 <= ... <= l_k (sorted internally), checks
// (l_1+...+l_t)/(t-1) >= (l_1+...+l_k)/(k-1) for every t in 2..k. False
// certifies that the theta graph has no cyclic base ordering. Requires k >= 2.
bool theta_necessary_condition(std::vector<int> lengths);

// Whether the k-level triangular grid is cyclically orderable: k <= 4. The
// positive side is witnessed by the T2..T4 reference orderings, the negative
// side follows from the min-degree condition.
bool triangular_orderability(int k);

struct ConjectureCheck {
    bool uniformly_dense = false;
    std::optional<bool> cbo_found;  // nullopt when the search ran out of budget

    std::optional<bool> agree() const {
        if (!cbo_found) return std::nullopt;
        return uniformly_dense == *cbo_found;
    }
};

// Pairs the uniform-density predicate with the exhaustive search, flagging
// any graph where the two disagree. A single-vertex graph counts as
// uniformly dense and trivially orderable.
ConjectureCheck conjecture_check(const Graph& g, const SearchBudget& budget = {});

}  // namespace cbo
