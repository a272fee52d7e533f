#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cbo/families.hpp"
#include "cbo/graph.hpp"
#include "cbo/ordering.hpp"

namespace cbo {

// Thrown when a constructive ordering fails its own verification. The
// constructions carry correctness arguments of varying strength, so every
// constructor re-checks its output and reports the failing window instead of
// returning a bad ordering.
class ClaimViolation : public std::runtime_error {
public:
    ClaimViolation(const std::string& what, WindowFailure failure);

    const WindowFailure& failure() const { return failure_; }

private:
    WindowFailure failure_;
};

// Consecutive rank intervals partitioning an ordering: block b holds the
// edges at ranks b*p+1 .. (b+1)*p, for s blocks of equal size p with s*p = m.
class BlockPartition {
public:
    BlockPartition(const EdgeOrdering& o, int num_blocks);

    int num_blocks() const { return static_cast<int>(blocks_.size()); }
    int block_size() const { return block_size_; }
    const std::vector<int>& block(int b) const { return blocks_.at(static_cast<std::size_t>(b)); }

private:
    std::vector<std::vector<int>> blocks_;
    int block_size_;
};

// Ordering for theta(l, l, ..., l) with k equal paths: the j-th edge of path
// i gets rank (j-1)k + i, so consecutive ranks walk across the paths. The
// result is verified before being returned.
EdgeOrdering theta_uniform_cbo(int k, int l);

struct ComposedCbo {
    Graph graph;
    EdgeOrdering ordering;
};

// Equal-size interleave: requires |V(g)|=|V(h)| and |E(g)|=|E(h)|. The glued
// graph orders g's edges at odd ranks 2*og-1 and h's at even ranks 2*oh.
// Both inputs must pass verify_cbo.
ComposedCbo series_cbo_equal(const Graph& g, const EdgeOrdering& og, const Graph& h,
                             const EdgeOrdering& oh, int u, int v);

// Equal-density interleave: with density s/t in lowest terms, og splits into
// s blocks of (n_g-1)/t edges and oh into s blocks of (n_h-1)/t, concatenated
// alternately P1 Q1 P2 Q2 ... Ps Qs. When the inputs also have equal sizes,
// the equal-size interleave is used (the two coincide when the blocks are
// single edges).
ComposedCbo series_cbo_density(const Graph& g, const EdgeOrdering& og, const Graph& h,
                               const EdgeOrdering& oh, int u, int v);

struct SeriesPart {
    Graph graph;
    EdgeOrdering ordering;
    int glue_into = 1;  // vertex of the composite built so far (ignored for the first part)
    int glue_at = 1;    // vertex of this part glued onto glue_into
};

// Round-robin block interleave of any number of equal-density parts, glued
// left to right. Defaults glue every part at vertex 1, which stacks complete
// graphs into windmills.
ComposedCbo series_cbo_multi(const std::vector<SeriesPart>& parts);

// Numbering scheme for a chain of t g-gons: sweep each non-shared side class
// left to right across the polygons (ranks 1..t(g-2)), then number the first
// polygon's leading side, the t-1 shared edges, and the last polygon's
// trailing side left to right. Verified per instance; a failure throws
// ClaimViolation rather than being repaired.
EdgeOrdering polygon_chain_cbo(int sides, int length);

// The alternating candidate on circulant(n, {1, x}) for offsets a, b in
// 0..n-1: the chord leaving v_((i+a) mod n)+1 gets rank 2i-1 and the cycle
// edge leaving v_((j+b) mod n)+1 gets rank 2j.
EdgeOrdering circulant_alternating_candidate(int n, int x, int a, int b);

// Tries all n^2 offset pairs in lexicographic (a, b) order and returns the
// first candidate that verifies, or nullopt if none does. Requires
// 1 <= x < n/2 and x != 1.
std::optional<EdgeOrdering> circulant_alternating_cbo(int n, int x);

}  // namespace cbo
