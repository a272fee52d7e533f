#pragma once

#include <functional>
#include <span>
#include <vector>

#include "cbo/rational.hpp"

namespace cbo {

// Undirected edge between 1-based vertices. Self-loops are rejected at graph
// construction; parallel edges are allowed.
struct Edge {
    int u;
    int v;

    // Unordered endpoint comparison.
    bool connects(int a, int b) const { return (u == a && v == b) || (u == b && v == a); }

    bool operator==(const Edge&) const = default;
};

// Immutable multigraph: a vertex count and an ordered edge list. Edge indices
// are 0-based positions in the construction order and never change, so an
// EdgeOrdering can refer to edges by index. Safe to share across threads.
class Graph {
public:
    Graph(int num_vertices, std::vector<Edge> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int index) const;
    const std::vector<Edge>& edges() const { return edges_; }

    // Index of the first edge joining u and v (either orientation), -1 if none.
    int find_edge(int u, int v) const;

    bool operator==(const Graph& other) const = default;

private:
    int n_;
    std::vector<Edge> edges_;
};

// Union-find over elements 0..count-1 with path compression and union by
// rank. Single-owner mutable scratch state; use one instance per worker.
class DisjointSets {
public:
    explicit DisjointSets(int count);

    int find(int x);
    // Merges the sets holding x and y; returns false if they were already one.
    bool unite(int x, int y);
    int components() const { return components_; }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
    int components_;
};

// True iff the indexed edges induce a spanning tree of g: exactly n-1 edges,
// acyclic, all vertices in one component. For n=1 true iff the set is empty.
// Throws std::invalid_argument on an out-of-range index.
bool is_spanning_tree(const Graph& g, std::span<const int> edge_indices);

bool is_connected(const Graph& g);

// |E| / (|V|-1), exactly reduced. Requires n >= 2.
Rational density(const Graph& g);

// Incident-edge count; parallel edges each count.
int degree(const Graph& g, int vertex);
int min_degree(const Graph& g);

// Calls fn once for every vertex subset of size >= 2 whose induced subgraph
// is connected (ascending bitmask order, vertices sorted within a subset).
// Single-vertex subsets are excluded: their density is undefined, so they
// never matter for uniform density. Enumeration is exponential; intended for
// n up to ~14.
void for_each_connected_vertex_set(const Graph& g,
                                   const std::function<void(const std::vector<int>&)>& fn);

std::vector<std::vector<int>> connected_induced_vertex_sets(const Graph& g);

// Edge count of the subgraph induced by the given vertices (multiplicities
// counted).
int induced_edge_count(const Graph& g, std::span<const int> vertices);

}  // namespace cbo
