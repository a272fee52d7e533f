#include "cbo/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cbo {

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : n_(num_vertices), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("Graph: vertex count must be positive");
    for (const Edge& e : edges_) {
        if (e.u < 1 || e.u > n_ || e.v < 1 || e.v > n_)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("Graph: self-loops are not allowed");
    }
}

const Edge& Graph::edge(int index) const {
    if (index < 0 || index >= num_edges())
        throw std::invalid_argument("Graph: edge index out of range");
    return edges_[static_cast<std::size_t>(index)];
}

int Graph::find_edge(int u, int v) const {
    for (int i = 0; i < num_edges(); ++i)
        if (edges_[static_cast<std::size_t>(i)].connects(u, v)) return i;
    return -1;
}

DisjointSets::DisjointSets(int count) : components_(count) {
    if (count < 0) throw std::invalid_argument("DisjointSets: negative size");
    parent_.resize(static_cast<std::size_t>(count));
    rank_.assign(static_cast<std::size_t>(count), 0);
    for (int i = 0; i < count; ++i) parent_[static_cast<std::size_t>(i)] = i;
}

int DisjointSets::find(int x) {
    auto& p = parent_[static_cast<std::size_t>(x)];
    if (p != x) p = find(p);
    return p;
}

bool DisjointSets::unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    auto& rx = rank_[static_cast<std::size_t>(x)];
    auto& ry = rank_[static_cast<std::size_t>(y)];
    if (rx < ry) std::swap(x, y);
    parent_[static_cast<std::size_t>(y)] = x;
    if (rx == ry) ++rank_[static_cast<std::size_t>(x)];
    --components_;
    return true;
}

bool is_spanning_tree(const Graph& g, std::span<const int> edge_indices) {
    const int n = g.num_vertices();
    for (int i : edge_indices)
        if (i < 0 || i >= g.num_edges())
            throw std::invalid_argument("is_spanning_tree: edge index out of range");
    // Cardinality first: cheap short-circuit before any union-find work.
    if (static_cast<int>(edge_indices.size()) != n - 1) return false;
    DisjointSets sets(n);
    for (int i : edge_indices) {
        const Edge& e = g.edge(i);
        if (!sets.unite(e.u - 1, e.v - 1)) return false;  // cycle
    }
    return sets.components() == 1;
}

bool is_connected(const Graph& g) {
    DisjointSets sets(g.num_vertices());
    for (const Edge& e : g.edges()) sets.unite(e.u - 1, e.v - 1);
    return sets.components() == 1;
}

Rational density(const Graph& g) {
    if (g.num_vertices() < 2)
        throw std::invalid_argument("density: undefined for a single-vertex graph");
    return Rational(g.num_edges(), g.num_vertices() - 1);
}

int degree(const Graph& g, int vertex) {
    if (vertex < 1 || vertex > g.num_vertices())
        throw std::invalid_argument("degree: vertex out of range");
    int d = 0;
    for (const Edge& e : g.edges())
        if (e.u == vertex || e.v == vertex) ++d;
    return d;
}

int min_degree(const Graph& g) {
    std::vector<int> deg(static_cast<std::size_t>(g.num_vertices()), 0);
    for (const Edge& e : g.edges()) {
        ++deg[static_cast<std::size_t>(e.u - 1)];
        ++deg[static_cast<std::size_t>(e.v - 1)];
    }
    return *std::min_element(deg.begin(), deg.end());
}

void for_each_connected_vertex_set(const Graph& g,
                                   const std::function<void(const std::vector<int>&)>& fn) {
    const int n = g.num_vertices();
    if (n > 30) throw std::invalid_argument("for_each_connected_vertex_set: n too large");

    // Neighbourhood bitmasks; bit i stands for vertex i+1.
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u - 1)] |= 1u << (e.v - 1);
        adj[static_cast<std::size_t>(e.v - 1)] |= 1u << (e.u - 1);
    }

    std::vector<int> vertices;
    const std::uint32_t all = (1u << n) - 1;
    for (std::uint32_t mask = 0; mask <= all; ++mask) {
        if (std::popcount(mask) < 2) continue;
        // Expand reachability from the lowest vertex, restricted to the mask.
        std::uint32_t reach = mask & (~mask + 1);
        for (;;) {
            std::uint32_t next = reach;
            std::uint32_t frontier = reach;
            while (frontier) {
                const int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= adj[static_cast<std::size_t>(v)] & mask;
            }
            if (next == reach) break;
            reach = next;
        }
        if (reach != mask) continue;
        vertices.clear();
        for (std::uint32_t rest = mask; rest; rest &= rest - 1)
            vertices.push_back(std::countr_zero(rest) + 1);
        fn(vertices);
    }
}

std::vector<std::vector<int>> connected_induced_vertex_sets(const Graph& g) {
    std::vector<std::vector<int>> out;
    for_each_connected_vertex_set(g, [&](const std::vector<int>& w) { out.push_back(w); });
    return out;
}

int induced_edge_count(const Graph& g, std::span<const int> vertices) {
    std::vector<char> in(static_cast<std::size_t>(g.num_vertices() + 1), 0);
    for (int v : vertices) {
        if (v < 1 || v > g.num_vertices())
            throw std::invalid_argument("induced_edge_count: vertex out of range");
        in[static_cast<std::size_t>(v)] = 1;
    }
    int count = 0;
    for (const Edge& e : g.edges())
        if (in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)]) ++count;
    return count;
}

}  // namespace cbo
