#pragma once

#include <string>
#include <vector>

#include "cbo/graph.hpp"

namespace cbo {

// Deterministic generators for the graph families handled by the library.
// Vertex labels and edge order are frozen per family so that reference
// orderings stay expressible as plain index maps; each generator documents
// its convention.

// Triangular grid with k levels. Vertices are numbered row by row, top to
// bottom, left to right (apex = v1). Edges are emitted level by level: for
// each row r = 1..k-1, first the two downward edges of each row-r vertex in
// left-to-right order, then the horizontal edges of row r+1.
// |V| = k(k+1)/2, |E| = 3k(k-1)/2.
Graph triangular_grid(int k);

// Generalized theta graph: hubs v1 and v2 joined by k internally disjoint
// paths of the given lengths, generated in input order without re-sorting.
// Internal vertices are numbered path by path starting at v3. The j-th edge
// along path i (from hub 1 towards hub 2) has index l_1+...+l_{i-1} + j-1.
// Lengths of 1 give a direct hub-hub edge; several of them give parallel
// edges. |E| = sum l_i, |V| = sum l_i - k + 2.
Graph theta(const std::vector<int>& lengths);

// Circulant graph on vertices v1..vn: for every step x and every i, the edge
// {v_i, v_((i-1+x) mod n)+1}. Steps must be distinct and satisfy 1 <= x < n/2
// (strict, so no step duplicates an edge). Edge order: all step-x1 edges for
// i = 1..n, then all step-x2 edges, and so on. |E| = t*n.
Graph circulant(int n, const std::vector<int>& steps);

// t copies of K_k glued at a single hub vertex v1. Copy c occupies the hub
// plus vertices (c-1)(k-1)+2 .. c(k-1)+1; its edges are emitted in
// lexicographic order. |V| = t(k-1)+1, |E| = t*k(k-1)/2.
Graph windmill(int k, int t);

// friendship(t) == windmill(3, t).
Graph friendship(int t);

// Chain of t g-gons where consecutive polygons share exactly one edge.
// Polygon 1 is the cycle v1..vg; each later polygon reuses the two shared
// vertices and appends g-2 fresh ones, walking the same direction. See
// polygon_chain_cycles for the exact per-polygon vertex sequences.
// |V| = t(g-2)+2, |E| = t*g-(t-1). For g=5, t=5 the labels match the
// pentagonal chain drawn with v1..v17.
Graph polygon_chain(int sides, int length);

// The per-polygon cycle vertex sequences underlying polygon_chain. Polygon p
// (0-based) is the cycle cycles[p][0] - cycles[p][1] - ... - cycles[p][g-1] -
// cycles[p][0]; consecutive polygons share the edge between positions g-1 and
// g of the earlier one (equivalently positions 1 and 2 of the later one).
std::vector<std::vector<int>> polygon_chain_cycles(int sides, int length);

// K_n with lexicographic edge order.
Graph complete_graph(int n);

// Cycle v1-v2-...-vn-v1. Requires n >= 3.
Graph cycle_graph(int n);

// Series composition (1-sum): glue vertex u of g and vertex v of h into one
// vertex. g keeps its labels; v maps to u and the remaining h vertices are
// shifted above g's range in label order. Edge order is g's edges then h's.
// |V| = n_g + n_h - 1, |E| = m_g + m_h.
Graph series_compose(const Graph& g, int u, const Graph& h, int v);

// Label of h's vertex w inside series_compose(g, u, h, v).
int series_vertex_label(const Graph& g, int u, const Graph& h, int v, int w);

enum class Family {
    triangular,
    theta_family,
    circulant_family,
    complete,
    cycle,
    windmill_family,
    friendship_family,
    polygon_chain_family,
};

// Parsed family descriptor: a family name plus its integer parameters,
// validated for arity and range at parse time.
struct FamilySpec {
    Family family;
    std::vector<int> params;
};

// Grammar: "triangular:k", "theta:l1,l2,...", "circulant:n:x1,x2,...",
// "windmill:k,t", "friendship:t", "polygon:g,t", "complete:n", "cycle:n".
FamilySpec parse_family_spec(const std::string& text);

Graph make_graph(const FamilySpec& spec);

const char* family_spec_grammar();

}  // namespace cbo
