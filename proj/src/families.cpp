#include "cbo/families.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cbo {

namespace {

[[noreturn]] void bad_param(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

Graph triangular_grid(int k) {
    if (k < 1) bad_param("triangular_grid: k must be >= 1");
    const auto row_start = [](int r) { return r * (r - 1) / 2 + 1; };  // first vertex of row r
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(3 * k * (k - 1) / 2));
    for (int r = 1; r < k; ++r) {
        const int top = row_start(r);
        const int bottom = row_start(r + 1);
        for (int j = 0; j < r; ++j) {
            edges.push_back({top + j, bottom + j});
            edges.push_back({top + j, bottom + j + 1});
        }
        for (int j = 0; j < r; ++j) edges.push_back({bottom + j, bottom + j + 1});
    }
    return Graph(k * (k + 1) / 2, std::move(edges));
}

Graph theta(const std::vector<int>& lengths) {
    if (lengths.empty()) bad_param("theta: at least one path length required");
    for (int l : lengths)
        if (l < 1) bad_param("theta: path lengths must be >= 1");
    const int k = static_cast<int>(lengths.size());
    int total = 0;
    for (int l : lengths) total += l;
    const int n = total - k + 2;

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(total));
    int next_internal = 3;
    for (int l : lengths) {
        int prev = 1;
        for (int j = 1; j < l; ++j) {
            edges.push_back({prev, next_internal});
            prev = next_internal++;
        }
        edges.push_back({prev, 2});
    }
    return Graph(n, std::move(edges));
}

Graph circulant(int n, const std::vector<int>& steps) {
    if (n < 1) bad_param("circulant: n must be >= 1");
    if (steps.empty()) bad_param("circulant: at least one step required");
    std::set<int> seen;
    for (int x : steps) {
        if (x < 1 || 2 * x >= n)
            bad_param("circulant: steps must satisfy 1 <= x < n/2");
        if (!seen.insert(x).second) bad_param("circulant: steps must be distinct");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * steps.size());
    for (int x : steps)
        for (int i = 1; i <= n; ++i) edges.push_back({i, (i - 1 + x) % n + 1});
    return Graph(n, std::move(edges));
}

Graph windmill(int k, int t) {
    if (k < 2) bad_param("windmill: k must be >= 2");
    if (t < 1) bad_param("windmill: t must be >= 1");
    std::vector<Edge> edges;
    for (int c = 0; c < t; ++c) {
        std::vector<int> members{1};
        for (int j = 0; j < k - 1; ++j) members.push_back(c * (k - 1) + 2 + j);
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                edges.push_back({members[a], members[b]});
    }
    return Graph(t * (k - 1) + 1, std::move(edges));
}

Graph friendship(int t) { return windmill(3, t); }

std::vector<std::vector<int>> polygon_chain_cycles(int sides, int length) {
    if (sides < 3) bad_param("polygon_chain: polygons need at least 3 sides");
    if (length < 1) bad_param("polygon_chain: chain length must be >= 1");
    std::vector<std::vector<int>> cycles;
    cycles.reserve(static_cast<std::size_t>(length));
    std::vector<int> first(static_cast<std::size_t>(sides));
    for (int i = 0; i < sides; ++i) first[static_cast<std::size_t>(i)] = i + 1;
    cycles.push_back(first);
    int next_vertex = sides + 1;
    for (int p = 1; p < length; ++p) {
        const std::vector<int>& prev = cycles.back();
        std::vector<int> cur;
        cur.reserve(static_cast<std::size_t>(sides));
        // Shared edge: the previous polygon's positions g-1 and g.
        cur.push_back(prev[static_cast<std::size_t>(sides - 2)]);
        cur.push_back(prev[static_cast<std::size_t>(sides - 1)]);
        for (int j = 0; j < sides - 2; ++j) cur.push_back(next_vertex++);
        cycles.push_back(std::move(cur));
    }
    return cycles;
}

Graph polygon_chain(int sides, int length) {
    const auto cycles = polygon_chain_cycles(sides, length);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(sides * length - (length - 1)));
    for (std::size_t p = 0; p < cycles.size(); ++p) {
        const auto& c = cycles[p];
        // Position q covers the edge from c[q-1] to c[q mod g]; position 1 of
        // a later polygon is the shared edge already emitted by its
        // predecessor.
        const int start = p == 0 ? 1 : 2;
        for (int q = start; q <= sides; ++q)
            edges.push_back({c[static_cast<std::size_t>(q - 1)],
                             c[static_cast<std::size_t>(q % sides)]});
    }
    return Graph(length * (sides - 2) + 2, std::move(edges));
}

Graph complete_graph(int n) {
    if (n < 1) bad_param("complete_graph: n must be >= 1");
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) bad_param("cycle_graph: n must be >= 3");
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) edges.push_back({i, i % n + 1});
    return Graph(n, std::move(edges));
}

int series_vertex_label(const Graph& g, int u, const Graph& h, int v, int w) {
    if (u < 1 || u > g.num_vertices()) bad_param("series_compose: u out of range");
    if (v < 1 || v > h.num_vertices()) bad_param("series_compose: v out of range");
    if (w < 1 || w > h.num_vertices()) bad_param("series_compose: w out of range");
    if (w == v) return u;
    return g.num_vertices() + (w < v ? w : w - 1);
}

Graph series_compose(const Graph& g, int u, const Graph& h, int v) {
    std::vector<Edge> edges = g.edges();
    edges.reserve(edges.size() + h.edges().size());
    for (const Edge& e : h.edges())
        edges.push_back({series_vertex_label(g, u, h, v, e.u),
                         series_vertex_label(g, u, h, v, e.v)});
    return Graph(g.num_vertices() + h.num_vertices() - 1, std::move(edges));
}

const char* family_spec_grammar() {
    return "triangular:k | theta:l1,l2,... | circulant:n:x1,x2,... | windmill:k,t | "
           "friendship:t | polygon:g,t | complete:n | cycle:n";
}

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            bad_param("family spec: '" + item + "' is not an integer");
        }
        if (used != item.size()) bad_param("family spec: '" + item + "' is not an integer");
        values.push_back(value);
    }
    if (values.empty()) bad_param("family spec: missing parameters");
    return values;
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        bad_param("family spec: expected '<family>:<params>' (" +
                  std::string(family_spec_grammar()) + ")");
    const std::string name = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);

    FamilySpec spec;
    if (name == "triangular") {
        spec.family = Family::triangular;
        spec.params = parse_int_list(rest);
        if (spec.params.size() != 1) bad_param("triangular takes one parameter: triangular:k");
    } else if (name == "theta") {
        spec.family = Family::theta_family;
        spec.params = parse_int_list(rest);
    } else if (name == "circulant") {
        spec.family = Family::circulant_family;
        const auto second = rest.find(':');
        if (second == std::string::npos)
            bad_param("circulant spec is circulant:n:x1,x2,...");
        spec.params = parse_int_list(rest.substr(0, second));
        if (spec.params.size() != 1) bad_param("circulant spec is circulant:n:x1,x2,...");
        for (int x : parse_int_list(rest.substr(second + 1))) spec.params.push_back(x);
    } else if (name == "windmill") {
        spec.family = Family::windmill_family;
        spec.params = parse_int_list(rest);
        if (spec.params.size() != 2) bad_param("windmill takes two parameters: windmill:k,t");
    } else if (name == "friendship") {
        spec.family = Family::friendship_family;
        spec.params = parse_int_list(rest);
        if (spec.params.size() != 1) bad_param("friendship takes one parameter: friendship:t");
    } else if (name == "polygon") {
        spec.family = Family::polygon_chain_family;
        spec.params = parse_int_list(rest);
        if (spec.params.size() != 2) bad_param("polygon takes two parameters: polygon:g,t");
    } else if (name == "complete") {
        spec.family = Family::complete;
        spec.params = parse_int_list(rest);
        if (spec.params.size() != 1) bad_param("complete takes one parameter: complete:n");
    } else if (name == "cycle") {
        spec.family = Family::cycle;
        spec.params = parse_int_list(rest);
        if (spec.params.size() != 1) bad_param("cycle takes one parameter: cycle:n");
    } else {
        bad_param("unknown family '" + name + "' (" + std::string(family_spec_grammar()) + ")");
    }

    make_graph(spec);  // validate ranges now so parse errors surface together
    return spec;
}

Graph make_graph(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::triangular: return triangular_grid(spec.params.at(0));
        case Family::theta_family: return theta(spec.params);
        case Family::circulant_family: {
            std::vector<int> steps(spec.params.begin() + 1, spec.params.end());
            return circulant(spec.params.at(0), steps);
        }
        case Family::complete: return complete_graph(spec.params.at(0));
        case Family::cycle: return cycle_graph(spec.params.at(0));
        case Family::windmill_family: return windmill(spec.params.at(0), spec.params.at(1));
        case Family::friendship_family: return friendship(spec.params.at(0));
        case Family::polygon_chain_family:
            return polygon_chain(spec.params.at(0), spec.params.at(1));
    }
    throw std::logic_error("make_graph: unhandled family");
}

}  // namespace cbo
