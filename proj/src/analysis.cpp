#include "cbo/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace cbo {

DensityReport is_uniformly_dense(const Graph& g) {
    if (g.num_vertices() < 2)
        throw std::invalid_argument("is_uniformly_dense: needs at least two vertices");
    if (!is_connected(g))
        throw std::invalid_argument("is_uniformly_dense: graph must be connected");

    DensityReport report;
    report.graph_density = density(g);

    // Induced subgraphs maximize density over a fixed vertex set, so checking
    // connected induced subsets decides the predicate for all connected
    // subgraphs. The witness is the global minimum under (size, lexicographic
    // vertex list), independent of enumeration order.
    std::optional<DensityWitness> best;
    for_each_connected_vertex_set(g, [&](const std::vector<int>& w) {
        const Rational d(induced_edge_count(g, w), static_cast<int>(w.size()) - 1);
        if (d <= report.graph_density) return;
        if (!best || w.size() < best->vertices.size() ||
            (w.size() == best->vertices.size() && w < best->vertices))
            best = DensityWitness{w, d};
    });

    report.uniformly_dense = !best.has_value();
    report.witness = std::move(best);
    return report;
}

bool min_degree_condition(const Graph& g) {
    if (g.num_vertices() < 2)
        throw std::invalid_argument("min_degree_condition: needs at least two vertices");
    return Rational(min_degree(g)) >= density(g);
}

bool theta_necessary_condition(std::vector<int> lengths) {
    if (lengths.size() < 2)
        throw std::invalid_argument("theta_necessary_condition: needs at least two paths");
    for (int l : lengths)
        if (l < 1) throw std::invalid_argument("theta_necessary_condition: lengths must be >= 1");
    std::sort(lengths.begin(), lengths.end());

    const int k = static_cast<int>(lengths.size());
    long long total = 0;
    for (int l : lengths) total += l;
    const Rational whole(total, k - 1);

    long long prefix = lengths[0];
    for (int t = 2; t <= k; ++t) {
        prefix += lengths[static_cast<std::size_t>(t - 1)];
        if (Rational(prefix, t - 1) < whole) return false;
    }
    return true;
}

bool triangular_orderability(int k) {
    if (k < 1) throw std::invalid_argument("triangular_orderability: k must be >= 1");
    return k <= 4;
}

ConjectureCheck conjecture_check(const Graph& g, const SearchBudget& budget) {
    if (!is_connected(g))
        throw std::invalid_argument("conjecture_check: graph must be connected");

    ConjectureCheck check;
    check.uniformly_dense =
        g.num_vertices() < 2 ? true : is_uniformly_dense(g).uniformly_dense;

    const SearchOutcome outcome = find_cbo(g, budget);
    switch (outcome.status) {
        case SearchStatus::found: check.cbo_found = true; break;
        case SearchStatus::exhausted: check.cbo_found = false; break;
        case SearchStatus::budget_exceeded: check.cbo_found = std::nullopt; break;
    }
    return check;
}

}  // namespace cbo
