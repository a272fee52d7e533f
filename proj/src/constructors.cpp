#include "cbo/constructors.hpp"

#include <numeric>

namespace cbo {

namespace {

EdgeOrdering checked(const Graph& g, EdgeOrdering o, const std::string& what) {
    const VerificationReport report = verify_cbo(g, o);
    if (!report.passed)
        throw ClaimViolation(what + ": constructed ordering failed at window " +
                                 std::to_string(report.first_failure->start_rank) + " (" +
                                 failure_kind_name(report.first_failure->kind) + ")",
                             *report.first_failure);
    return o;
}

void require_cbo(const Graph& g, const EdgeOrdering& o, const std::string& who) {
    if (!verify_cbo(g, o).passed)
        throw std::invalid_argument(who + ": input ordering is not a cyclic base ordering");
}

}  // namespace

ClaimViolation::ClaimViolation(const std::string& what, WindowFailure failure)
    : std::runtime_error(what), failure_(failure) {}

BlockPartition::BlockPartition(const EdgeOrdering& o, int num_blocks) {
    if (num_blocks < 1 || o.size() % num_blocks != 0)
        throw std::invalid_argument("BlockPartition: block count must divide the ordering size");
    block_size_ = o.size() / num_blocks;
    blocks_.resize(static_cast<std::size_t>(num_blocks));
    for (int b = 0; b < num_blocks; ++b) {
        auto& block = blocks_[static_cast<std::size_t>(b)];
        block.reserve(static_cast<std::size_t>(block_size_));
        for (int k = 0; k < block_size_; ++k)
            block.push_back(o.edge_at_rank(b * block_size_ + k + 1));
    }
}

EdgeOrdering theta_uniform_cbo(int k, int l) {
    if (k < 1) throw std::invalid_argument("theta_uniform_cbo: k must be >= 1");
    if (l < 1) throw std::invalid_argument("theta_uniform_cbo: l must be >= 1");
    const Graph g = theta(std::vector<int>(static_cast<std::size_t>(k), l));
    std::vector<int> ranks(static_cast<std::size_t>(k * l));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= l; ++j)
            ranks[static_cast<std::size_t>((i - 1) * l + (j - 1))] = (j - 1) * k + i;
    return checked(g, EdgeOrdering::from_ranks(ranks), "theta_uniform_cbo");
}

ComposedCbo series_cbo_equal(const Graph& g, const EdgeOrdering& og, const Graph& h,
                             const EdgeOrdering& oh, int u, int v) {
    if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges())
        throw std::invalid_argument("series_cbo_equal: parts must have equal vertex and edge counts");
    require_cbo(g, og, "series_cbo_equal");
    require_cbo(h, oh, "series_cbo_equal");

    Graph composed = series_compose(g, u, h, v);
    const int m = g.num_edges();
    std::vector<int> ranks(static_cast<std::size_t>(2 * m));
    for (int e = 0; e < m; ++e) {
        ranks[static_cast<std::size_t>(e)] = 2 * og.rank_of_edge(e) - 1;
        ranks[static_cast<std::size_t>(m + e)] = 2 * oh.rank_of_edge(e);
    }
    EdgeOrdering ordering = checked(composed, EdgeOrdering::from_ranks(ranks), "series_cbo_equal");
    return ComposedCbo{std::move(composed), std::move(ordering)};
}

ComposedCbo series_cbo_density(const Graph& g, const EdgeOrdering& og, const Graph& h,
                               const EdgeOrdering& oh, int u, int v) {
    const Rational d = density(g);
    if (d != density(h))
        throw std::invalid_argument("series_cbo_density: parts must have equal density");
    if (g.num_vertices() == h.num_vertices() && g.num_edges() == h.num_edges())
        return series_cbo_equal(g, og, h, oh, u, v);
    require_cbo(g, og, "series_cbo_density");
    require_cbo(h, oh, "series_cbo_density");

    const int s = static_cast<int>(d.num());
    const int t = static_cast<int>(d.den());
    if ((g.num_vertices() - 1) % t != 0 || (h.num_vertices() - 1) % t != 0)
        throw std::logic_error("series_cbo_density: reduced density must divide n-1");
    const BlockPartition p_blocks(og, s);
    const BlockPartition q_blocks(oh, s);

    Graph composed = series_compose(g, u, h, v);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(composed.num_edges()));
    const int shift = g.num_edges();  // h's edges sit after g's in the composite
    for (int b = 0; b < s; ++b) {
        for (int e : p_blocks.block(b)) order.push_back(e);
        for (int e : q_blocks.block(b)) order.push_back(shift + e);
    }
    EdgeOrdering ordering = checked(composed, EdgeOrdering(std::move(order)), "series_cbo_density");
    return ComposedCbo{std::move(composed), std::move(ordering)};
}

ComposedCbo series_cbo_multi(const std::vector<SeriesPart>& parts) {
    if (parts.empty()) throw std::invalid_argument("series_cbo_multi: no parts given");
    const Rational d = density(parts.front().graph);
    for (const SeriesPart& part : parts) {
        if (density(part.graph) != d)
            throw std::invalid_argument("series_cbo_multi: parts must have equal density");
        require_cbo(part.graph, part.ordering, "series_cbo_multi");
    }
    if (parts.size() == 1) return ComposedCbo{parts.front().graph, parts.front().ordering};

    const int s = static_cast<int>(d.num());

    Graph composed = parts.front().graph;
    std::vector<int> edge_offset{0};
    for (std::size_t i = 1; i < parts.size(); ++i) {
        edge_offset.push_back(composed.num_edges());
        composed = series_compose(composed, parts[i].glue_into, parts[i].graph, parts[i].glue_at);
    }

    std::vector<BlockPartition> blocks;
    blocks.reserve(parts.size());
    for (const SeriesPart& part : parts) blocks.emplace_back(part.ordering, s);

    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(composed.num_edges()));
    for (int b = 0; b < s; ++b)
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (int e : blocks[i].block(b)) order.push_back(edge_offset[i] + e);

    EdgeOrdering ordering = checked(composed, EdgeOrdering(std::move(order)), "series_cbo_multi");
    return ComposedCbo{std::move(composed), std::move(ordering)};
}

EdgeOrdering polygon_chain_cbo(int sides, int length) {
    const Graph g = polygon_chain(sides, length);
    const auto cycles = polygon_chain_cycles(sides, length);

    // Edge at cycle position q (1-based) of polygon p.
    const auto edge_index = [&](int p, int q) {
        const auto& c = cycles[static_cast<std::size_t>(p)];
        const int index = g.find_edge(c[static_cast<std::size_t>(q - 1)],
                                      c[static_cast<std::size_t>(q % sides)]);
        if (index < 0) throw std::logic_error("polygon_chain_cbo: missing edge");
        return index;
    };

    // Non-shared side classes: every cycle position except 1 (shared with the
    // previous polygon, or aligned with those shared edges on polygon 1) and
    // g-1 (shared with the next).
    std::vector<int> classes;
    for (int q = 2; q <= sides - 2; ++q) classes.push_back(q);
    classes.push_back(sides);

    std::vector<int> ranks(static_cast<std::size_t>(g.num_edges()), 0);
    int rank = 1;
    for (int q : classes)
        for (int p = 0; p < length; ++p) ranks[static_cast<std::size_t>(edge_index(p, q))] = rank++;

    // Remaining edges, left to right: the first polygon's position-1 side,
    // the shared edges, the last polygon's position-(g-1) side.
    ranks[static_cast<std::size_t>(edge_index(0, 1))] = rank++;
    for (int p = 1; p < length; ++p) ranks[static_cast<std::size_t>(edge_index(p, 1))] = rank++;
    ranks[static_cast<std::size_t>(edge_index(length - 1, sides - 1))] = rank++;

    return checked(g, EdgeOrdering::from_ranks(ranks), "polygon_chain_cbo");
}

EdgeOrdering circulant_alternating_candidate(int n, int x, int a, int b) {
    if (x == 1 || 2 * x >= n || x < 1)
        throw std::invalid_argument("circulant_alternating_candidate: need 1 < x < n/2");
    if (a < 0 || a >= n || b < 0 || b >= n)
        throw std::invalid_argument("circulant_alternating_candidate: offsets must be in 0..n-1");
    // circulant(n, {1, x}) puts the cycle edge leaving v_s at index s-1 and
    // the chord leaving v_s at index n+s-1.
    std::vector<int> ranks(static_cast<std::size_t>(2 * n));
    for (int i = 1; i <= n; ++i) {
        const int chord_vertex = (i + a) % n + 1;
        ranks[static_cast<std::size_t>(n + chord_vertex - 1)] = 2 * i - 1;
        const int cycle_vertex = (i + b) % n + 1;
        ranks[static_cast<std::size_t>(cycle_vertex - 1)] = 2 * i;
    }
    return EdgeOrdering::from_ranks(ranks);
}

std::optional<EdgeOrdering> circulant_alternating_cbo(int n, int x) {
    const Graph g = circulant(n, {1, x});
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            EdgeOrdering candidate = circulant_alternating_candidate(n, x, a, b);
            if (verify_cbo(g, candidate).passed) return candidate;
        }
    }
    return std::nullopt;
}

}  // namespace cbo
