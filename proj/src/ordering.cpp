#include "cbo/ordering.hpp"

#include <stdexcept>
#include <string>

namespace cbo {

EdgeOrdering::EdgeOrdering(std::vector<int> order) : order_(std::move(order)) {
    const int m = size();
    rank_of_.assign(static_cast<std::size_t>(m), 0);
    for (int p = 0; p < m; ++p) {
        const int e = order_[static_cast<std::size_t>(p)];
        if (e < 0 || e >= m)
            throw std::invalid_argument("EdgeOrdering: edge index out of range");
        if (rank_of_[static_cast<std::size_t>(e)] != 0)
            throw std::invalid_argument("EdgeOrdering: edge " + std::to_string(e) +
                                        " appears more than once");
        rank_of_[static_cast<std::size_t>(e)] = p + 1;
    }
}

EdgeOrdering EdgeOrdering::from_ranks(const std::vector<int>& ranks) {
    const int m = static_cast<int>(ranks.size());
    std::vector<int> order(static_cast<std::size_t>(m), -1);
    for (int e = 0; e < m; ++e) {
        const int r = ranks[static_cast<std::size_t>(e)];
        if (r < 1 || r > m) throw std::invalid_argument("EdgeOrdering: rank out of range");
        order[static_cast<std::size_t>(r - 1)] = e;
    }
    return EdgeOrdering(std::move(order));
}

int EdgeOrdering::edge_at_rank(int rank) const {
    if (rank < 1 || rank > size())
        throw std::invalid_argument("EdgeOrdering: rank out of range");
    return order_[static_cast<std::size_t>(rank - 1)];
}

int EdgeOrdering::rank_of_edge(int edge) const {
    if (edge < 0 || edge >= size())
        throw std::invalid_argument("EdgeOrdering: edge index out of range");
    return rank_of_[static_cast<std::size_t>(edge)];
}

const char* failure_kind_name(FailureKind kind) {
    switch (kind) {
        case FailureKind::cycle: return "cycle";
        case FailureKind::disconnected: return "disconnected";
        case FailureKind::cardinality: return "cardinality";
    }
    return "?";
}

VerificationReport verify_cbo(const Graph& g, const EdgeOrdering& o) {
    const int n = g.num_vertices();
    const int m = g.num_edges();
    if (o.size() != m)
        throw std::invalid_argument("verify_cbo: ordering length does not match edge count");
    if (!is_connected(g)) throw std::invalid_argument("verify_cbo: graph is not connected");
    if (m < n - 1)
        throw std::invalid_argument("verify_cbo: fewer edges than any spanning tree needs");

    VerificationReport report;
    report.total_windows = m;

    // Each window is rebuilt with a fresh union-find. At desk scale the
    // O(m * n * alpha) total cost is irrelevant and the code stays obviously
    // equivalent to the per-window oracle.
    for (int start = 1; start <= m; ++start) {
        DisjointSets sets(n);
        bool cyclic = false;
        for (int k = 0; k < n - 1; ++k) {
            int rank = start + k;
            if (rank > m) rank -= m;
            const Edge& e = g.edge(o.edge_at_rank(rank));
            if (!sets.unite(e.u - 1, e.v - 1)) {
                cyclic = true;
                break;
            }
        }
        if (cyclic || sets.components() != 1) {
            report.first_failure =
                WindowFailure{start, cyclic ? FailureKind::cycle : FailureKind::disconnected};
            return report;
        }
    }
    report.passed = true;
    return report;
}

EdgeOrdering rotate(const EdgeOrdering& o, int shift) {
    const int m = o.size();
    if (m == 0) return o;
    int s = shift % m;
    if (s < 0) s += m;
    std::vector<int> rotated(static_cast<std::size_t>(m));
    for (int p = 0; p < m; ++p)
        rotated[static_cast<std::size_t>((p + s) % m)] = o.order()[static_cast<std::size_t>(p)];
    return EdgeOrdering(std::move(rotated));
}

}  // namespace cbo
