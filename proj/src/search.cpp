#include "cbo/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "cbo/analysis.hpp"

namespace cbo {

const char* search_status_name(SearchStatus status) {
    switch (status) {
        case SearchStatus::found: return "found";
        case SearchStatus::exhausted: return "exhausted";
        case SearchStatus::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Searcher {
    const Graph& g;
    const SearchBudget& budget;
    int n;
    int m;
    std::vector<int> order;      // order[p] = edge at rank p+1
    std::vector<char> used;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    Clock::time_point start = Clock::now();

    explicit Searcher(const Graph& graph, const SearchBudget& b)
        : g(graph), budget(b), n(graph.num_vertices()), m(graph.num_edges()),
          used(static_cast<std::size_t>(graph.num_edges()), 0) {
        order.reserve(static_cast<std::size_t>(m));
    }

    bool budget_hit() {
        if (budget.max_nodes != 0 && nodes >= budget.max_nodes) return out_of_budget = true;
        if (budget.max_seconds > 0.0 && (nodes & 1023u) == 0 &&
            std::chrono::duration<double>(Clock::now() - start).count() > budget.max_seconds)
            return out_of_budget = true;
        return false;
    }

    // Union-find over the trailing min(assigned, n-2) edges. Extending the
    // assignment by a candidate keeps every progression acyclic iff the
    // candidate joins two different components here, so one build per depth
    // serves every candidate with two finds.
    DisjointSets trailing_base() const {
        const int assigned = static_cast<int>(order.size());
        DisjointSets sets(n);
        for (int p = std::max(0, assigned + 2 - n); p < assigned; ++p) {
            const Edge& e = g.edge(order[static_cast<std::size_t>(p)]);
            sets.unite(e.u - 1, e.v - 1);  // acyclic by construction
        }
        return sets;
    }

    // Windows that wrap past rank m pair a tail of the assignment with its
    // head. Their head pieces are known from the start, so each one can be
    // pruned as soon as any of its tail edges is placed: the placed part of a
    // wrap window must be a forest in every completion. At r = m this is the
    // full spanning-tree check for all n-2 wrap windows.
    bool wraparound_ok(int assigned) const {
        for (int start_rank = std::max(2, m - n + 3); start_rank <= assigned; ++start_rank) {
            DisjointSets sets(n);
            bool ok = true;
            for (int k = 0; k < n - 1 && ok; ++k) {
                int rank = start_rank + k;
                if (rank > m) rank -= m;
                if (rank > assigned) continue;  // tail edge not placed yet
                const Edge& e = g.edge(order[static_cast<std::size_t>(rank - 1)]);
                ok = sets.unite(e.u - 1, e.v - 1);
            }
            if (!ok) return false;
        }
        return true;
    }

    bool extend() {
        const int assigned = static_cast<int>(order.size());
        if (assigned == m) return true;
        DisjointSets base = trailing_base();
        for (int e = 0; e < m; ++e) {
            if (used[static_cast<std::size_t>(e)]) continue;
            if (budget_hit()) return false;
            ++nodes;
            const Edge& edge = g.edge(e);
            if (base.find(edge.u - 1) == base.find(edge.v - 1)) continue;  // window cycle
            used[static_cast<std::size_t>(e)] = 1;
            order.push_back(e);
            if ((assigned + 1 <= m - n + 2 || wraparound_ok(assigned + 1)) && extend())
                return true;
            order.pop_back();
            used[static_cast<std::size_t>(e)] = 0;
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

SearchOutcome find_cbo(const Graph& g, const SearchBudget& budget, bool deterministic) {
    (void)deterministic;  // the search runs single-threaded; output never varies
    if (!is_connected(g)) throw std::invalid_argument("find_cbo: graph must be connected");
    const int n = g.num_vertices();
    const int m = g.num_edges();
    if (m < n - 1) throw std::invalid_argument("find_cbo: too few edges for a spanning tree");

    SearchOutcome outcome;
    const auto start = Clock::now();

    if (m == 0) {
        outcome.status = SearchStatus::found;
        outcome.ordering = EdgeOrdering(std::vector<int>{});
    } else {
        Searcher searcher(g, budget);
        searcher.order.push_back(0);  // rotation symmetry: some CBO starts with edge 0
        searcher.used[0] = 1;
        const bool found = searcher.extend();
        outcome.nodes_explored = searcher.nodes;
        if (found) {
            EdgeOrdering ordering(searcher.order);
            if (!verify_cbo(g, ordering).passed)
                throw std::logic_error("find_cbo: search returned a non-CBO ordering");
            outcome.status = SearchStatus::found;
            outcome.ordering = std::move(ordering);
        } else {
            outcome.status = searcher.out_of_budget ? SearchStatus::budget_exceeded
                                                    : SearchStatus::exhausted;
        }
    }
    outcome.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return outcome;
}

namespace {

std::string edges_string(const Graph& g) {
    std::string text;
    for (int i = 0; i < g.num_edges(); ++i) {
        if (i) text += ';';
        const Edge& e = g.edge(i);
        text += std::to_string(e.u) + "-" + std::to_string(e.v);
    }
    return text;
}

// All vertex pairs of an n-vertex graph in lexicographic order.
std::vector<Edge> vertex_pairs(int n) {
    std::vector<Edge> pairs;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) pairs.push_back({u, v});
    return pairs;
}

void enumerate_simple(int n, int max_m, std::vector<Graph>& out) {
    const std::vector<Edge> pairs = vertex_pairs(n);
    const int p = static_cast<int>(pairs.size());
    if (p > 30) throw std::invalid_argument("sweep_small_graphs: n too large to enumerate");
    for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
        const int m = std::popcount(mask);
        if (m < n - 1 || m > max_m) continue;
        std::vector<Edge> edges;
        edges.reserve(static_cast<std::size_t>(m));
        for (int i = 0; i < p; ++i)
            if (mask & (1u << i)) edges.push_back(pairs[static_cast<std::size_t>(i)]);
        Graph g(n, std::move(edges));
        if (is_connected(g)) out.push_back(std::move(g));
    }
}

void enumerate_multi(int n, int max_m, std::vector<Graph>& out) {
    const std::vector<Edge> pairs = vertex_pairs(n);
    std::vector<int> multiplicity(pairs.size(), 0);
    // Depth-first over multiplicity vectors, total edge count bounded by max_m.
    const auto recurse = [&](auto&& self, std::size_t index, int total) -> void {
        if (index == pairs.size()) {
            if (total < n - 1) return;
            std::vector<Edge> edges;
            edges.reserve(static_cast<std::size_t>(total));
            for (std::size_t i = 0; i < pairs.size(); ++i)
                for (int c = 0; c < multiplicity[i]; ++c) edges.push_back(pairs[i]);
            Graph g(n, std::move(edges));
            if (is_connected(g)) out.push_back(std::move(g));
            return;
        }
        for (int c = 0; total + c <= max_m; ++c) {
            multiplicity[index] = c;
            self(self, index + 1, total + c);
        }
        multiplicity[index] = 0;
    };
    recurse(recurse, 0, 0);
}

// Exact canonical form: the lexicographically smallest edge multiset over all
// vertex relabelings. Exponential in n, fine at sweep scale.
std::vector<std::pair<int, int>> canonical_form(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::pair<int, int>> best;
    do {
        std::vector<std::pair<int, int>> mapped;
        mapped.reserve(g.edges().size());
        for (const Edge& e : g.edges()) {
            int u = perm[static_cast<std::size_t>(e.u - 1)];
            int v = perm[static_cast<std::size_t>(e.v - 1)];
            mapped.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(mapped.begin(), mapped.end());
        if (best.empty() || mapped < best) best = std::move(mapped);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

SweepRow sweep_one(const Graph& g, const SearchBudget& budget) {
    SweepRow row;
    row.n = g.num_vertices();
    row.m = g.num_edges();
    row.edges = edges_string(g);
    row.uniformly_dense =
        g.num_vertices() < 2 ? true : is_uniformly_dense(g).uniformly_dense;
    const SearchOutcome outcome = find_cbo(g, budget);
    row.status = outcome.status;
    row.nodes_explored = outcome.nodes_explored;
    if (outcome.status != SearchStatus::budget_exceeded)
        row.agree = row.uniformly_dense == (outcome.status == SearchStatus::found);
    return row;
}

}  // namespace

std::vector<SweepRow> sweep_small_graphs(const SweepOptions& options) {
    if (options.max_n < 1) throw std::invalid_argument("sweep_small_graphs: max_n must be >= 1");
    if (options.workers < 1) throw std::invalid_argument("sweep_small_graphs: workers must be >= 1");

    std::vector<Graph> graphs;
    for (int n = 1; n <= options.max_n; ++n) {
        if (options.multigraph && n >= 2)
            enumerate_multi(n, options.max_m, graphs);
        else
            enumerate_simple(n, options.max_m, graphs);
    }

    if (options.dedup) {
        std::set<std::vector<std::pair<int, int>>> seen;
        std::vector<Graph> unique;
        for (Graph& g : graphs)
            if (seen.insert(canonical_form(g)).second) unique.push_back(std::move(g));
        graphs = std::move(unique);
    }

    std::vector<SweepRow> rows(graphs.size());
    if (options.workers == 1) {
        for (std::size_t i = 0; i < graphs.size(); ++i) rows[i] = sweep_one(graphs[i], options.budget);
    } else {
        std::atomic<std::size_t> next{0};
        const auto work = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= graphs.size()) return;
                rows[i] = sweep_one(graphs[i], options.budget);
            }
        };
        std::vector<std::thread> pool;
        const int count = std::min<int>(options.workers, static_cast<int>(graphs.size()));
        for (int w = 0; w < std::max(1, count); ++w) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }
    return rows;
}

}  // namespace cbo
