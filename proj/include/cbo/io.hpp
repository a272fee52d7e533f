#pragma once

#include <string>
#include <vector>

#include "cbo/analysis.hpp"
#include "cbo/graph.hpp"
#include "cbo/ordering.hpp"
#include "cbo/search.hpp"

namespace cbo {

inline constexpr const char* kFormatTag = "cbo/1";
inline constexpr const char* kToolVersion = "0.1.0";

// Graph JSON: {"edges": [[u, v], ...], "format": "cbo/1", "num_vertices": n}
// with 1-based endpoints in construction order. Serialization is canonical
// (sorted keys, two-space indent, trailing newline), so write(read(x)) of a
// canonical file is byte-identical.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

// Ordering JSON: {"format": "cbo/1", "order": [edge indices by rank]}.
std::string ordering_to_json(const EdgeOrdering& o);
EdgeOrdering ordering_from_json(const std::string& text);

std::string verification_report_to_json(const VerificationReport& report);

// Analysis report: density as a "p/q" string, the uniform-density verdict
// with any witness, and the min-degree check.
std::string analysis_report_to_json(const Graph& g, const DensityReport& density_report,
                                    bool min_degree_ok);

// Undirected DOT. With an ordering, edges are emitted in rank order and
// labelled with their rank; without one, in edge-index order, unlabelled.
std::string to_dot(const Graph& g, const EdgeOrdering* ordering = nullptr);

// CSV with columns n,m,edges,uniformly_dense,cbo_status,nodes_explored,agree.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace cbo
