#include "cbo/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cbo {

namespace {

using nlohmann::json;

std::string dump_canonical(const json& value) { return value.dump(2) + "\n"; }

json parse(const std::string& text) {
    json value = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (value.is_discarded()) throw std::invalid_argument("invalid JSON input");
    return value;
}

void check_format_tag(const json& value) {
    if (value.contains("format") && value.at("format") != kFormatTag)
        throw std::invalid_argument("unsupported format tag (expected \"" +
                                    std::string(kFormatTag) + "\")");
}

}  // namespace

std::string graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back(json::array({e.u, e.v}));
    return dump_canonical(json{
        {"edges", std::move(edges)},
        {"format", kFormatTag},
        {"num_vertices", g.num_vertices()},
    });
}

Graph graph_from_json(const std::string& text) {
    const json value = parse(text);
    check_format_tag(value);
    if (!value.contains("num_vertices") || !value.contains("edges"))
        throw std::invalid_argument("graph JSON needs \"num_vertices\" and \"edges\"");
    if (!value.at("num_vertices").is_number_integer())
        throw std::invalid_argument("\"num_vertices\" must be an integer");
    std::vector<Edge> edges;
    for (const json& pair : value.at("edges")) {
        if (!pair.is_array() || pair.size() != 2 || !pair.at(0).is_number_integer() ||
            !pair.at(1).is_number_integer())
            throw std::invalid_argument("each edge must be a 2-element integer array");
        edges.push_back({pair.at(0).get<int>(), pair.at(1).get<int>()});
    }
    return Graph(value.at("num_vertices").get<int>(), std::move(edges));
}

std::string ordering_to_json(const EdgeOrdering& o) {
    return dump_canonical(json{
        {"format", kFormatTag},
        {"order", o.order()},
    });
}

EdgeOrdering ordering_from_json(const std::string& text) {
    const json value = parse(text);
    check_format_tag(value);
    if (!value.contains("order") || !value.at("order").is_array())
        throw std::invalid_argument("ordering JSON needs an \"order\" array");
    std::vector<int> order;
    for (const json& item : value.at("order")) {
        if (!item.is_number_integer())
            throw std::invalid_argument("\"order\" entries must be integers");
        order.push_back(item.get<int>());
    }
    return EdgeOrdering(std::move(order));
}

std::string verification_report_to_json(const VerificationReport& report) {
    json value{
        {"format", kFormatTag},
        {"passed", report.passed},
        {"total_windows", report.total_windows},
    };
    if (report.first_failure) {
        value["first_failure"] = json{
            {"kind", failure_kind_name(report.first_failure->kind)},
            {"start_rank", report.first_failure->start_rank},
        };
    } else {
        value["first_failure"] = nullptr;
    }
    return dump_canonical(value);
}

std::string analysis_report_to_json(const Graph& g, const DensityReport& density_report,
                                    bool min_degree_ok) {
    json value{
        {"density", density_report.graph_density.str()},
        {"format", kFormatTag},
        {"min_degree", min_degree(g)},
        {"min_degree_ok", min_degree_ok},
        {"uniformly_dense", density_report.uniformly_dense},
    };
    if (density_report.witness) {
        value["witness"] = density_report.witness->vertices;
        value["witness_density"] = density_report.witness->density.str();
    } else {
        value["witness"] = nullptr;
    }
    return dump_canonical(value);
}

std::string to_dot(const Graph& g, const EdgeOrdering* ordering) {
    std::ostringstream out;
    out << "graph cbo {\n";
    for (int v = 1; v <= g.num_vertices(); ++v) out << "  " << v << ";\n";
    if (ordering) {
        if (ordering->size() != g.num_edges())
            throw std::invalid_argument("to_dot: ordering length does not match edge count");
        for (int rank = 1; rank <= ordering->size(); ++rank) {
            const Edge& e = g.edge(ordering->edge_at_rank(rank));
            out << "  " << e.u << " -- " << e.v << " [label=" << rank << "];\n";
        }
    } else {
        for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "n,m,edges,uniformly_dense,cbo_status,nodes_explored,agree\n";
    for (const SweepRow& row : rows) {
        out << row.n << ',' << row.m << ',' << row.edges << ','
            << (row.uniformly_dense ? "true" : "false") << ',' << search_status_name(row.status)
            << ',' << row.nodes_explored << ','
            << (row.agree ? (*row.agree ? "yes" : "no") : "unknown") << '\n';
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << contents;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace cbo
