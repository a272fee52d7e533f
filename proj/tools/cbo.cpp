// Command-line front end: generates family graphs, verifies and constructs
// cyclic base orderings, analyzes density conditions, runs the exhaustive
// search and the small-graph sweep, and exports DOT drawings.
//
// Exit codes: 0 success/pass, 1 semantic failure (not a CBO, search
// exhausted or out of budget, sweep disagreement), 2 usage or parse error.

#include <chrono>
#include <ctime>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cbo/analysis.hpp"
#include "cbo/constructors.hpp"
#include "cbo/families.hpp"
#include "cbo/fixtures.hpp"
#include "cbo/io.hpp"
#include "cbo/ordering.hpp"
#include "cbo/search.hpp"

namespace {

using nlohmann::json;

std::string timestamp_utc() {
    const std::time_t now = std::time(nullptr);
    char buffer[32];
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buffer;
}

// One manifest per run, so any produced file can be traced back to the exact
// command that made it. Deterministic outputs never embed the timestamp.
struct Manifest {
    std::string command;
    json parameters = json::object();
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::string outcome = "ok";

    json to_json() const {
        return json{
            {"command", command},   {"inputs", inputs},   {"outcome", outcome},
            {"outputs", outputs},   {"parameters", parameters},
            {"timestamp", timestamp_utc()}, {"version", cbo::kToolVersion},
        };
    }

    void emit(const std::optional<std::string>& primary_out) const {
        std::cerr << "manifest: " << to_json().dump() << "\n";
        if (primary_out) cbo::write_file(*primary_out + ".manifest.json", to_json().dump(2) + "\n");
    }
};

void write_or_print(const std::optional<std::string>& path, const std::string& contents,
                    Manifest& manifest) {
    if (path) {
        cbo::write_file(*path, contents);
        manifest.outputs.push_back(*path);
    } else {
        std::cout << contents;
    }
}

cbo::Graph load_graph(const std::string& path, Manifest& manifest) {
    manifest.inputs.push_back(path);
    return cbo::graph_from_json(cbo::read_file(path));
}

cbo::EdgeOrdering load_ordering(const std::string& path, Manifest& manifest) {
    manifest.inputs.push_back(path);
    return cbo::ordering_from_json(cbo::read_file(path));
}

struct CommonOpts {
    std::string graph_path;
    std::string ordering_path;
    std::string out_path;

    std::optional<std::string> out() const {
        return out_path.empty() ? std::nullopt : std::optional<std::string>(out_path);
    }
};

int run_gen(const std::string& spec_text, const CommonOpts& opts) {
    Manifest manifest;
    manifest.command = "gen";
    manifest.parameters["spec"] = spec_text;
    const cbo::FamilySpec spec = cbo::parse_family_spec(spec_text);
    if (spec.family == cbo::Family::theta_family) {
        int unit_paths = 0;
        for (int l : spec.params) unit_paths += l == 1;
        if (unit_paths > 1)
            std::cerr << "note: " << unit_paths
                      << " paths of length 1 produce parallel edges between the hubs\n";
    }
    const cbo::Graph g = cbo::make_graph(spec);
    manifest.outcome = "ok: " + std::to_string(g.num_vertices()) + " vertices, " +
                       std::to_string(g.num_edges()) + " edges";
    write_or_print(opts.out(), cbo::graph_to_json(g), manifest);
    manifest.emit(opts.out());
    return 0;
}

int run_verify(const CommonOpts& opts) {
    Manifest manifest;
    manifest.command = "verify";
    const cbo::Graph g = load_graph(opts.graph_path, manifest);
    const cbo::EdgeOrdering o = load_ordering(opts.ordering_path, manifest);
    const cbo::VerificationReport report = cbo::verify_cbo(g, o);
    manifest.outcome = report.passed
                           ? "pass"
                           : "fail: window " + std::to_string(report.first_failure->start_rank);
    write_or_print(opts.out(), cbo::verification_report_to_json(report), manifest);
    manifest.emit(opts.out());
    return report.passed ? 0 : 1;
}

int run_analyze(const CommonOpts& opts) {
    Manifest manifest;
    manifest.command = "analyze";
    const cbo::Graph g = load_graph(opts.graph_path, manifest);
    const cbo::DensityReport density_report = cbo::is_uniformly_dense(g);
    const bool min_degree_ok = cbo::min_degree_condition(g);
    manifest.outcome = density_report.uniformly_dense ? "uniformly dense" : "not uniformly dense";
    write_or_print(opts.out(), cbo::analysis_report_to_json(g, density_report, min_degree_ok),
                   manifest);
    manifest.emit(opts.out());
    return 0;
}

int run_search(const CommonOpts& opts, const cbo::SearchBudget& budget, bool deterministic) {
    Manifest manifest;
    manifest.command = "search";
    manifest.parameters["node_budget"] = budget.max_nodes;
    manifest.parameters["time_budget"] = budget.max_seconds;
    manifest.parameters["deterministic"] = deterministic;
    const cbo::Graph g = load_graph(opts.graph_path, manifest);
    const cbo::SearchOutcome outcome = cbo::find_cbo(g, budget, deterministic);
    manifest.outcome = cbo::search_status_name(outcome.status);
    std::cerr << cbo::search_status_name(outcome.status) << " (nodes=" << outcome.nodes_explored
              << ")";
    if (outcome.status == cbo::SearchStatus::exhausted)
        std::cerr << ": not cyclically orderable";
    std::cerr << "\n";
    if (outcome.ordering) write_or_print(opts.out(), cbo::ordering_to_json(*outcome.ordering), manifest);
    manifest.emit(opts.out());
    return outcome.status == cbo::SearchStatus::found ? 0 : 1;
}

struct ConstructOpts {
    std::string method;
    std::vector<int> params;
    std::string graph2_path;
    std::string ordering2_path;
    int glue_u = 1;
    int glue_v = 1;
    std::vector<std::string> parts;
    std::string graph_out;
};

cbo::SeriesPart parse_part(const std::string& text, Manifest& manifest) {
    std::vector<std::string> fields;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ':')) fields.push_back(item);
    if (fields.size() != 2 && fields.size() != 4)
        throw std::invalid_argument(
            "--part expects graph.json:ordering.json[:glue_into:glue_at]");
    cbo::SeriesPart part{load_graph(fields[0], manifest), load_ordering(fields[1], manifest), 1, 1};
    if (fields.size() == 4) {
        part.glue_into = std::stoi(fields[2]);
        part.glue_at = std::stoi(fields[3]);
    }
    return part;
}

int run_construct(const ConstructOpts& c, const CommonOpts& opts) {
    Manifest manifest;
    manifest.command = "construct";
    manifest.parameters["method"] = c.method;
    manifest.parameters["params"] = c.params;

    const auto need_params = [&](std::size_t count) {
        if (c.params.size() != count)
            throw std::invalid_argument("method '" + c.method + "' takes " +
                                        std::to_string(count) + " numeric parameter(s)");
    };

    std::optional<cbo::Graph> graph;
    std::optional<cbo::EdgeOrdering> ordering;

    if (c.method == "theta-uniform") {
        need_params(2);
        ordering = cbo::theta_uniform_cbo(c.params[0], c.params[1]);
        graph = cbo::theta(std::vector<int>(static_cast<std::size_t>(c.params[0]), c.params[1]));
    } else if (c.method == "polygon") {
        need_params(2);
        ordering = cbo::polygon_chain_cbo(c.params[0], c.params[1]);
        graph = cbo::polygon_chain(c.params[0], c.params[1]);
    } else if (c.method == "circulant-alt") {
        need_params(2);
        const int n = c.params[0], x = c.params[1];
        auto found = cbo::circulant_alternating_cbo(n, x);
        if (!found) {
            manifest.outcome = "no alternating ordering exists for these parameters";
            std::cerr << manifest.outcome << "\n";
            manifest.emit(std::nullopt);
            return 1;
        }
        ordering = std::move(*found);
        graph = cbo::circulant(n, {1, x});
    } else if (c.method == "series-equal" || c.method == "series-density") {
        need_params(0);
        const cbo::Graph g = load_graph(opts.graph_path, manifest);
        const cbo::EdgeOrdering og = load_ordering(opts.ordering_path, manifest);
        const cbo::Graph h = load_graph(c.graph2_path, manifest);
        const cbo::EdgeOrdering oh = load_ordering(c.ordering2_path, manifest);
        cbo::ComposedCbo composed =
            c.method == "series-equal"
                ? cbo::series_cbo_equal(g, og, h, oh, c.glue_u, c.glue_v)
                : cbo::series_cbo_density(g, og, h, oh, c.glue_u, c.glue_v);
        graph = std::move(composed.graph);
        ordering = std::move(composed.ordering);
    } else if (c.method == "series-multi") {
        need_params(0);
        if (c.parts.empty()) throw std::invalid_argument("series-multi needs --part arguments");
        std::vector<cbo::SeriesPart> parts;
        for (const std::string& text : c.parts) parts.push_back(parse_part(text, manifest));
        cbo::ComposedCbo composed = cbo::series_cbo_multi(parts);
        graph = std::move(composed.graph);
        ordering = std::move(composed.ordering);
    } else {
        throw std::invalid_argument(
            "unknown method '" + c.method +
            "' (theta-uniform | series-equal | series-density | series-multi | polygon | "
            "circulant-alt)");
    }

    manifest.outcome = "ok: " + std::to_string(ordering->size()) + " ranks";
    write_or_print(opts.out(), cbo::ordering_to_json(*ordering), manifest);
    if (!c.graph_out.empty()) {
        cbo::write_file(c.graph_out, cbo::graph_to_json(*graph));
        manifest.outputs.push_back(c.graph_out);
    }
    manifest.emit(opts.out());
    return 0;
}

int run_sweep(const cbo::SweepOptions& options, const CommonOpts& opts) {
    Manifest manifest;
    manifest.command = "sweep";
    manifest.parameters["max_n"] = options.max_n;
    manifest.parameters["max_m"] = options.max_m;
    manifest.parameters["dedup"] = options.dedup;
    manifest.parameters["multigraph"] = options.multigraph;
    manifest.parameters["workers"] = options.workers;

    const std::vector<cbo::SweepRow> rows = cbo::sweep_small_graphs(options);
    write_or_print(opts.out(), cbo::sweep_to_csv(rows), manifest);

    std::size_t decided = 0, agreements = 0, undecided = 0;
    std::vector<const cbo::SweepRow*> flagged;
    for (const cbo::SweepRow& row : rows) {
        if (!row.agree) {
            ++undecided;
            continue;
        }
        ++decided;
        if (*row.agree)
            ++agreements;
        else
            flagged.push_back(&row);
    }

    std::ostream& summary = opts.out() ? std::cout : std::cerr;
    summary << "sweep: " << rows.size() << " graphs, " << agreements << "/" << decided
            << " agreements";
    if (undecided) summary << ", " << undecided << " undecided (budget)";
    summary << "\n";
    for (const cbo::SweepRow* row : flagged)
        summary << "DISAGREEMENT n=" << row->n << " m=" << row->m << " edges=" << row->edges
                << " uniformly_dense=" << (row->uniformly_dense ? "true" : "false")
                << " cbo=" << cbo::search_status_name(row->status) << "\n";

    manifest.outcome = flagged.empty() ? "ok: " + std::to_string(agreements) + "/" +
                                             std::to_string(decided) + " agree"
                                       : std::to_string(flagged.size()) + " disagreements";
    manifest.emit(opts.out());
    return flagged.empty() ? 0 : 1;
}

int run_export_dot(const CommonOpts& opts) {
    Manifest manifest;
    manifest.command = "export-dot";
    const cbo::Graph g = load_graph(opts.graph_path, manifest);
    std::optional<cbo::EdgeOrdering> ordering;
    if (!opts.ordering_path.empty()) ordering = load_ordering(opts.ordering_path, manifest);
    write_or_print(opts.out(), cbo::to_dot(g, ordering ? &*ordering : nullptr), manifest);
    manifest.emit(opts.out());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic base ordering toolkit"};
    app.set_version_flag("--version", std::string("cbo ") + cbo::kToolVersion);
    app.require_subcommand(1);

    CommonOpts opts;
    cbo::SearchBudget budget;
    bool deterministic = true;

    std::string gen_spec;
    CLI::App* gen = app.add_subcommand("gen", "generate a family graph as Graph JSON");
    gen->add_option("spec", gen_spec, cbo::family_spec_grammar())->required();
    gen->add_option("-o,--out", opts.out_path, "output path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "check an ordering against a graph");
    verify->add_option("-g,--graph", opts.graph_path, "graph JSON file")->required();
    verify->add_option("-r,--ordering", opts.ordering_path, "ordering JSON file")->required();
    verify->add_option("-o,--out", opts.out_path, "report path (default stdout)");

    ConstructOpts construct_opts;
    CLI::App* construct = app.add_subcommand("construct", "build a verified ordering");
    construct->add_option("method", construct_opts.method,
                          "theta-uniform | series-equal | series-density | series-multi | "
                          "polygon | circulant-alt")
        ->required();
    construct->add_option("params", construct_opts.params, "numeric method parameters");
    construct->add_option("-g,--graph", opts.graph_path, "first part graph (series methods)");
    construct->add_option("-r,--ordering", opts.ordering_path, "first part ordering");
    construct->add_option("--graph2", construct_opts.graph2_path, "second part graph");
    construct->add_option("--ordering2", construct_opts.ordering2_path, "second part ordering");
    construct->add_option("-u,--glue-u", construct_opts.glue_u, "glue vertex in the first part");
    construct->add_option("-v,--glue-v", construct_opts.glue_v, "glue vertex in the second part");
    construct->add_option("--part", construct_opts.parts,
                          "series-multi part: graph.json:ordering.json[:glue_into:glue_at]");
    construct->add_option("-o,--out", opts.out_path, "ordering output path (default stdout)");
    construct->add_option("--graph-out", construct_opts.graph_out,
                          "also write the constructed graph");

    CLI::App* analyze = app.add_subcommand("analyze", "density and degree conditions");
    analyze->add_option("-g,--graph", opts.graph_path, "graph JSON file")->required();
    analyze->add_option("-o,--out", opts.out_path, "report path (default stdout)");

    CLI::App* search = app.add_subcommand("search", "exhaustive search for an ordering");
    search->add_option("-g,--graph", opts.graph_path, "graph JSON file")->required();
    search->add_option("--node-budget", budget.max_nodes, "node limit (0 = unlimited)");
    search->add_option("--time-budget", budget.max_seconds, "seconds limit (0 = unlimited)");
    search->add_flag("--deterministic,!--no-deterministic", deterministic,
                     "reproducible search order (default on)");
    search->add_option("-o,--out", opts.out_path, "ordering output path (default stdout)");

    cbo::SweepOptions sweep_options;
    CLI::App* sweep = app.add_subcommand("sweep", "conjecture cross-check over small graphs");
    sweep->add_option("--max-n", sweep_options.max_n, "largest vertex count (default 5)");
    sweep->add_option("--max-m", sweep_options.max_m, "largest edge count (default 8)");
    sweep->add_flag("--dedup", sweep_options.dedup, "drop isomorphic duplicates");
    sweep->add_flag("--multigraph", sweep_options.multigraph,
                    "enumerate parallel edges too (keep n small)");
    sweep->add_option("--node-budget", sweep_options.budget.max_nodes,
                      "per-graph node limit (0 = unlimited)");
    sweep->add_option("--time-budget", sweep_options.budget.max_seconds,
                      "per-graph seconds limit (0 = unlimited)");
    sweep->add_option("--workers", sweep_options.workers, "worker threads (default 1)");
    sweep->add_option("-o,--out", opts.out_path, "CSV path (default stdout)");

    CLI::App* export_dot = app.add_subcommand("export-dot", "emit a DOT drawing");
    export_dot->add_option("-g,--graph", opts.graph_path, "graph JSON file")->required();
    export_dot->add_option("-r,--ordering", opts.ordering_path, "ordering JSON file");
    export_dot->add_option("-o,--out", opts.out_path, "DOT path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(gen)) return run_gen(gen_spec, opts);
        if (app.got_subcommand(verify)) return run_verify(opts);
        if (app.got_subcommand(construct)) return run_construct(construct_opts, opts);
        if (app.got_subcommand(analyze)) return run_analyze(opts);
        if (app.got_subcommand(search)) return run_search(opts, budget, deterministic);
        if (app.got_subcommand(sweep)) return run_sweep(sweep_options, opts);
        if (app.got_subcommand(export_dot)) return run_export_dot(opts);
    } catch (const cbo::ClaimViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
