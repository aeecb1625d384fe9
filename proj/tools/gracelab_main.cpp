// Command-line front end: build and label compound graphs, verify documents,
// run the search oracle, emit the demo corpus, export DOT.
//
// Exit codes: 0 = success / property verified, 1 = verification failure or
// inconclusive search, 2 = usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gracelab/document.hpp"
#include "gracelab/oracle.hpp"
#include "gracelab/shapes.hpp"

namespace {

using namespace gracelab;

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ValidationError("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw ValidationError("cannot write " + out_path);
    f << text;
}

// Graph descriptor for `search`: a stock shape or raw graph6.
Graph parse_search_target(const std::string& text) {
    auto colon = text.find(':');
    std::string kind = text.substr(0, colon == std::string::npos ? text.size() : colon);
    std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
    auto one = [&]() {
        int v = 0;
        try {
            v = std::stoi(rest);
        } catch (...) {
            throw ParseError("bad parameter in '" + text + "'");
        }
        return v;
    };
    auto two = [&]() {
        auto comma = rest.find(',');
        if (comma == std::string::npos) throw ParseError("'" + text + "' wants m,n");
        try {
            return std::pair{std::stoi(rest.substr(0, comma)), std::stoi(rest.substr(comma + 1))};
        } catch (...) {
            throw ParseError("bad parameters in '" + text + "'");
        }
    };
    if (kind == "path") return make_path_graph(one());
    if (kind == "cycle") return make_cycle_graph(one());
    if (kind == "kmn") {
        auto [m, n] = two();
        return make_complete_bipartite_graph(m, n);
    }
    if (kind == "grid") {
        auto [m, n] = two();
        return make_grid_graph(m, n);
    }
    if (kind == "g6") return decode_graph6(rest);
    throw ParseError("unknown graph '" + text + "' (want path:N, cycle:N, kmn:M,N, grid:M,N "
                     "or g6:STRING)");
}

int cmd_build_label(const std::string& family_str, const std::string& base_str,
                    std::optional<int> t, std::optional<int> n, const std::string& out_path) {
    ConstructionSpec spec;
    spec.family = family_from_name(family_str);
    spec.t = t;
    spec.n = n;
    BaseDescriptor base = parse_base_descriptor(base_str);
    LabelerReport report = label(spec, realize_base(base));
    LabeledGraphDocument doc{report.compound.spec, base, report.labeled, report.certificate};
    write_output(out_path, serialize(doc));
    std::cerr << "labeled: " << family_name(spec.family) << " over " << base_str << ", "
              << report.certificate.summary() << " [" << report.formula_variant << "]\n";
    return 0;
}

int cmd_verify(const std::string& doc_path) {
    ParsedDocument parsed = parse_document(read_file(doc_path));
    Certificate cert = verify_document(parsed);
    std::cout << cert.summary() << "\n";
    for (const auto& v : cert.violations) std::cout << "  " << v.describe() << "\n";
    return cert.ok() ? 0 : 1;
}

int cmd_search(const std::string& target, bool alpha, std::int64_t budget_nodes,
               double budget_seconds) {
    Graph g = parse_search_target(target);
    SearchBudget budget;
    budget.max_nodes = budget_nodes;
    budget.time_limit =
        std::chrono::milliseconds(static_cast<std::int64_t>(budget_seconds * 1000));
    SearchOutcome outcome = alpha ? find_alpha(g, budget) : find_graceful(g, budget);
    std::cout << search_status_name(outcome.status) << " nodes=" << outcome.nodes_expanded
              << "\n";
    if (outcome.labeling) {
        for (const auto& [addr, value] : *outcome.labeling)
            std::cout << "vertex " << addr.to_string() << " " << value << "\n";
    }
    return outcome.status == SearchStatus::Indeterminate ? 1 : 0;
}

int cmd_corpus(const std::string& out_dir) {
    int failures = run_corpus(out_dir, std::cout);
    return failures ? 1 : 0;
}

int cmd_export_dot(const std::string& doc_path, const std::string& out_path) {
    ParsedDocument parsed = parse_document(read_file(doc_path));
    write_output(out_path, export_dot(parsed.doc));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graceful labelings of compound graphs built from alpha-labeled bases"};
    app.require_subcommand(1);

    std::string family_str, base_str, out_path, doc_path, target;
    int t_val = -1, n_val = -1;
    std::int64_t budget_nodes = 1'000'000;
    double budget_seconds = 10.0;
    bool alpha = false;

    auto* build = app.add_subcommand("build-label",
                                     "construct a compound graph, label it, emit a document");
    build->add_option("--family", family_str,
                      "path-union | open-star | one-point-union-path | cycle-of | star-of")
        ->required();
    build->add_option("--base", base_str, "path:N | cycle:N | kmn:M,N | grid:M,N | custom:...")
        ->required();
    build->add_option("--t", t_val, "branch/copy count (families that take t)");
    build->add_option("--n", n_val, "copies along a path (families that take n)");
    build->add_option("--out", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "re-verify a labeled-graph document");
    verify->add_option("document", doc_path, "document file")->required();

    auto* search = app.add_subcommand("search", "backtracking search for a (alpha) labeling");
    search->add_option("--base", target, "path:N | cycle:N | kmn:M,N | grid:M,N | g6:STRING")
        ->required();
    search->add_flag("--alpha", alpha, "search for an alpha labeling instead");
    search->add_option("--budget-nodes", budget_nodes, "node budget (default 1e6)");
    search->add_option("--budget-seconds", budget_seconds, "time budget (default 10)");

    auto* corpus = app.add_subcommand("corpus", "emit and re-verify the demonstration corpus");
    corpus->add_option("--out", out_path, "output directory")->required();

    auto* dot = app.add_subcommand("export-dot", "render a document as Graphviz DOT");
    dot->add_option("document", doc_path, "document file")->required();
    dot->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(build))
            return cmd_build_label(family_str, base_str,
                                   t_val >= 0 ? std::optional<int>(t_val) : std::nullopt,
                                   n_val >= 0 ? std::optional<int>(n_val) : std::nullopt,
                                   out_path);
        if (app.got_subcommand(verify)) return cmd_verify(doc_path);
        if (app.got_subcommand(search))
            return cmd_search(target, alpha, budget_nodes, budget_seconds);
        if (app.got_subcommand(corpus)) return cmd_corpus(out_path);
        if (app.got_subcommand(dot)) return cmd_export_dot(doc_path, out_path);
    } catch (const gracelab::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const LabelingError& e) {
        std::cerr << "labeling failed: " << e.what() << "\n";
        for (const auto& v : e.certificate().violations)
            std::cerr << "  " << v.describe() << "\n";
        return 1;
    }
    return 2;
}
