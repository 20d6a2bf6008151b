#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "raag/enumeration.hpp"
#include "raag/graph.hpp"
#include "raag/homology.hpp"
#include "raag/invariants.hpp"
#include "raag/recognition.hpp"
#include "raag/serialize.hpp"

namespace raag::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParse = 2,
    kDomain = 3,
    kCapacity = 4,
    kScanFailures = 5,
};

struct RunConfig {
    std::string command;
    std::optional<std::string> input_path;
    std::optional<std::string> inline_graph;
    std::optional<std::string> input_format;
    std::vector<std::string> rings;
    std::size_t degree_bound = 12;
    std::size_t max_v = 8;
    std::size_t workers = 1;
    bool all_graphs = false;
    std::string predicate;
    std::string format = "json";
    std::optional<std::string> output;
};

namespace detail {

inline Graph load_graph(const RunConfig& cfg) {
    if (cfg.input_path.has_value() == cfg.inline_graph.has_value())
        throw CLI::ValidationError("input", "exactly one of --input and --graph is required");
    std::string text;
    GraphFormat format;
    if (cfg.input_path) {
        std::ifstream in(*cfg.input_path, std::ios::binary);
        if (!in) throw ParseError("cannot read " + *cfg.input_path, 0, 0);
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        format = GraphFormat::EdgeList;
    } else {
        text = *cfg.inline_graph;
        format = GraphFormat::Graph6;
    }
    if (cfg.input_format) format = *cfg.input_format == "graph6" ? GraphFormat::Graph6 : GraphFormat::EdgeList;
    return parse_graph(text, format);
}

inline std::vector<Ring> rings_of(const RunConfig& cfg, std::vector<std::string> fallback) {
    std::vector<Ring> out;
    for (const auto& r : cfg.rings.empty() ? fallback : cfg.rings) out.push_back(Ring::parse(r));
    return out;
}

inline std::string render(const RunConfig& cfg, const Json& j, const std::string& plain) {
    return cfg.format == "json" ? j.dump(2) + "\n" : plain;
}

inline int execute(const RunConfig& cfg, std::ostream& out) {
    std::string rendered;
    int code = kOk;
    if (cfg.command == "scan") {
        ScanOptions opts;
        opts.workers = cfg.workers;
        opts.all_graphs = cfg.all_graphs;
        opts.degree_bound = cfg.degree_bound;
        opts.acyclicity_rings = rings_of(cfg, {"Z"});
        const ScanReport r = scan_property(cfg.max_v, cfg.predicate, opts);
        rendered = render(cfg, json::scan(r), text::scan(r));
        if (r.failed > 0) code = kScanFailures;
    } else {
        const Graph g = load_graph(cfg);
        if (cfg.command == "classify") {
            const ClassReport r = classify(g);
            rendered = render(cfg, json::classification(g, r), text::classification(g, r));
        } else if (cfg.command == "report") {
            const InvariantReport r = make_report(g, {rings_of(cfg, {"Z", "Q"}), cfg.degree_bound});
            rendered = render(cfg, json::report(g, r, cfg.degree_bound), text::report(g, r));
        } else if (cfg.command == "homology") {
            const SimplicialComplex c = flag_complex(g);
            std::vector<HomologyGroups> hs;
            for (const auto& ring : rings_of(cfg, {"Z"})) hs.push_back(reduced_homology(c, ring));
            const CollapseResult col = collapse_to_point(c);
            std::string plain;
            for (const auto& h : hs) plain += text::homology(h) + "\n";
            plain += "collapse: " + text::collapse(col) + "\n";
            rendered = render(cfg, json::homology_report(g, c, hs, col), plain);
        } else if (cfg.command == "structure") {
            const StructureGraph s = bb_structure_graph(g);
            rendered = render(cfg, json::structure_report(g, s), text::structure(g, s));
        }
    }
    if (cfg.output) {
        std::ofstream file(*cfg.output, std::ios::binary);
        if (!file) throw CLI::ValidationError("--output", "cannot write " + *cfg.output);
        file << rendered;
    } else {
        out << rendered;
    }
    return code;
}

} // namespace detail

/// Runs the command line; returns the process exit code. Data goes to
/// `out`, diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Graph classes, flag complex homology and RAAG invariants", "raag"};
    app.require_subcommand(1);

    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--output", cfg.output, "write to a file instead of stdout");
    };
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--input", cfg.input_path, "graph file (edge list unless --input-format graph6)");
        sub->add_option("--graph", cfg.inline_graph, "inline graph (graph6 unless --input-format edgelist)");
        sub->add_option("--input-format", cfg.input_format, "edgelist or graph6")
            ->check(CLI::IsMember({"edgelist", "graph6"}));
        add_output(sub);
    };
    auto add_degree = [&](CLI::App* sub) {
        sub->add_option("--max-degree", cfg.degree_bound, "Hilbert series degree bound")->check(CLI::Range(2, 1000));
    };

    auto* classify_cmd = app.add_subcommand("classify", "graph class verdicts with certificates");
    add_input(classify_cmd);
    auto* report_cmd = app.add_subcommand("report", "invariants, homology and verdicts");
    add_input(report_cmd);
    report_cmd->add_option("--ring", cfg.rings, "Z, Q or Fp:<p> (repeatable)");
    add_degree(report_cmd);
    auto* homology_cmd = app.add_subcommand("homology", "reduced homology of the flag complex");
    add_input(homology_cmd);
    homology_cmd->add_option("--ring", cfg.rings, "Z, Q or Fp:<p> (repeatable)");
    auto* structure_cmd = app.add_subcommand("structure", "defining graph of the Bestvina-Brady kernel");
    add_input(structure_cmd);
    auto* scan_cmd = app.add_subcommand("scan", "check a property on all small graphs");
    scan_cmd->add_option("predicate", cfg.predicate, "property name")->required();
    scan_cmd->add_option("--max-v", cfg.max_v, "largest vertex count");
    scan_cmd->add_option("--workers", cfg.workers, "worker threads")->check(CLI::Range(1, 256));
    scan_cmd->add_option("--ring", cfg.rings, "acyclicity rings for acyclic_bound (repeatable)");
    scan_cmd->add_flag("--all-graphs", cfg.all_graphs, "include disconnected graphs");
    add_degree(scan_cmd);
    add_output(scan_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        cfg.command = app.get_subcommands().front()->get_name();
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        return detail::execute(cfg, out);
    } catch (const CLI::Error& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kParse;
    } catch (const ValidationError& e) {
        err << "invalid graph: " << e.what() << "\n";
        return kParse;
    } catch (const CapacityError& e) {
        err << "capacity exceeded: " << e.what() << "\n";
        return kCapacity;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kDomain;
    } catch (const NotSupported& e) {
        err << "not supported: " << e.what() << "\n";
        return kDomain;
    }
}

} // namespace raag::cli
