#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "raag/enumeration.hpp"
#include "raag/graph.hpp"
#include "raag/homology.hpp"
#include "raag/invariants.hpp"
#include "raag/recognition.hpp"

namespace raag {

/// Version of the JSON layout written by the functions below.
inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

namespace json {

inline Json labels(const Graph& g, const std::vector<VertexId>& ids) {
    Json out = Json::array();
    for (VertexId v : ids) out.push_back(g.label(v));
    return out;
}

inline Json graph(const Graph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({g.label(u), g.label(v)});
    return {{"vertices", g.labels()}, {"edges", std::move(edges)}};
}

inline Json witness(const Graph& g, const ForbiddenWitness& w) {
    return {{"pattern", pattern_name(w.pattern)}, {"vertices", labels(g, w.vertices)}};
}

inline Json droms(const Graph& g, const DromsNode& node) {
    switch (node.kind) {
    case DromsNode::Kind::Vertex: return {{"vertex", g.label(node.vertex)}};
    case DromsNode::Kind::Cone: return {{"cone", g.label(node.vertex)}, {"over", droms(g, node.children.front())}};
    case DromsNode::Kind::Union: {
        Json parts = Json::array();
        for (const auto& c : node.children) parts.push_back(droms(g, c));
        return {{"union", std::move(parts)}};
    }
    }
    return nullptr;
}

inline Json ptolemaic(const Graph& g, const PtolemaicSequence& seq) {
    Json steps = Json::array();
    for (const auto& s : seq.steps)
        steps.push_back({{"op", step_name(s.kind)}, {"vertex", g.label(s.vertex)}, {"of", g.label(s.anchor)}});
    return {{"base", g.label(seq.base)}, {"steps", std::move(steps)}};
}

inline Json tree(const Graph& g, const DromsTreeDecomposition& d) {
    Json nodes = Json::array();
    for (const auto& n : d.nodes) {
        Json node{{"vertices", labels(g, n.vertices)}};
        node["parent"] = n.parent ? Json(*n.parent) : Json(nullptr);
        node["via"] = n.via ? Json(g.label(*n.via)) : Json(nullptr);
        node["certificate"] = droms(g, n.certificate);
        nodes.push_back(std::move(node));
    }
    return nodes;
}

template <class Cert, class F>
Json recognition(const Graph& g, const Recognition<Cert>& r, const char* key, F&& cert) {
    Json out{{"holds", r.holds()}};
    if (r.holds()) out[key] = cert(*r.certificate);
    else out["witness"] = witness(g, *r.witness);
    return out;
}

inline Json classification(const Graph& g, const ClassReport& r) {
    Json out{{"schema_version", kSchemaVersion}, {"command", "classify"}, {"graph", graph(g)}};
    out["connected"] = r.connected;
    out["chordal"] = recognition(g, r.chordal, "elimination_order",
                                 [&](const EliminationOrder& o) { return labels(g, o.order); });
    out["droms"] = recognition(g, r.droms, "certificate", [&](const DromsNode& n) { return droms(g, n); });
    out["ptolemaic"] =
        recognition(g, r.ptolemaic, "certificate", [&](const PtolemaicSequence& s) { return ptolemaic(g, s); });
    auto induced = [&](const std::optional<std::vector<VertexId>>& hit) {
        return hit ? Json{{"present", true}, {"vertices", labels(g, *hit)}} : Json{{"present", false}};
    };
    out["gem"] = induced(r.gem);
    out["hbar"] = induced(r.hbar);
    if (r.cut_or_central)
        out["cut_or_central"] = {
            {"kind", r.cut_or_central->kind == CutOrCentral::Kind::Cut ? "cut" : "central"},
            {"vertex", g.label(r.cut_or_central->vertex)}};
    else
        out["cut_or_central"] = {{"violated", r.cut_or_central_blocked}};
    out["tree_of_droms"] =
        recognition(g, r.tree_of_droms, "decomposition", [&](const DromsTreeDecomposition& d) { return tree(g, d); });
    return out;
}

inline Json homology(const HomologyGroups& h) {
    Json degrees = Json::array();
    for (const auto& d : h.degrees)
        degrees.push_back({{"degree", d.degree}, {"free_rank", d.free_rank}, {"torsion", d.torsion}});
    return {{"ring", h.ring.name()}, {"empty_complex", h.empty_complex}, {"degrees", std::move(degrees)}};
}

inline Json collapse(const Graph& g, const CollapseResult& c) {
    Json steps = Json::array();
    for (const auto& s : c.steps) steps.push_back({labels(g, s.free_face), labels(g, s.coface)});
    Json out{{"collapsible", c.collapsible}, {"steps", std::move(steps)}};
    if (!c.collapsible) {
        Json remaining = Json::array();
        for (const auto& layer : c.remaining.faces)
            for (const auto& f : layer) remaining.push_back(labels(g, f));
        out["remaining"] = std::move(remaining);
    }
    return out;
}

inline Json complex_summary(const SimplicialComplex& c) {
    Json counts = Json::array();
    for (const auto& layer : c.faces) counts.push_back(layer.size());
    return {{"dimension", c.dimension()}, {"face_counts", std::move(counts)},
            {"euler_characteristic", c.euler_characteristic()}};
}

inline Json structure(const Graph& g, const StructureGraph& s) {
    Json log = Json::array();
    for (const auto& step : s.log) {
        Json entry{{"step", step_name(step.kind)}, {"vertices", labels(g, step.vertices)}};
        if (step.kind != DerivationStep::Kind::Point) entry["pivot"] = g.label(step.pivot);
        if (step.kind == DerivationStep::Kind::CutSplit) {
            Json blocks = Json::array();
            for (const auto& b : step.blocks) blocks.push_back(labels(g, b));
            entry["blocks"] = std::move(blocks);
        }
        log.push_back(std::move(entry));
    }
    return {{"graph", graph(s.graph)}, {"log", std::move(log)}};
}

inline Json rationals(const std::vector<Rational>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(x.str());
    return out;
}

inline Json optional_int(const std::optional<std::int64_t>& x) { return x ? Json(*x) : Json(nullptr); }

inline Json inequality(const InequalityOutcome& o) {
    Json out{{"name", o.name}, {"statement", o.statement}, {"status", status_name(o.status)}};
    if (o.status == InequalityOutcome::Status::Skipped) {
        out["reason"] = o.reason;
    } else {
        out["lhs"] = o.lhs;
        out["rhs"] = o.rhs;
    }
    return out;
}

inline Json report(const Graph& g, const InvariantReport& r, std::size_t degree_bound) {
    Json out{{"schema_version", kSchemaVersion}, {"command", "report"}, {"graph", graph(g)}};
    out["v"] = r.v;
    out["e"] = r.e;
    out["n_flag"] = r.n_flag;
    out["cd_L"] = r.cd_L;
    out["b1_L"] = r.b1_L;
    out["b2_L"] = r.b2_L;
    out["connected"] = r.connected;
    out["b1_B"] = r.b1_B ? Json(*r.b1_B) : Json("not finitely generated");
    out["omega_L"] = optional_int(r.omega_L);
    out["cd_B_convention"] = "cd(B) is taken to be the flag complex dimension";

    Json rings = Json::array();
    for (const auto& s : r.rings) {
        Json section{{"ring", s.ring.name()}, {"homology", homology(s.homology)}};
        section["fp_type"] = s.fp.to_string();
        section["lie_finitely_presented"] = s.lie_finitely_presented;
        section["b2_B"] = optional_int(s.b2_B);
        section["omega_B"] = optional_int(s.omega_B);
        if (s.quotient) {
            section["a_gamma_dimensions"] = s.quotient->dims;
            section["clique_counts"] = s.quotient->clique_counts;
        }
        if (s.hilbert) {
            Json h{{"degree_bound", degree_bound}, {"applicable", s.hilbert->applicable}};
            if (s.hilbert->applicable) {
                h["passed"] = s.hilbert->passed;
                h["h_U"] = rationals(s.hilbert->h_U);
                h["h_A"] = rationals(s.hilbert->h_A);
                h["product"] = rationals(s.hilbert->product);
            } else {
                h["reason"] = s.hilbert->reason;
            }
            section["koszul_hilbert"] = std::move(h);
        }
        rings.push_back(std::move(section));
    }
    out["rings"] = std::move(rings);

    Json verdicts;
    verdicts["coherent"] = r.coherent.coherent;
    if (r.coherent.witness) verdicts["coherent_witness"] = witness(g, *r.coherent.witness);
    Json free{{"status", status_name(r.free.status)}, {"reason", r.free.reason}};
    if (r.free.status == FreeVerdict::Status::Free) free["rank"] = r.free.rank;
    if (r.free.witness) free["witness"] = witness(g, *r.free.witness);
    verdicts["bb_free"] = std::move(free);
    if (r.abelian) {
        Json ab{{"abelian", r.abelian->abelian}};
        if (r.abelian->abelian) ab["rank"] = r.abelian->rank;
        verdicts["bb_abelian"] = std::move(ab);
    } else {
        verdicts["bb_abelian"] = nullptr;
    }
    if (r.subgroups) {
        Json ta{{"all_subgroups_raag", r.subgroups->holds()}, {"explanation", r.subgroups->explanation}};
        if (!r.subgroups->holds()) ta["witness"] = witness(g, *r.subgroups->recognition.witness);
        verdicts["all_subgroups_raag"] = std::move(ta);
    } else {
        verdicts["all_subgroups_raag"] = nullptr;
    }
    verdicts["finitely_presented_group"] = {{"verdict", tri_name(r.finitely_presented_group)},
                                            {"reason", r.finitely_presented_reason}};
    out["verdicts"] = std::move(verdicts);
    out["collapse"] = collapse(g, r.collapse);
    if (r.structure) out["structure_graph"] = structure(g, *r.structure);
    else out["structure_graph"] = {{"unavailable", r.structure_note}};

    Json identity{{"applicable", r.omega_identity.applicable}};
    if (r.omega_identity.applicable) {
        identity["n"] = r.omega_identity.n;
        identity["omega_L"] = r.omega_identity.omega_L;
        identity["omega_B"] = r.omega_identity.omega_B;
        identity["lhs"] = r.omega_identity.lhs;
        identity["rhs"] = r.omega_identity.rhs;
        identity["holds"] = r.omega_identity.holds();
    } else {
        identity["reason"] = r.omega_identity.reason;
    }
    out["omega_identity"] = std::move(identity);
    Json ineq = Json::array();
    for (const auto& o : r.inequalities) ineq.push_back(inequality(o));
    out["inequalities"] = std::move(ineq);
    return out;
}

inline Json homology_report(const Graph& g, const SimplicialComplex& c, const std::vector<HomologyGroups>& hs,
                            const CollapseResult& col) {
    Json out{{"schema_version", kSchemaVersion}, {"command", "homology"}, {"graph", graph(g)}};
    out["complex"] = complex_summary(c);
    Json groups = Json::array();
    for (const auto& h : hs) groups.push_back(homology(h));
    out["homology"] = std::move(groups);
    out["collapse"] = collapse(g, col);
    return out;
}

inline Json structure_report(const Graph& g, const StructureGraph& s) {
    Json out{{"schema_version", kSchemaVersion}, {"command", "structure"}, {"graph", graph(g)}};
    out["structure_graph"] = structure(g, s);
    return out;
}

inline Json scan(const ScanReport& r) {
    return {{"schema_version", kSchemaVersion}, {"command", "scan"},   {"predicate", r.predicate},
            {"n_max", r.n_max},                 {"examined", r.examined}, {"applicable", r.applicable},
            {"skipped", r.skipped},             {"passed", r.passed},   {"failed", r.failed},
            {"failures", r.failures}};
}

} // namespace json

// ---------------------------------------------------------------------------
// Plain text
// ---------------------------------------------------------------------------

namespace text {

inline std::string join(const Graph& g, const std::vector<VertexId>& ids, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += sep;
        out += g.label(ids[i]);
    }
    return out;
}

inline std::string witness(const Graph& g, const ForbiddenWitness& w) {
    return std::string(pattern_name(w.pattern)) + " [" + join(g, w.vertices) + "]";
}

template <class Cert>
std::string verdict(const Graph& g, const Recognition<Cert>& r) {
    return r.holds() ? "yes" : "no, witness " + witness(g, *r.witness);
}

inline std::string homology(const HomologyGroups& h) {
    std::ostringstream out;
    out << h.ring.name() << ":";
    if (h.empty_complex) return out.str() + " empty complex (nonzero in degree -1)";
    for (const auto& d : h.degrees) {
        out << " H" << d.degree << "=";
        if (d.is_zero()) {
            out << "0";
            continue;
        }
        bool first = true;
        if (d.free_rank > 0) {
            out << (h.ring.kind() == Ring::Kind::Integers ? "Z" : h.ring.name());
            if (d.free_rank > 1) out << "^" << d.free_rank;
            first = false;
        }
        for (auto t : d.torsion) {
            out << (first ? "" : "+") << "Z/" << t;
            first = false;
        }
    }
    return out.str();
}

inline std::string classification(const Graph& g, const ClassReport& r) {
    std::ostringstream out;
    out << "vertices: " << g.vertex_count() << "\n";
    out << "edges: " << g.edge_count() << "\n";
    out << "connected: " << (r.connected ? "yes" : "no") << "\n";
    out << "chordal: " << verdict(g, r.chordal) << "\n";
    if (r.chordal) out << "  elimination order: " << join(g, r.chordal.certificate->order) << "\n";
    out << "droms: " << verdict(g, r.droms) << "\n";
    out << "ptolemaic: " << verdict(g, r.ptolemaic) << "\n";
    out << "gem: " << (r.gem ? "present [" + join(g, *r.gem) + "]" : std::string("absent")) << "\n";
    out << "hbar: " << (r.hbar ? "present [" + join(g, *r.hbar) + "]" : std::string("absent")) << "\n";
    if (r.cut_or_central)
        out << "cut_or_central: " << (r.cut_or_central->kind == CutOrCentral::Kind::Cut ? "cut " : "central ")
            << g.label(r.cut_or_central->vertex) << "\n";
    else
        out << "cut_or_central: not applicable (" << r.cut_or_central_blocked << " fails)\n";
    out << "tree_of_droms: " << verdict(g, r.tree_of_droms) << "\n";
    if (r.tree_of_droms)
        for (const auto& n : r.tree_of_droms.certificate->nodes) {
            out << "  piece [" << join(g, n.vertices) << "]";
            if (n.via) out << " attached at " << g.label(*n.via);
            out << "\n";
        }
    return out.str();
}

inline std::string structure(const Graph& g, const StructureGraph& s) {
    std::ostringstream out;
    out << "structure graph: " << s.graph.vertex_count() << " vertices, " << s.graph.edge_count() << " edges\n";
    out << "  vertices:";
    for (const auto& l : s.graph.labels()) out << " " << l;
    out << "\n  edges:";
    for (auto [u, v] : s.graph.edges()) out << " " << s.graph.label(u) << "-" << s.graph.label(v);
    out << "\n";
    for (const auto& step : s.log) {
        out << "  " << step_name(step.kind) << " [" << join(g, step.vertices) << "]";
        if (step.kind != DerivationStep::Kind::Point) out << " at " << g.label(step.pivot);
        out << "\n";
    }
    return out.str();
}

inline std::string collapse(const CollapseResult& c) {
    return c.collapsible ? "collapsible (" + std::to_string(c.steps.size()) + " steps)"
                         : "stuck after " + std::to_string(c.steps.size()) + " steps";
}

inline std::string report(const Graph& g, const InvariantReport& r) {
    std::ostringstream out;
    auto opt = [](const std::optional<std::int64_t>& x) { return x ? std::to_string(*x) : std::string("undefined"); };
    out << "v: " << r.v << "\ne: " << r.e << "\nn_flag: " << r.n_flag << "\ncd_L: " << r.cd_L << "\n";
    out << "b1_L: " << r.b1_L << "\nb2_L: " << r.b2_L << "\n";
    out << "connected: " << (r.connected ? "yes" : "no") << "\n";
    out << "b1_B: " << (r.b1_B ? std::to_string(*r.b1_B) : "not finitely generated") << "\n";
    out << "omega_L: " << opt(r.omega_L) << "\n";
    for (const auto& s : r.rings) {
        out << "[" << s.ring.name() << "]\n";
        out << "  homology: " << homology(s.homology) << "\n";
        out << "  fp_type: " << s.fp.to_string() << "\n";
        out << "  lie_finitely_presented: " << (s.lie_finitely_presented ? "yes" : "no") << "\n";
        out << "  b2_B: " << opt(s.b2_B) << "\n";
        out << "  omega_B: " << opt(s.omega_B) << "\n";
        if (s.quotient) {
            out << "  a_gamma_dimensions:";
            for (auto d : s.quotient->dims) out << " " << d;
            out << "\n";
        }
        if (s.hilbert)
            out << "  koszul_hilbert: "
                << (s.hilbert->applicable ? (s.hilbert->passed ? "pass" : "FAIL") : "skipped (" + s.hilbert->reason + ")")
                << "\n";
    }
    out << "coherent: " << (r.coherent.coherent ? "yes" : "no");
    if (r.coherent.witness) out << ", witness " << witness(g, *r.coherent.witness);
    out << "\n";
    out << "bb_free: " << status_name(r.free.status);
    if (r.free.status == FreeVerdict::Status::Free) out << " of rank " << r.free.rank;
    out << " (" << r.free.reason << ")\n";
    if (r.abelian)
        out << "bb_abelian: "
            << (r.abelian->abelian ? "yes, rank " + std::to_string(r.abelian->rank) : std::string("no")) << "\n";
    if (r.subgroups)
        out << "all_subgroups_raag: " << (r.subgroups->holds() ? "yes" : "no") << " (" << r.subgroups->explanation
            << ")\n";
    out << "finitely_presented_group: " << tri_name(r.finitely_presented_group) << " (" << r.finitely_presented_reason
        << ")\n";
    out << "collapse: " << collapse(r.collapse) << "\n";
    if (r.structure) out << structure(g, *r.structure);
    else out << "structure graph: unavailable (" << r.structure_note << ")\n";
    if (r.omega_identity.applicable)
        out << "omega identity: " << r.omega_identity.lhs << (r.omega_identity.holds() ? " = " : " != ")
            << r.omega_identity.rhs << "\n";
    else
        out << "omega identity: skipped (" << r.omega_identity.reason << ")\n";
    for (const auto& o : r.inequalities) {
        out << "inequality " << o.name << " [" << o.statement << "]: ";
        if (o.status == InequalityOutcome::Status::Skipped) out << "skipped (" << o.reason << ")\n";
        else out << status_name(o.status) << " (" << o.lhs << " vs " << o.rhs << ")\n";
    }
    return out.str();
}

inline std::string scan(const ScanReport& r) {
    std::ostringstream out;
    out << "predicate: " << r.predicate << "\n";
    out << "n_max: " << r.n_max << "\n";
    out << "examined: " << r.examined << "\n";
    out << "applicable: " << r.applicable << "\n";
    out << "skipped: " << r.skipped << "\n";
    out << "passed: " << r.passed << "\n";
    out << "failed: " << r.failed << "\n";
    for (const auto& f : r.failures) out << "  " << f << "\n";
    return out.str();
}

} // namespace text

} // namespace raag
