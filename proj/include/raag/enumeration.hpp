#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "raag/canonical.hpp"
#include "raag/graph.hpp"
#include "raag/homology.hpp"
#include "raag/invariants.hpp"
#include "raag/recognition.hpp"
#include "raag/structure.hpp"

namespace raag {

struct EnumerationConfig {
    /// Largest vertex count accepted by the generators.
    std::size_t capacity = 9;
};

namespace detail {

inline void check_range(std::size_t n, const EnumerationConfig& cfg) {
    if (n < 1 || n > cfg.capacity)
        throw CapacityError("vertex count " + std::to_string(n) + " outside 1.." +
                            std::to_string(cfg.capacity));
}

/// Graphs on n vertices, one per isomorphism class, keyed by canonical form.
/// Level k is built from level k-1 by adding vertex k-1 with every
/// neighbourhood; `connected_only` drops the empty neighbourhood, which is
/// enough since a connected graph always has a non-cut vertex.
inline std::vector<std::vector<Graph>> generate_levels(std::size_t n, bool connected_only) {
    std::vector<std::vector<Graph>> levels;
    levels.push_back({Graph(1)});
    for (std::size_t k = 2; k <= n; ++k) {
        std::map<std::string, Graph> seen;
        const std::uint32_t first = connected_only ? 1 : 0;
        for (const Graph& base : levels.back())
            for (std::uint32_t mask = first; mask < (1u << (k - 1)); ++mask) {
                Graph h = base;
                const VertexId v = h.add_vertex(std::to_string(k - 1));
                for (VertexId u = 0; u + 1 < k; ++u)
                    if ((mask >> u) & 1u) h.add_edge(u, v);
                std::string key = canonical_form(h);
                if (!seen.count(key)) seen.emplace(key, parse_graph6(key));
            }
        std::vector<Graph> level;
        level.reserve(seen.size());
        for (auto& [key, graph] : seen) level.push_back(std::move(graph));
        levels.push_back(std::move(level));
    }
    return levels;
}

} // namespace detail

/// Connected graphs on n vertices up to isomorphism, in canonical-form order.
/// Each graph carries its canonical labelling "0".."n-1".
inline std::vector<Graph> connected_graphs(std::size_t n, const EnumerationConfig& cfg = {}) {
    detail::check_range(n, cfg);
    return std::move(detail::generate_levels(n, true).back());
}

/// All graphs on n vertices up to isomorphism.
inline std::vector<Graph> all_graphs(std::size_t n, const EnumerationConfig& cfg = {}) {
    detail::check_range(n, cfg);
    return std::move(detail::generate_levels(n, false).back());
}

/// Connected (or all) graphs on 1..n_max vertices, smaller graphs first.
inline std::vector<Graph> graphs_up_to(std::size_t n_max, bool connected_only,
                                       const EnumerationConfig& cfg = {}) {
    detail::check_range(n_max, cfg);
    std::vector<Graph> out;
    for (auto& level : detail::generate_levels(n_max, connected_only))
        for (auto& g : level) out.push_back(std::move(g));
    return out;
}

// ---------------------------------------------------------------------------
// Scans
// ---------------------------------------------------------------------------

enum class Outcome { Skipped, Pass, Fail };

using Predicate = std::function<Outcome(const Graph&)>;

struct ScanReport {
    std::size_t n_max = 0;
    std::string predicate;
    std::size_t examined = 0;
    std::size_t applicable = 0;
    std::size_t skipped = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    /// graph6 of every failing graph, sorted.
    std::vector<std::string> failures;

    friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

struct ScanOptions {
    std::size_t workers = 1;
    /// Include disconnected graphs.
    bool all_graphs = false;
    /// Acyclicity rings for the acyclic_bound scan.
    std::vector<Ring> acyclicity_rings{Ring::integers()};
    std::size_t degree_bound = 12;
    EnumerationConfig enumeration{};
};

/// Runs a predicate over a list of graphs. Work is split round-robin across
/// workers and merged; the failure list is sorted, so the report does not
/// depend on the list order or the worker count.
inline ScanReport scan_graphs(const std::vector<Graph>& graphs, const std::string& name,
                              const Predicate& pred, std::size_t workers = 1) {
    workers = std::max<std::size_t>(1, std::min(workers, std::max<std::size_t>(1, graphs.size())));
    ScanReport total;
    total.predicate = name;
    std::mutex merge;
    auto run = [&](std::size_t offset) {
        ScanReport part;
        for (std::size_t i = offset; i < graphs.size(); i += workers) {
            const Graph& g = graphs[i];
            ++part.examined;
            switch (pred(g)) {
            case Outcome::Skipped: ++part.skipped; break;
            case Outcome::Pass:
                ++part.applicable;
                ++part.passed;
                break;
            case Outcome::Fail:
                ++part.applicable;
                ++part.failed;
                part.failures.push_back(to_graph6(g));
                break;
            }
        }
        std::lock_guard lock(merge);
        total.examined += part.examined;
        total.applicable += part.applicable;
        total.skipped += part.skipped;
        total.passed += part.passed;
        total.failed += part.failed;
        total.failures.insert(total.failures.end(), part.failures.begin(), part.failures.end());
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        std::exception_ptr error;
        std::mutex error_lock;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    run(w);
                } catch (...) {
                    std::lock_guard lock(error_lock);
                    if (!error) error = std::current_exception();
                }
            });
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }
    std::sort(total.failures.begin(), total.failures.end());
    for (const Graph& g : graphs) total.n_max = std::max(total.n_max, g.vertex_count());
    return total;
}

namespace predicates {

inline Outcome from_bool(bool ok) { return ok ? Outcome::Pass : Outcome::Fail; }

/// n(v^2 - 2e - 1) >= (v-1)^2 on graphs whose flag complex is acyclic over
/// every ring given, n the flag complex dimension.
inline Predicate acyclic_bound(std::vector<Ring> rings) {
    return [rings = std::move(rings)](const Graph& g) {
        const SimplicialComplex c = flag_complex(g);
        for (const auto& r : rings)
            if (!is_acyclic(c, r)) return Outcome::Skipped;
        const auto v = static_cast<std::int64_t>(g.vertex_count());
        const auto e = static_cast<std::int64_t>(g.edge_count());
        const std::int64_t n = c.dimension();
        return from_bool(n * (v * v - 2 * e - 1) >= (v - 1) * (v - 1));
    };
}

inline Outcome turan(const Graph& g) {
    if (g.empty()) return Outcome::Skipped;
    const auto v = static_cast<std::int64_t>(g.vertex_count());
    const auto e = static_cast<std::int64_t>(g.edge_count());
    return from_bool(omega(v, e, static_cast<std::int64_t>(clique_number(g))) >= 0);
}

inline Outcome chordal_implies_acyclic(const Graph& g) {
    if (!is_connected(g) || !is_chordal(g)) return Outcome::Skipped;
    return from_bool(is_acyclic(flag_complex(g), Ring::integers()));
}

/// Connected, chordal, gem-free and hbar-free exactly when the tree of
/// Droms recognition succeeds, and then the decomposition verifies.
inline Outcome tree_of_droms_equivalence(const Graph& g) {
    const bool hypotheses = is_connected(g) && is_chordal(g).holds() &&
                            !find_induced(g, Pattern::Gem) && !find_induced(g, Pattern::HBar);
    auto rec = is_tree_of_droms(g);
    if (hypotheses != rec.holds()) return Outcome::Fail;
    if (rec.holds()) return from_bool(verify_tree_decomposition(g, *rec.certificate));
    return from_bool(witness_is_valid(g, *rec.witness));
}

/// Droms exactly when there is no induced P4 and no induced C4.
inline Outcome droms_equivalence(const Graph& g) {
    auto rec = is_droms(g);
    const bool free = !find_induced(g, Pattern::P4) && !find_induced(g, Pattern::C4);
    if (rec.holds() != free) return Outcome::Fail;
    if (rec.holds()) return from_bool(droms_certificate_replays(g, *rec.certificate, all_vertices(g)));
    return from_bool(witness_is_valid(g, *rec.witness));
}

/// Under the tree of Droms hypotheses a central or cut vertex is found.
inline Outcome cut_or_central(const Graph& g) {
    if (!is_tree_of_droms(g)) return Outcome::Skipped;
    try {
        const auto r = find_cut_or_central(g);
        if (r.kind == CutOrCentral::Kind::Central) return from_bool(g.degree(r.vertex) + 1 == g.vertex_count());
        return from_bool(connected_components(induced_subgraph(g, without(all_vertices(g), r.vertex))).size() > 1);
    } catch (const DomainError&) {
        return Outcome::Fail;
    }
}

inline Outcome omega_identity(const Graph& g) {
    auto check = omega_identity_check(g);
    if (!check.applicable) return Outcome::Skipped;
    return from_bool(check.holds());
}

inline Predicate koszul_hilbert(std::size_t degree_bound) {
    return [degree_bound](const Graph& g) {
        auto check = koszul_hilbert_check(g, degree_bound);
        if (!check.applicable) return Outcome::Skipped;
        return from_bool(check.holds());
    };
}

/// Every connected induced subgraph of a tree of Droms graphs is one.
inline Outcome hereditary_tree_of_droms(const Graph& g) {
    if (!is_tree_of_droms(g)) return Outcome::Skipped;
    const std::size_t n = g.vertex_count();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSubset s;
        for (VertexId v = 0; v < n; ++v)
            if ((mask >> v) & 1u) s.push_back(v);
        const Graph h = induced_subgraph(g, s);
        if (is_connected(h) && !is_tree_of_droms(h)) return Outcome::Fail;
    }
    return Outcome::Pass;
}

inline Outcome coherence_is_chordality(const Graph& g) {
    return from_bool(make_report(g, {{Ring::rationals()}, 2}).coherent.coherent == is_chordal(g).holds());
}

} // namespace predicates

/// Names accepted by scan_property.
inline std::vector<std::string> predicate_names() {
    return {"acyclic_bound",       "turan_omega_nonneg",       "chordal_implies_acyclic_Z",
            "tree_of_droms_equivalence", "droms_equivalence", "cut_or_central",
            "omega_identity",      "koszul_hilbert",           "hereditary_tree_of_droms",
            "coherence_is_chordality"};
}

inline Predicate make_predicate(const std::string& name, const ScanOptions& opts = {}) {
    if (name == "acyclic_bound") return predicates::acyclic_bound(opts.acyclicity_rings);
    if (name == "turan_omega_nonneg" || name == "turan") return predicates::turan;
    if (name == "chordal_implies_acyclic_Z") return predicates::chordal_implies_acyclic;
    if (name == "tree_of_droms_equivalence") return predicates::tree_of_droms_equivalence;
    if (name == "droms_equivalence") return predicates::droms_equivalence;
    if (name == "cut_or_central") return predicates::cut_or_central;
    if (name == "omega_identity") return predicates::omega_identity;
    if (name == "koszul_hilbert") return predicates::koszul_hilbert(opts.degree_bound);
    if (name == "hereditary_tree_of_droms") return predicates::hereditary_tree_of_droms;
    if (name == "coherence_is_chordality") return predicates::coherence_is_chordality;
    throw DomainError("unknown predicate '" + name + "'");
}

/// Runs a named predicate over all connected graphs (or all graphs) with
/// 1..n_max vertices.
inline ScanReport scan_property(std::size_t n_max, const std::string& name, const ScanOptions& opts = {}) {
    const Predicate pred = make_predicate(name, opts);
    auto report = scan_graphs(graphs_up_to(n_max, !opts.all_graphs, opts.enumeration), name, pred, opts.workers);
    report.n_max = n_max;
    return report;
}

/// n(v^2 - 2e - 1) >= (v-1)^2 over connected graphs with acyclic flag
/// complex; acyclicity over Z by default, per ring when opts says so.
inline ScanReport scan_acyclic_bound(std::size_t n_max, const ScanOptions& opts = {}) {
    return scan_property(n_max, "acyclic_bound", opts);
}

} // namespace raag
