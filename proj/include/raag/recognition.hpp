#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "raag/graph.hpp"
#include "raag/structure.hpp"

namespace raag {

// ---------------------------------------------------------------------------
// Forbidden patterns and witnesses
// ---------------------------------------------------------------------------

enum class Pattern { ChordlessCycle, P4, C4, Gem, HBar, Disconnected };

inline const char* pattern_name(Pattern p) {
    switch (p) {
    case Pattern::ChordlessCycle: return "chordless_cycle";
    case Pattern::P4: return "P4";
    case Pattern::C4: return "C4";
    case Pattern::Gem: return "gem";
    case Pattern::HBar: return "hbar";
    case Pattern::Disconnected: return "disconnected";
    }
    return "?";
}

/// Pattern graphs on labels "0".."k-1".
///  P4:   0-1-2-3
///  C4:   0-1-2-3-0
///  gem:  path 0-1-2-3 plus apex 4 adjacent to all of them
///  hbar: K4 on {0,1,2,3}; vertex 4 adjacent to 0 and 3; vertex 5 adjacent to 1 and 2
inline Graph pattern_graph(Pattern p) {
    switch (p) {
    case Pattern::P4: return make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    case Pattern::C4: return make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    case Pattern::Gem:
        return make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
    case Pattern::HBar:
        return make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                              {0, 4}, {3, 4}, {1, 5}, {2, 5}});
    default: throw DomainError(std::string("no fixed graph for pattern ") + pattern_name(p));
    }
}

/**
 * A forbidden induced subgraph found in a graph.
 *
 * For fixed patterns vertices[i] is the image of pattern vertex i. For a
 * chordless cycle the vertices are listed in cyclic order. A disconnection
 * marker holds one vertex from each of two different components, or nothing
 * for the empty graph.
 */
struct ForbiddenWitness {
    Pattern pattern;
    std::vector<VertexId> vertices;
};

/// Induced-subgraph search by backtracking over partial maps. Pattern
/// vertices are matched in BFS order so each new vertex (after the first of
/// its component) is constrained by an already-mapped neighbour; candidates
/// are pruned by degree. Returns the first embedding in vertex order.
inline std::optional<std::vector<VertexId>> find_induced(const Graph& g, const Graph& pattern) {
    const std::size_t k = pattern.vertex_count();
    if (k > g.vertex_count()) return std::nullopt;
    if (k == 0) return std::vector<VertexId>{};

    std::vector<VertexId> match_order;
    std::vector<bool> queued(k, false);
    for (VertexId root = 0; root < k; ++root) {
        if (queued[root]) continue;
        queued[root] = true;
        match_order.push_back(root);
        for (std::size_t head = match_order.size() - 1; head < match_order.size(); ++head)
            for (VertexId w : pattern.neighbors(match_order[head]))
                if (!queued[w]) {
                    queued[w] = true;
                    match_order.push_back(w);
                }
    }

    std::vector<VertexId> image(k, 0);
    std::vector<bool> used(g.vertex_count(), false);

    auto consistent = [&](std::size_t depth, VertexId cand) {
        const VertexId p = match_order[depth];
        if (used[cand] || g.degree(cand) < pattern.degree(p)) return false;
        for (std::size_t d = 0; d < depth; ++d) {
            const VertexId q = match_order[d];
            if (pattern.adjacent(p, q) != g.adjacent(cand, image[q])) return false;
        }
        return true;
    };

    auto recurse = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == k) return true;
        const VertexId p = match_order[depth];
        std::optional<VertexId> anchor;
        for (std::size_t d = 0; d < depth && !anchor; ++d)
            if (pattern.adjacent(p, match_order[d])) anchor = image[match_order[d]];
        auto attempt = [&](VertexId cand) {
            if (!consistent(depth, cand)) return false;
            image[p] = cand;
            used[cand] = true;
            if (self(self, depth + 1)) return true;
            used[cand] = false;
            return false;
        };
        if (anchor) {
            for (VertexId cand : g.neighbors(*anchor))
                if (attempt(cand)) return true;
        } else {
            for (VertexId cand = 0; cand < g.vertex_count(); ++cand)
                if (attempt(cand)) return true;
        }
        return false;
    };

    if (recurse(recurse, 0)) return image;
    return std::nullopt;
}

inline std::optional<std::vector<VertexId>> find_induced(const Graph& g, Pattern p) {
    return find_induced(g, pattern_graph(p));
}

/// Re-checks a witness against g from scratch.
inline bool witness_is_valid(const Graph& g, const ForbiddenWitness& w) {
    for (VertexId v : w.vertices)
        if (!g.contains(v)) return false;
    {
        auto sorted = w.vertices;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    }
    switch (w.pattern) {
    case Pattern::Disconnected: {
        if (w.vertices.empty()) return g.empty();
        if (w.vertices.size() != 2) return false;
        for (const auto& comp : connected_components(g)) {
            const bool a = std::binary_search(comp.begin(), comp.end(), w.vertices[0]);
            const bool b = std::binary_search(comp.begin(), comp.end(), w.vertices[1]);
            if (a || b) return a != b;
        }
        return false;
    }
    case Pattern::ChordlessCycle: {
        const std::size_t k = w.vertices.size();
        if (k < 4) return false;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                const bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
                if (g.adjacent(w.vertices[i], w.vertices[j]) != consecutive) return false;
            }
        return true;
    }
    default: {
        const Graph p = pattern_graph(w.pattern);
        if (p.vertex_count() != w.vertices.size()) return false;
        for (VertexId i = 0; i < p.vertex_count(); ++i)
            for (VertexId j = i + 1; j < p.vertex_count(); ++j)
                if (p.adjacent(i, j) != g.adjacent(w.vertices[i], w.vertices[j])) return false;
        return true;
    }
    }
}

/// Outcome of a recognition: a certificate when the graph is in the class,
/// a forbidden witness otherwise.
template <class Certificate>
struct Recognition {
    std::optional<Certificate> certificate;
    std::optional<ForbiddenWitness> witness;

    bool holds() const noexcept { return certificate.has_value(); }
    explicit operator bool() const noexcept { return holds(); }
};

namespace detail {

inline ForbiddenWitness disconnection_witness(const Graph& g) {
    const auto comps = connected_components(g);
    if (comps.size() < 2) return {Pattern::Disconnected, {}};
    return {Pattern::Disconnected, {comps[0].front(), comps[1].front()}};
}

/// Chordless cycle through v, x and y, where x and y are non-adjacent
/// neighbours of v: v followed by a shortest x-y path avoiding the rest of
/// N[v]. Empty when no such path exists.
inline std::vector<VertexId> cycle_through(const Graph& g, VertexId v, VertexId x, VertexId y) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> blocked(n, false);
    blocked[v] = true;
    for (VertexId u : g.neighbors(v))
        if (u != x && u != y) blocked[u] = true;
    std::vector<VertexId> parent(n, n);
    std::queue<VertexId> q;
    q.push(x);
    parent[x] = x;
    while (!q.empty()) {
        const VertexId a = q.front();
        q.pop();
        if (a == y) break;
        for (VertexId b : g.neighbors(a))
            if (!blocked[b] && parent[b] == n) {
                parent[b] = a;
                q.push(b);
            }
    }
    if (parent[y] == n) return {};
    std::vector<VertexId> path;
    for (VertexId a = y; a != x; a = parent[a]) path.push_back(a);
    path.push_back(x);
    std::reverse(path.begin(), path.end());
    path.insert(path.begin(), v);
    return path;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Chordality
// ---------------------------------------------------------------------------

/// Certificate of chordality: a perfect elimination ordering.
struct EliminationOrder {
    std::vector<VertexId> order;
};

/// Maximum-cardinality search order (reversed), verified as a perfect
/// elimination ordering. On failure a chordless cycle is extracted, first
/// from the failing triple and otherwise by scanning all triples.
inline Recognition<EliminationOrder> is_chordal(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> weight(n, 0);
    std::vector<bool> numbered(n, false);
    std::vector<VertexId> visit;
    visit.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        VertexId pick = n;
        for (VertexId v = 0; v < n; ++v)
            if (!numbered[v] && (pick == n || weight[v] > weight[pick])) pick = v;
        numbered[pick] = true;
        visit.push_back(pick);
        for (VertexId w : g.neighbors(pick))
            if (!numbered[w]) ++weight[w];
    }
    std::vector<VertexId> peo(visit.rbegin(), visit.rend());
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[peo[i]] = i;

    std::optional<std::pair<VertexId, Edge>> failing;
    for (std::size_t i = 0; i < n && !failing; ++i) {
        const VertexId v = peo[i];
        std::vector<VertexId> later;
        for (VertexId w : g.neighbors(v))
            if (position[w] > i) later.push_back(w);
        for (std::size_t a = 0; a < later.size() && !failing; ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                if (!g.adjacent(later[a], later[b])) {
                    failing = {v, {later[a], later[b]}};
                    break;
                }
    }
    if (!failing) return {EliminationOrder{std::move(peo)}, std::nullopt};

    auto cycle = detail::cycle_through(g, failing->first, failing->second.first,
                                       failing->second.second);
    for (VertexId v = 0; v < n && cycle.empty(); ++v) {
        const auto& nb = g.neighbors(v);
        for (std::size_t a = 0; a < nb.size() && cycle.empty(); ++a)
            for (std::size_t b = a + 1; b < nb.size() && cycle.empty(); ++b)
                if (!g.adjacent(nb[a], nb[b])) cycle = detail::cycle_through(g, v, nb[a], nb[b]);
    }
    if (cycle.empty()) throw std::logic_error("is_chordal: no chordless cycle found");
    return {std::nullopt, ForbiddenWitness{Pattern::ChordlessCycle, std::move(cycle)}};
}

/// Checks that every vertex's later neighbours in order form a clique.
inline bool is_perfect_elimination_order(const Graph& g, const std::vector<VertexId>& order) {
    const std::size_t n = g.vertex_count();
    if (order.size() != n) return false;
    std::vector<std::size_t> position(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (order[i] >= n || position[order[i]] != n) return false;
        position[order[i]] = i;
    }
    for (std::size_t i = 0; i < n; ++i) {
        VertexSubset later;
        for (VertexId w : g.neighbors(order[i]))
            if (position[w] > i) later.push_back(w);
        if (!is_clique(g, later)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Droms graphs
// ---------------------------------------------------------------------------

/// Construction tree of a Droms graph: leaves are single vertices, internal
/// nodes are cones (vertex = apex, one child) or disjoint unions.
struct DromsNode {
    enum class Kind { Vertex, Cone, Union };
    Kind kind = Kind::Vertex;
    VertexId vertex = 0;
    std::vector<DromsNode> children;
};

namespace detail {

inline std::vector<VertexSubset> components_within(const Graph& g, const VertexSubset& s) {
    return [&] {
        auto comps = connected_components(induced_subgraph(g, s));
        for (auto& c : comps) c = lift(s, c);
        return comps;
    }();
}

inline std::optional<VertexId> first_central_within(const Graph& g, const VertexSubset& s) {
    for (VertexId v : s) {
        std::size_t k = 0;
        for (VertexId w : s)
            if (w != v && g.adjacent(v, w)) ++k;
        if (k + 1 == s.size()) return v;
    }
    return std::nullopt;
}

inline Recognition<DromsNode> droms_within(const Graph& g, const VertexSubset& s) {
    if (s.size() == 1) return {DromsNode{DromsNode::Kind::Vertex, s.front(), {}}, std::nullopt};
    auto comps = components_within(g, s);
    if (comps.size() != 1) {
        DromsNode node{DromsNode::Kind::Union, 0, {}};
        for (const auto& c : comps) {
            auto child = droms_within(g, c);
            if (!child) return child;
            node.children.push_back(std::move(*child.certificate));
        }
        return {std::move(node), std::nullopt};
    }
    if (auto z = first_central_within(g, s)) {
        auto child = droms_within(g, without(s, *z));
        if (!child) return child;
        DromsNode node{DromsNode::Kind::Cone, *z, {}};
        node.children.push_back(std::move(*child.certificate));
        return {std::move(node), std::nullopt};
    }
    // Connected without a central vertex: an induced P4 or C4 exists here.
    const Graph h = induced_subgraph(g, s);
    for (Pattern p : {Pattern::P4, Pattern::C4})
        if (auto hit = find_induced(h, p)) return {std::nullopt, ForbiddenWitness{p, lift(s, *hit)}};
    throw std::logic_error("connected graph without central vertex has no induced P4 or C4");
}

} // namespace detail

/// Droms recognition by cone / disjoint-union recursion; an induced P4 or C4
/// is searched for only where the recursion gets stuck.
inline Recognition<DromsNode> is_droms(const Graph& g) {
    if (g.empty()) return {DromsNode{DromsNode::Kind::Union, 0, {}}, std::nullopt};
    return detail::droms_within(g, all_vertices(g));
}

/// Evaluates a construction tree to (sorted vertex set, sorted edge list).
inline std::pair<VertexSubset, std::vector<Edge>> evaluate(const DromsNode& node) {
    VertexSubset vs;
    std::vector<Edge> es;
    auto walk = [&](auto&& self, const DromsNode& n) -> VertexSubset {
        switch (n.kind) {
        case DromsNode::Kind::Vertex: vs.push_back(n.vertex); return {n.vertex};
        case DromsNode::Kind::Cone: {
            VertexSubset below;
            for (const auto& c : n.children) {
                auto sub = self(self, c);
                below.insert(below.end(), sub.begin(), sub.end());
            }
            for (VertexId w : below) es.emplace_back(std::min(w, n.vertex), std::max(w, n.vertex));
            vs.push_back(n.vertex);
            below.push_back(n.vertex);
            return below;
        }
        case DromsNode::Kind::Union: {
            VertexSubset all;
            for (const auto& c : n.children) {
                auto sub = self(self, c);
                all.insert(all.end(), sub.begin(), sub.end());
            }
            return all;
        }
        }
        return {};
    };
    walk(walk, node);
    std::sort(vs.begin(), vs.end());
    std::sort(es.begin(), es.end());
    return {vs, es};
}

/// True when the construction tree rebuilds exactly the subgraph of g
/// induced on its vertices, and those vertices are s.
inline bool droms_certificate_replays(const Graph& g, const DromsNode& cert, const VertexSubset& s) {
    auto [vs, es] = evaluate(cert);
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
    if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
    if (vs != s) return false;
    std::vector<Edge> expected;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) expected.emplace_back(s[i], s[j]);
    return es == expected;
}

// ---------------------------------------------------------------------------
// Ptolemaic graphs
// ---------------------------------------------------------------------------

struct PtolemaicStep {
    enum class Kind { Leaf, Twin, FalseTwin };
    Kind kind;
    VertexId vertex;
    VertexId anchor;
};

inline const char* step_name(PtolemaicStep::Kind k) {
    switch (k) {
    case PtolemaicStep::Kind::Leaf: return "ADD_LEAF";
    case PtolemaicStep::Kind::Twin: return "ADD_TWIN";
    case PtolemaicStep::Kind::FalseTwin: return "ADD_FALSE_TWIN";
    }
    return "?";
}

/// Construction of a ptolemaic graph from one vertex by adding leaves, true
/// twins, and false twins of vertices with complete neighbourhood.
struct PtolemaicSequence {
    VertexId base = 0;
    std::vector<PtolemaicStep> steps;
};

/// Rebuilds a graph from a construction sequence, labels taken from g.
/// Returns nullopt if a step is illegal (unknown anchor, repeated vertex,
/// false twin of a vertex with non-complete neighbourhood).
inline std::optional<Graph> replay(const Graph& g, const PtolemaicSequence& seq) {
    Graph out;
    std::vector<VertexId> local(g.vertex_count(), g.vertex_count());
    if (!g.contains(seq.base)) return std::nullopt;
    local[seq.base] = out.add_vertex(g.label(seq.base));
    for (const auto& step : seq.steps) {
        if (!g.contains(step.vertex) || !g.contains(step.anchor)) return std::nullopt;
        if (local[step.vertex] != g.vertex_count() || local[step.anchor] == g.vertex_count())
            return std::nullopt;
        const VertexId a = local[step.anchor];
        const std::vector<VertexId> anchor_nbrs = out.neighbors(a);
        const VertexId v = out.add_vertex(g.label(step.vertex));
        local[step.vertex] = v;
        switch (step.kind) {
        case PtolemaicStep::Kind::Leaf: out.add_edge(v, a); break;
        case PtolemaicStep::Kind::Twin:
            out.add_edge(v, a);
            for (VertexId w : anchor_nbrs) out.add_edge(v, w);
            break;
        case PtolemaicStep::Kind::FalseTwin:
            if (!is_clique(out, anchor_nbrs)) return std::nullopt;
            for (VertexId w : anchor_nbrs) out.add_edge(v, w);
            break;
        }
    }
    return out;
}

/// Same vertices and edges in label space, ignoring vertex order.
inline bool same_labelled_graph(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    for (auto [u, v] : a.edges()) {
        auto x = b.find(a.label(u));
        auto y = b.find(a.label(v));
        if (!x || !y || !b.adjacent(*x, *y)) return false;
    }
    for (VertexId v = 0; v < a.vertex_count(); ++v)
        if (!b.find(a.label(v))) return false;
    return true;
}

namespace detail {

/// Peels vertices off a ptolemaic graph (last vertex first) and records
/// the reverse construction.
inline std::optional<PtolemaicSequence> ptolemaic_sequence(const Graph& g) {
    VertexSubset alive = all_vertices(g);
    std::vector<PtolemaicStep> removed;
    auto nbrs_within = [&](VertexId v) {
        VertexSubset out;
        for (VertexId w : alive)
            if (w != v && g.adjacent(v, w)) out.push_back(w);
        return out;
    };
    while (alive.size() > 1) {
        std::optional<PtolemaicStep> step;
        for (auto it = alive.rbegin(); it != alive.rend() && !step; ++it) {
            const VertexId x = *it;
            const VertexSubset nx = nbrs_within(x);
            if (nx.size() == 1) {
                step = PtolemaicStep{PtolemaicStep::Kind::Leaf, x, nx.front()};
                break;
            }
            for (VertexId y : alive) {
                if (y == x) continue;
                VertexSubset ny = nbrs_within(y);
                if (g.adjacent(x, y)) {
                    if (without(nx, y) == without(ny, x)) {
                        step = PtolemaicStep{PtolemaicStep::Kind::Twin, x, y};
                        break;
                    }
                } else if (nx == ny && is_clique(g, ny)) {
                    step = PtolemaicStep{PtolemaicStep::Kind::FalseTwin, x, y};
                    break;
                }
            }
        }
        if (!step) return std::nullopt;
        removed.push_back(*step);
        alive = without(alive, step->vertex);
    }
    PtolemaicSequence seq;
    seq.base = alive.front();
    seq.steps.assign(removed.rbegin(), removed.rend());
    return seq;
}

} // namespace detail

/// Ptolemaic = connected, chordal, gem-free. The certificate is a leaf/twin
/// construction sequence that replays to g.
inline Recognition<PtolemaicSequence> is_ptolemaic(const Graph& g) {
    if (!is_connected(g)) return {std::nullopt, detail::disconnection_witness(g)};
    if (auto chordal = is_chordal(g); !chordal) return {std::nullopt, chordal.witness};
    if (auto gem = find_induced(g, Pattern::Gem))
        return {std::nullopt, ForbiddenWitness{Pattern::Gem, *gem}};
    auto seq = detail::ptolemaic_sequence(g);
    if (!seq) throw std::logic_error("ptolemaic graph without leaf or twin");
    return {std::move(*seq), std::nullopt};
}

// ---------------------------------------------------------------------------
// Cut or central vertices, trees of Droms graphs
// ---------------------------------------------------------------------------

/// Raised by find_cut_or_central when its hypotheses fail.
class PreconditionError : public DomainError {
public:
    PreconditionError(std::string clause, ForbiddenWitness witness)
        : DomainError("precondition violated: " + clause), clause_(std::move(clause)),
          witness_(std::move(witness)) {}

    const std::string& clause() const noexcept { return clause_; }
    const ForbiddenWitness& witness() const noexcept { return witness_; }

private:
    std::string clause_;
    ForbiddenWitness witness_;
};

struct CutOrCentral {
    enum class Kind { Cut, Central };
    Kind kind;
    VertexId vertex;
};

namespace detail {

/// First violated hypothesis among connected / chordal / gem-free / hbar-free.
inline std::optional<std::pair<std::string, ForbiddenWitness>> tree_of_droms_obstruction(
    const Graph& g) {
    if (!is_connected(g)) return std::pair{std::string("connected"), disconnection_witness(g)};
    if (auto c = is_chordal(g); !c) return std::pair{std::string("chordal"), *c.witness};
    if (auto gem = find_induced(g, Pattern::Gem))
        return std::pair{std::string("gem-free"), ForbiddenWitness{Pattern::Gem, *gem}};
    if (auto h = find_induced(g, Pattern::HBar))
        return std::pair{std::string("hbar-free"), ForbiddenWitness{Pattern::HBar, *h}};
    return std::nullopt;
}

} // namespace detail

/// A connected chordal graph with no induced gem or hbar has a central vertex
/// or a cut vertex. Central vertices are preferred; ties go to the smallest.
inline CutOrCentral find_cut_or_central(const Graph& g) {
    if (auto bad = detail::tree_of_droms_obstruction(g))
        throw PreconditionError(bad->first, bad->second);
    if (auto c = central_vertices(g); !c.empty()) return {CutOrCentral::Kind::Central, c.front()};
    if (auto c = cut_vertices(g); !c.empty()) return {CutOrCentral::Kind::Cut, c.front()};
    throw std::logic_error("find_cut_or_central: neither a central nor a cut vertex");
}

/// One connected Droms piece of a tree of Droms graphs. parent / via are
/// unset for the root (node 0); otherwise the node shares exactly the vertex
/// `via` with its parent.
struct DromsTreeNode {
    VertexSubset vertices;
    DromsNode certificate;
    std::optional<std::size_t> parent;
    std::optional<VertexId> via;
};

struct DromsTreeDecomposition {
    std::vector<DromsTreeNode> nodes;
};

namespace detail {

struct LooseTree {
    std::vector<std::pair<VertexSubset, DromsNode>> nodes;
    std::vector<std::tuple<std::size_t, std::size_t, VertexId>> links;
};

inline LooseTree decompose_tree_of_droms(const Graph& g, const VertexSubset& s) {
    const Graph h = induced_subgraph(g, s);
    if (s.size() > 1) {
        if (auto cuts = cut_vertices(h); !cuts.empty()) {
            const VertexId v = s[cuts.front()];
            LooseTree out;
            std::optional<std::size_t> hub;
            for (const auto& block : blocks_at(h, cuts.front()).blocks) {
                LooseTree part = decompose_tree_of_droms(g, lift(s, block));
                const std::size_t offset = out.nodes.size();
                std::size_t holder = offset;
                for (std::size_t i = 0; i < part.nodes.size(); ++i)
                    if (std::binary_search(part.nodes[i].first.begin(), part.nodes[i].first.end(), v)) {
                        holder = offset + i;
                        break;
                    }
                for (auto& n : part.nodes) out.nodes.push_back(std::move(n));
                for (auto [a, b, x] : part.links) out.links.emplace_back(a + offset, b + offset, x);
                if (hub) out.links.emplace_back(*hub, holder, v);
                else hub = holder;
            }
            return out;
        }
    }
    auto droms = droms_within(g, s);
    if (!droms) throw std::logic_error("2-connected piece of a tree of Droms graphs is not Droms");
    LooseTree out;
    out.nodes.emplace_back(s, std::move(*droms.certificate));
    return out;
}

} // namespace detail

/// Tree-of-Droms recognition. Members are split recursively at their
/// smallest cut vertex; pieces without cut vertices are certified as Droms
/// graphs (cones over Droms graphs).
inline Recognition<DromsTreeDecomposition> is_tree_of_droms(const Graph& g) {
    if (auto bad = detail::tree_of_droms_obstruction(g)) return {std::nullopt, bad->second};
    auto loose = detail::decompose_tree_of_droms(g, all_vertices(g));

    const std::size_t k = loose.nodes.size();
    std::vector<std::vector<std::pair<std::size_t, VertexId>>> adj(k);
    for (auto [a, b, v] : loose.links) {
        adj[a].emplace_back(b, v);
        adj[b].emplace_back(a, v);
    }
    DromsTreeDecomposition out;
    out.nodes.resize(k);
    std::vector<bool> seen(k, false);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = true;
    while (!q.empty()) {
        const std::size_t a = q.front();
        q.pop();
        for (auto [b, v] : adj[a])
            if (!seen[b]) {
                seen[b] = true;
                out.nodes[b].parent = a;
                out.nodes[b].via = v;
                q.push(b);
            }
    }
    for (std::size_t i = 0; i < k; ++i) {
        out.nodes[i].vertices = std::move(loose.nodes[i].first);
        out.nodes[i].certificate = std::move(loose.nodes[i].second);
    }
    return {std::move(out), std::nullopt};
}

/// Independent check of a decomposition against g: pieces are connected
/// Droms graphs with replayable certificates, tree links share exactly the
/// labelled vertex, pieces overlap in at most one vertex, and the pieces'
/// induced edges partition E(g) while their vertices cover V(g).
inline bool verify_tree_decomposition(const Graph& g, const DromsTreeDecomposition& d) {
    if (d.nodes.empty()) return false;
    std::vector<Edge> edges;
    VertexSubset covered;
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        const auto& node = d.nodes[i];
        if (!droms_certificate_replays(g, node.certificate, node.vertices)) return false;
        if (!is_connected(induced_subgraph(g, node.vertices))) return false;
        if ((i == 0) != !node.parent.has_value()) return false;
        if (node.parent) {
            if (*node.parent >= d.nodes.size() || !node.via) return false;
            VertexSubset shared;
            const auto& pv = d.nodes[*node.parent].vertices;
            std::set_intersection(node.vertices.begin(), node.vertices.end(), pv.begin(), pv.end(),
                                  std::back_inserter(shared));
            if (shared != VertexSubset{*node.via}) return false;
        }
        for (std::size_t j = i + 1; j < d.nodes.size(); ++j) {
            VertexSubset shared;
            const auto& other = d.nodes[j].vertices;
            std::set_intersection(node.vertices.begin(), node.vertices.end(), other.begin(),
                                  other.end(), std::back_inserter(shared));
            if (shared.size() > 1) return false;
        }
        for (std::size_t a = 0; a < node.vertices.size(); ++a)
            for (std::size_t b = a + 1; b < node.vertices.size(); ++b)
                if (g.adjacent(node.vertices[a], node.vertices[b]))
                    edges.emplace_back(node.vertices[a], node.vertices[b]);
        covered.insert(covered.end(), node.vertices.begin(), node.vertices.end());
    }
    // parents must form a tree rooted at node 0
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        std::size_t cur = i;
        for (std::size_t steps = 0; d.nodes[cur].parent; ++steps) {
            if (steps > d.nodes.size()) return false;
            cur = *d.nodes[cur].parent;
        }
        if (cur != 0) return false;
    }
    std::sort(edges.begin(), edges.end());
    std::sort(covered.begin(), covered.end());
    covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
    return edges == g.edges() && covered == all_vertices(g);
}

// ---------------------------------------------------------------------------
// All class verdicts at once
// ---------------------------------------------------------------------------

struct ClassReport {
    bool connected = false;
    Recognition<EliminationOrder> chordal;
    Recognition<DromsNode> droms;
    Recognition<PtolemaicSequence> ptolemaic;
    std::optional<std::vector<VertexId>> gem;
    std::optional<std::vector<VertexId>> hbar;
    std::optional<CutOrCentral> cut_or_central;
    std::string cut_or_central_blocked;
    Recognition<DromsTreeDecomposition> tree_of_droms;
};

inline ClassReport classify(const Graph& g) {
    ClassReport r;
    r.connected = is_connected(g);
    r.chordal = is_chordal(g);
    r.droms = is_droms(g);
    r.ptolemaic = is_ptolemaic(g);
    r.gem = find_induced(g, Pattern::Gem);
    r.hbar = find_induced(g, Pattern::HBar);
    try {
        r.cut_or_central = find_cut_or_central(g);
    } catch (const PreconditionError& e) {
        r.cut_or_central_blocked = e.clause();
    }
    r.tree_of_droms = is_tree_of_droms(g);
    return r;
}

} // namespace raag
