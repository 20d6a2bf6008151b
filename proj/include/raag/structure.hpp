#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

/// Checks that s is a duplicate-free list of vertices of g and returns it sorted.
inline VertexSubset normalize_subset(const Graph& g, VertexSubset s) {
    for (VertexId v : s) g.check_vertex(v);
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw DomainError("vertex subset lists a vertex twice");
    return s;
}

/// Subgraph induced on s. Vertex i of the result is the i-th smallest member
/// of s and keeps its label.
inline Graph induced_subgraph(const Graph& g, const VertexSubset& s) {
    const VertexSubset members = normalize_subset(g, s);
    Graph h;
    for (VertexId v : members) h.add_vertex(g.label(v));
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (g.adjacent(members[i], members[j])) h.add_edge(i, j);
    return h;
}

/// Label-space overload; unknown labels are a domain error.
inline Graph induced_subgraph(const Graph& g, const std::vector<std::string>& labels) {
    VertexSubset s;
    for (const auto& l : labels) {
        auto id = g.find(l);
        if (!id) throw DomainError("unknown vertex '" + l + "'");
        s.push_back(*id);
    }
    return induced_subgraph(g, s);
}

inline VertexSubset all_vertices(const Graph& g) {
    VertexSubset s(g.vertex_count());
    for (VertexId v = 0; v < s.size(); ++v) s[v] = v;
    return s;
}

inline VertexSubset without(VertexSubset s, VertexId v) {
    s.erase(std::remove(s.begin(), s.end(), v), s.end());
    return s;
}

/// Maps a list of vertex ids of induced_subgraph(g, s) back to ids of g.
inline std::vector<VertexId> lift(const VertexSubset& s, const std::vector<VertexId>& local) {
    std::vector<VertexId> out;
    out.reserve(local.size());
    for (VertexId v : local) out.push_back(s[v]);
    return out;
}

/// Connected components ordered by their smallest vertex; each is sorted.
inline std::vector<VertexSubset> connected_components(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<VertexSubset> out;
    for (VertexId root = 0; root < n; ++root) {
        if (seen[root]) continue;
        VertexSubset comp{root};
        seen[root] = true;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (VertexId w : g.neighbors(comp[head]))
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

/// True for graphs with exactly one component; the empty graph is not connected.
inline bool is_connected(const Graph& g) {
    return !g.empty() && connected_components(g).size() == 1;
}

/// Articulation points of a connected graph, by DFS low-points.
inline std::vector<VertexId> cut_vertices(const Graph& g) {
    if (!is_connected(g)) throw DomainError("cut_vertices requires a connected, nonempty graph");
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> order(n, 0), low(n, 0);
    std::vector<bool> is_cut(n, false);
    std::size_t clock = 0;

    struct Frame {
        VertexId v;
        VertexId parent;
        std::size_t next;
        std::size_t children;
    };
    std::vector<Frame> stack;
    const VertexId none = n;
    order[0] = low[0] = ++clock;
    stack.push_back({0, none, 0, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& nbrs = g.neighbors(f.v);
        if (f.next < nbrs.size()) {
            const VertexId w = nbrs[f.next++];
            if (order[w] == 0) {
                ++f.children;
                order[w] = low[w] = ++clock;
                stack.push_back({w, f.v, 0, 0});
            } else if (w != f.parent) {
                low[f.v] = std::min(low[f.v], order[w]);
            }
            continue;
        }
        const Frame done = f;
        stack.pop_back();
        if (done.parent == none) {
            if (done.children > 1) is_cut[done.v] = true;
        } else {
            low[done.parent] = std::min(low[done.parent], low[done.v]);
            if (stack.back().parent != none && low[done.v] >= order[done.parent])
                is_cut[done.parent] = true;
        }
    }
    std::vector<VertexId> out;
    for (VertexId v = 0; v < n; ++v)
        if (is_cut[v]) out.push_back(v);
    return out;
}

/// The blocks of g defined by the cut vertex v.
struct BlockDecomposition {
    VertexId cut_vertex;
    std::vector<VertexSubset> blocks;
};

/// Splits a connected graph at a cut vertex: one block per component of g - v,
/// each block containing v. Blocks are ordered by the smallest vertex of
/// their component.
inline BlockDecomposition blocks_at(const Graph& g, VertexId v) {
    g.check_vertex(v);
    if (!is_connected(g)) throw DomainError("blocks_at requires a connected graph");
    const VertexSubset rest = without(all_vertices(g), v);
    const Graph h = induced_subgraph(g, rest);
    auto comps = connected_components(h);
    if (comps.size() < 2)
        throw DomainError("vertex '" + g.label(v) + "' is not a cut vertex");
    BlockDecomposition out{v, {}};
    for (const auto& comp : comps) {
        VertexSubset block = lift(rest, comp);
        block.insert(std::lower_bound(block.begin(), block.end(), v), v);
        out.blocks.push_back(std::move(block));
    }
    return out;
}

/// Vertices adjacent to every other vertex.
inline std::vector<VertexId> central_vertices(const Graph& g) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) + 1 == g.vertex_count()) out.push_back(v);
    return out;
}

inline bool is_clique(const Graph& g, const VertexSubset& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

/// Orders subsets by size, then lexicographically.
struct SizeThenLex {
    bool operator()(const VertexSubset& a, const VertexSubset& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Maximal cliques by Bron-Kerbosch with Tomita pivoting, each sorted, in
/// SizeThenLex order.
inline std::vector<VertexSubset> maximal_cliques(const Graph& g) {
    std::vector<VertexSubset> out;
    if (g.empty()) return out;

    auto intersect = [&](const std::vector<VertexId>& xs, VertexId v) {
        std::vector<VertexId> r;
        for (VertexId x : xs)
            if (g.adjacent(x, v)) r.push_back(x);
        return r;
    };

    VertexSubset current;
    std::function<void(std::vector<VertexId>, std::vector<VertexId>)> expand =
        [&](std::vector<VertexId> candidates, std::vector<VertexId> excluded) {
            if (candidates.empty() && excluded.empty()) {
                VertexSubset c = current;
                std::sort(c.begin(), c.end());
                out.push_back(std::move(c));
                return;
            }
            // pivot: the vertex of P u X with most neighbours in P
            VertexId pivot = candidates.empty() ? excluded.front() : candidates.front();
            std::size_t best = 0;
            bool first = true;
            for (const auto* pool : {&candidates, &excluded})
                for (VertexId u : *pool) {
                    std::size_t k = 0;
                    for (VertexId c : candidates)
                        if (g.adjacent(u, c)) ++k;
                    if (first || k > best) {
                        best = k;
                        pivot = u;
                        first = false;
                    }
                }
            std::vector<VertexId> branch;
            for (VertexId c : candidates)
                if (!g.adjacent(pivot, c)) branch.push_back(c);
            for (VertexId v : branch) {
                current.push_back(v);
                expand(intersect(candidates, v), intersect(excluded, v));
                current.pop_back();
                candidates.erase(std::find(candidates.begin(), candidates.end(), v));
                excluded.push_back(v);
            }
        };
    expand(all_vertices(g), {});
    std::sort(out.begin(), out.end(), SizeThenLex{});
    return out;
}

/// Every clique of g, including the empty set and singletons, in SizeThenLex
/// order. Obtained as the downward closure of the maximal cliques.
inline std::vector<VertexSubset> all_cliques(const Graph& g) {
    std::set<VertexSubset, SizeThenLex> faces;
    faces.insert(VertexSubset{});
    for (const auto& m : maximal_cliques(g)) {
        const std::size_t k = m.size();
        for (unsigned long long mask = 1; mask < (1ULL << k); ++mask) {
            VertexSubset s;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1ULL << i)) s.push_back(m[i]);
            faces.insert(std::move(s));
        }
    }
    return {faces.begin(), faces.end()};
}

/// Size of a largest clique (0 for the empty graph).
inline std::size_t clique_number(const Graph& g) {
    std::size_t best = 0;
    for (const auto& m : maximal_cliques(g)) best = std::max(best, m.size());
    return best;
}

/// Number of cliques of each size 0..clique_number.
inline std::vector<std::size_t> clique_counts(const Graph& g) {
    std::vector<std::size_t> counts;
    for (const auto& c : all_cliques(g)) {
        if (counts.size() <= c.size()) counts.resize(c.size() + 1, 0);
        ++counts[c.size()];
    }
    return counts;
}

/// Disjoint union; labels must not collide.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph out = a;
    const std::size_t shift = a.vertex_count();
    for (VertexId v = 0; v < b.vertex_count(); ++v) out.add_vertex(b.label(v));
    for (auto [u, v] : b.edges()) out.add_edge(u + shift, v + shift);
    return out;
}

/// Graph with the same vertex order and labels, relabelled by new_labels.
inline Graph relabel(const Graph& g, const std::vector<std::string>& new_labels) {
    if (new_labels.size() != g.vertex_count())
        throw DomainError("relabel needs one label per vertex");
    Graph out;
    for (const auto& l : new_labels) out.add_vertex(l);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    return out;
}

/// The graph whose vertex perm[i] is vertex i of g (labels travel with vertices).
inline Graph permute(const Graph& g, const std::vector<VertexId>& perm) {
    const std::size_t n = g.vertex_count();
    std::vector<VertexId> inverse(n);
    for (VertexId i = 0; i < n; ++i) inverse[perm[i]] = i;
    Graph out;
    for (VertexId j = 0; j < n; ++j) out.add_vertex(g.label(inverse[j]));
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

} // namespace raag
