#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

/// Default vertex bound for canonical_form.
inline constexpr std::size_t kCanonicalFormBound = 10;

namespace detail {

using Cell = std::vector<VertexId>;
using Partition = std::vector<Cell>;

/// Equitable refinement of an ordered partition. Each cell is split by the
/// vector of neighbour counts into every cell, subcells sorted by that vector.
/// Only structural data is consulted, so the result is isomorphism-equivariant.
inline void refine(const std::vector<std::uint64_t>& adj, Partition& cells) {
    const std::size_t n = adj.size();
    std::vector<std::size_t> cell_of(n);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (VertexId v : cells[c]) cell_of[v] = c;

        Partition next;
        next.reserve(cells.size());
        for (const Cell& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::vector<std::pair<std::vector<std::uint32_t>, VertexId>> keyed;
            keyed.reserve(cell.size());
            for (VertexId v : cell) {
                std::vector<std::uint32_t> sig(cells.size(), 0);
                std::uint64_t nb = adj[v];
                while (nb) {
                    const int w = __builtin_ctzll(nb);
                    nb &= nb - 1;
                    ++sig[cell_of[static_cast<std::size_t>(w)]];
                }
                keyed.emplace_back(std::move(sig), v);
            }
            std::stable_sort(keyed.begin(), keyed.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            Cell current{keyed.front().second};
            for (std::size_t i = 1; i < keyed.size(); ++i) {
                if (keyed[i].first != keyed[i - 1].first) {
                    next.push_back(std::move(current));
                    current.clear();
                    changed = true;
                }
                current.push_back(keyed[i].second);
            }
            next.push_back(std::move(current));
        }
        cells = std::move(next);
    }
}

/// Upper-triangle adjacency bits of the relabelled graph, column by column
/// (the graph6 bit order), packed into 64-bit words.
inline std::vector<std::uint64_t> relabelled_bits(const std::vector<std::uint64_t>& adj,
                                                  const std::vector<VertexId>& at_position) {
    const std::size_t n = adj.size();
    std::vector<std::uint64_t> bits((n * n / 2) / 64 + 1, 0);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k)
            if ((adj[at_position[i]] >> at_position[j]) & 1ULL)
                bits[k / 64] |= 1ULL << (63 - k % 64);
    return bits;
}

struct CanonicalSearch {
    const std::vector<std::uint64_t>& adj;
    std::vector<std::uint64_t> best_bits;
    std::vector<VertexId> best_order;
    bool found = false;

    bool twins(VertexId u, VertexId v) const {
        const std::uint64_t mask = ~((1ULL << u) | (1ULL << v));
        return (adj[u] & mask) == (adj[v] & mask);
    }

    void search(Partition cells) {
        refine(adj, cells);
        auto target = std::find_if(cells.begin(), cells.end(),
                                   [](const Cell& c) { return c.size() > 1; });
        if (target == cells.end()) {
            std::vector<VertexId> order;
            order.reserve(adj.size());
            for (const Cell& c : cells) order.push_back(c.front());
            auto bits = relabelled_bits(adj, order);
            if (!found || bits > best_bits) {
                best_bits = std::move(bits);
                best_order = std::move(order);
                found = true;
            }
            return;
        }
        const std::size_t t = static_cast<std::size_t>(target - cells.begin());
        // Swapping two twins of the target cell is an automorphism fixing
        // every individualized vertex, so one branch per twin class suffices.
        std::vector<VertexId> tried;
        for (VertexId v : cells[t]) {
            if (std::any_of(tried.begin(), tried.end(), [&](VertexId u) { return twins(u, v); }))
                continue;
            tried.push_back(v);
            Partition child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != t) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back(Cell{v});
                Cell rest;
                for (VertexId u : cells[c])
                    if (u != v) rest.push_back(u);
                child.push_back(std::move(rest));
            }
            search(std::move(child));
        }
    }
};

} // namespace detail

/// Canonical relabelling: result[i] is the vertex of g placed at position i.
inline std::vector<VertexId> canonical_order(const Graph& g,
                                             std::size_t bound = kCanonicalFormBound) {
    const std::size_t n = g.vertex_count();
    if (n > bound || n > 64)
        throw CapacityError("canonical_form supports at most " +
                            std::to_string(std::min<std::size_t>(bound, 64)) + " vertices, got " +
                            std::to_string(n));
    if (n == 0) return {};
    std::vector<std::uint64_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1ULL << v;
        adj[v] |= 1ULL << u;
    }
    detail::CanonicalSearch s{adj, {}, {}, false};
    detail::Cell all(n);
    for (VertexId v = 0; v < n; ++v) all[v] = v;
    s.search(detail::Partition{std::move(all)});
    return s.best_order;
}

/// Byte string that is equal for two graphs iff they are isomorphic: the
/// graph6 encoding of the canonically relabelled graph.
inline std::string canonical_form(const Graph& g, std::size_t bound = kCanonicalFormBound) {
    const auto order = canonical_order(g, bound);
    const std::size_t n = order.size();
    Graph h(n);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (g.adjacent(order[i], order[j])) h.add_edge(i, j);
    return to_graph6(h);
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a, 64) == canonical_form(b, 64);
}

} // namespace raag
