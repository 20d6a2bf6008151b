#pragma once

// Brute-force reference computations. Nothing here calls the algorithms
// under test beyond Graph accessors.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "raag/graph.hpp"

namespace oracle {

using raag::Graph;
using Mask = std::uint32_t;
using Rational = boost::multiprecision::cpp_rational;

inline std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(g.vertex_count(), 0);
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            if (u != v && g.adjacent(u, v)) adj[u] |= Mask{1} << v;
    return adj;
}

inline bool clique_mask(const std::vector<Mask>& adj, Mask s) {
    for (std::size_t v = 0; v < adj.size(); ++v)
        if ((s >> v) & 1u)
            if ((adj[v] | (Mask{1} << v)) != ((adj[v] | (Mask{1} << v)) | s)) return false;
    return true;
}

inline std::vector<std::size_t> members(Mask s) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; s >> v; ++v)
        if ((s >> v) & 1u) out.push_back(v);
    return out;
}

/// Every clique including the empty one, sorted by size then lexicographically.
inline std::vector<std::vector<std::size_t>> cliques(const Graph& g) {
    const auto adj = adjacency_masks(g);
    std::vector<std::vector<std::size_t>> out;
    for (Mask s = 0; s < (Mask{1} << g.vertex_count()); ++s)
        if (clique_mask(adj, s)) out.push_back(members(s));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

inline std::size_t components(const std::vector<Mask>& adj, Mask alive) {
    std::size_t count = 0;
    Mask unseen = alive;
    while (unseen) {
        ++count;
        Mask frontier = unseen & (~unseen + 1);
        Mask seen = 0;
        while (frontier) {
            seen |= frontier;
            Mask next = 0;
            for (auto v : members(frontier)) next |= adj[v];
            frontier = next & alive & ~seen;
        }
        unseen &= ~seen;
    }
    return count;
}

inline bool connected(const Graph& g) {
    return g.vertex_count() > 0 &&
           components(adjacency_masks(g), (Mask{1} << g.vertex_count()) - 1) == 1;
}

/// Vertices whose deletion increases the number of components.
inline std::vector<std::size_t> cut_vertices(const Graph& g) {
    const auto adj = adjacency_masks(g);
    const Mask all = (Mask{1} << g.vertex_count()) - 1;
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (components(adj, all & ~(Mask{1} << v)) > 1) out.push_back(v);
    return out;
}

/// True when some vertex subset of size >= 4 induces a cycle.
inline bool has_chordless_cycle(const Graph& g) {
    const auto adj = adjacency_masks(g);
    for (Mask s = 0; s < (Mask{1} << g.vertex_count()); ++s) {
        if (__builtin_popcount(s) < 4) continue;
        bool two_regular = true;
        for (auto v : members(s))
            if (__builtin_popcount(adj[v] & s) != 2) two_regular = false;
        if (two_regular && components(adj, s) == 1) return true;
    }
    return false;
}

/// Induced copy of `pattern` anywhere in g, by trying every injective map.
inline bool contains_induced(const Graph& g, const Graph& pattern) {
    const std::size_t n = g.vertex_count(), k = pattern.vertex_count();
    if (k > n) return false;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
        if (static_cast<std::size_t>(__builtin_popcount(s)) != k) continue;
        auto img = members(s);
        do {
            bool ok = true;
            for (std::size_t i = 0; i < k && ok; ++i)
                for (std::size_t j = i + 1; j < k && ok; ++j)
                    ok = pattern.adjacent(i, j) == g.adjacent(img[i], img[j]);
            if (ok) return true;
        } while (std::next_permutation(img.begin(), img.end()));
    }
    return false;
}

/// Lexicographically largest upper-triangle bit string over all relabellings.
inline std::string canonical(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string bits;
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t i = 0; i < j; ++i) bits += g.adjacent(perm[i], perm[j]) ? '1' : '0';
        best = std::max(best, bits);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(n) + ":" + best;
}

/// Number of isomorphism classes of (connected) graphs on n labelled
/// vertices, by canonicalising every labelled graph.
inline std::size_t count_classes(std::size_t n, bool connected_only) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) slots.emplace_back(i, j);
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::set<std::uint32_t> classes;
    for (std::uint32_t edges = 0; edges < (1u << slots.size()); ++edges) {
        std::vector<Mask> adj(n, 0);
        for (std::size_t k = 0; k < slots.size(); ++k)
            if ((edges >> k) & 1u) {
                adj[slots[k].first] |= Mask{1} << slots[k].second;
                adj[slots[k].second] |= Mask{1} << slots[k].first;
            }
        if (connected_only && components(adj, (Mask{1} << n) - 1) != 1) continue;
        std::uint32_t best = 0;
        for (const auto& q : perms) {
            std::uint32_t code = 0;
            for (std::size_t k = 0; k < slots.size(); ++k)
                if ((adj[q[slots[k].first]] >> q[slots[k].second]) & 1u) code |= 1u << k;
            best = std::max(best, code);
        }
        classes.insert(best);
    }
    return classes.size();
}

/// Rank by Gauss-Jordan elimination over exact rationals.
inline std::size_t rank(std::vector<std::vector<Rational>> m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

/// Reduced Betti numbers of the flag complex over Q, degrees 0..dim, from
/// boundary matrices built from scratch. Empty vector for the empty graph.
inline std::vector<std::int64_t> reduced_betti_q(const Graph& g) {
    std::vector<std::vector<std::vector<std::size_t>>> by_size;
    for (auto& c : cliques(g)) {
        if (by_size.size() <= c.size()) by_size.resize(c.size() + 1);
        by_size[c.size()].push_back(c);
    }
    const std::size_t top = by_size.size() - 1;  // largest clique size
    // boundary from size k to size k-1, k = 1..top
    std::vector<std::size_t> rk(top + 2, 0);
    for (std::size_t k = 1; k <= top; ++k) {
        const auto& rows = by_size[k - 1];
        const auto& cols = by_size[k];
        std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(cols.size(), 0));
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t drop = 0; drop < cols[j].size(); ++drop) {
                auto face = cols[j];
                face.erase(face.begin() + static_cast<long>(drop));
                const auto i = static_cast<std::size_t>(std::find(rows.begin(), rows.end(), face) - rows.begin());
                m[i][j] = drop % 2 == 0 ? 1 : -1;
            }
        rk[k] = rank(m);
    }
    std::vector<std::int64_t> betti;
    for (std::size_t k = 1; k <= top; ++k)
        betti.push_back(static_cast<std::int64_t>(by_size[k].size()) - static_cast<std::int64_t>(rk[k]) -
                        static_cast<std::int64_t>(rk[k + 1]));
    return betti;
}

/// Graded dimensions of the exterior face algebra modulo the ideal generated
/// by the sum of the vertices, from the multiplication table on monomials.
inline std::vector<std::int64_t> quotient_dims(const Graph& g) {
    const auto adj = adjacency_masks(g);
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<Mask>> basis;
    for (Mask s = 0; s < (Mask{1} << n); ++s)
        if (clique_mask(adj, s)) {
            const auto k = static_cast<std::size_t>(__builtin_popcount(s));
            if (basis.size() <= k) basis.resize(k + 1);
            basis[k].push_back(s);
        }
    std::vector<std::int64_t> dims{1};
    for (std::size_t k = 1; k < basis.size(); ++k) {
        // images chi * m for each monomial m of degree k-1, as rows
        std::vector<std::vector<Rational>> rows;
        for (Mask m : basis[k - 1]) {
            std::vector<Rational> row(basis[k].size(), 0);
            for (std::size_t v = 0; v < n; ++v) {
                if ((m >> v) & 1u) continue;
                const Mask t = m | (Mask{1} << v);
                auto it = std::find(basis[k].begin(), basis[k].end(), t);
                if (it == basis[k].end()) continue;
                // v moves past the generators of m below it
                const int sign = __builtin_popcount(m & ((Mask{1} << v) - 1)) % 2 ? -1 : 1;
                row[static_cast<std::size_t>(it - basis[k].begin())] += sign;
            }
            rows.push_back(std::move(row));
        }
        dims.push_back(static_cast<std::int64_t>(basis[k].size()) - static_cast<std::int64_t>(rank(rows)));
    }
    return dims;
}

} // namespace oracle
