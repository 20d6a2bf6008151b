#pragma once

#include <algorithm>
#include <iterator>
#include <string>
#include <vector>

#include "raag/graph.hpp"

namespace fixtures {

using raag::Graph;

inline Graph from_pairs(const std::vector<std::pair<std::string, std::string>>& edges) {
    return raag::make_graph(edges);
}

/// Path a-b-c-d with apex e.
inline Graph gem() {
    return from_pairs({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "e"}, {"b", "e"}, {"c", "e"}, {"d", "e"}});
}

/// K4 on a,b,c,d with u joined to a,d and w joined to b,c.
inline Graph hbar() {
    return from_pairs({{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"},
                       {"u", "a"}, {"u", "d"}, {"w", "b"}, {"w", "c"}});
}

/// Triangles a-b-v and c-d-v sharing v.
inline Graph bowtie() {
    return from_pairs({{"a", "b"}, {"a", "v"}, {"b", "v"}, {"c", "d"}, {"c", "v"}, {"d", "v"}});
}

inline Graph path(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle(std::size_t n) {
    Graph g = path(n);
    g.add_edge(0, n - 1);
    return g;
}

inline Graph complete(std::size_t n) {
    Graph g(n);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) g.add_edge(i, j);
    return g;
}

inline Graph star(std::size_t leaves) {
    Graph g(leaves + 1);
    for (std::size_t i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

/// Comparability graph of the face poset of the 6-vertex real projective
/// plane; its flag complex is the barycentric subdivision.
inline Graph rp2_subdivision() {
    const std::vector<std::vector<int>> facets{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                               {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}};
    std::vector<std::vector<int>> faces;
    for (const auto& f : facets)
        for (unsigned mask = 1; mask < 8; ++mask) {
            std::vector<int> s;
            for (int i = 0; i < 3; ++i)
                if ((mask >> i) & 1u) s.push_back(f[static_cast<std::size_t>(i)]);
            faces.push_back(s);
        }
    std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    auto name = [](const std::vector<int>& f) {
        std::string s;
        for (int x : f) s += std::to_string(x);
        return s;
    };
    Graph g;
    for (const auto& f : faces) g.add_vertex(name(f));
    for (std::size_t i = 0; i < faces.size(); ++i)
        for (std::size_t j = 0; j < faces.size(); ++j)
            if (faces[i].size() < faces[j].size() &&
                std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(), faces[i].end()))
                g.add_edge(i, j);
    return g;
}

} // namespace fixtures
