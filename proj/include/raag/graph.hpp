#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "raag/error.hpp"

namespace raag {

/// Index of a vertex inside one Graph. Indices follow label insertion order.
using VertexId = std::size_t;

/// A set of vertices of one graph, kept sorted by index.
using VertexSubset = std::vector<VertexId>;

using Edge = std::pair<VertexId, VertexId>;

/**
 * Finite simplicial graph with opaque string labels.
 *
 * Vertices are numbered by first appearance and the numbering never changes,
 * so every algorithm iterating "in vertex order" is deterministic. Adjacency
 * is symmetric and irreflexive; add_edge rejects loops and repeated edges.
 */
class Graph {
public:
    Graph() = default;

    /// Graph on n isolated vertices labelled "0", "1", ...
    explicit Graph(std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) add_vertex(std::to_string(i));
    }

    VertexId add_vertex(std::string label) {
        if (index_.count(label) != 0)
            throw ValidationError("duplicate vertex label '" + label + "'");
        const VertexId id = labels_.size();
        index_.emplace(label, id);
        labels_.push_back(std::move(label));
        for (auto& row : adjacency_) row.push_back(0);
        adjacency_.emplace_back(labels_.size(), 0);
        neighbors_.emplace_back();
        return id;
    }

    /// Returns the id for label, adding the vertex if it is new.
    VertexId ensure_vertex(std::string_view label) {
        if (auto id = find(label)) return *id;
        return add_vertex(std::string(label));
    }

    void add_edge(VertexId u, VertexId v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw ValidationError("self-loop at vertex '" + labels_[u] + "'");
        if (adjacency_[u][v] != 0)
            throw ValidationError("duplicate edge '" + labels_[u] + "' - '" + labels_[v] + "'");
        adjacency_[u][v] = adjacency_[v][u] = 1;
        insert_sorted(neighbors_[u], v);
        insert_sorted(neighbors_[v], u);
        ++edge_count_;
    }

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    bool empty() const noexcept { return labels_.empty(); }

    bool adjacent(VertexId u, VertexId v) const { return adjacency_[u][v] != 0; }
    const std::vector<VertexId>& neighbors(VertexId v) const { return neighbors_[v]; }
    std::size_t degree(VertexId v) const { return neighbors_[v].size(); }

    const std::string& label(VertexId v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    std::optional<VertexId> find(std::string_view label) const {
        auto it = index_.find(std::string(label));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// All edges (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (VertexId u = 0; u < vertex_count(); ++u)
            for (VertexId v : neighbors_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool contains(VertexId v) const noexcept { return v < vertex_count(); }

    void check_vertex(VertexId v) const {
        if (!contains(v))
            throw DomainError("vertex index " + std::to_string(v) + " is not in the graph");
    }

    /// Labels of a vertex list, in the given order.
    std::vector<std::string> labels_of(const std::vector<VertexId>& vs) const {
        std::vector<std::string> out;
        out.reserve(vs.size());
        for (VertexId v : vs) out.push_back(label(v));
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.labels_ == b.labels_ && a.adjacency_ == b.adjacency_;
    }

private:
    static void insert_sorted(std::vector<VertexId>& vs, VertexId v) {
        vs.insert(std::lower_bound(vs.begin(), vs.end(), v), v);
    }

    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> index_;
    std::vector<std::vector<std::uint8_t>> adjacency_;
    std::vector<std::vector<VertexId>> neighbors_;
    std::size_t edge_count_ = 0;
};

/// Builds a graph on labels "0".."n-1" from an edge list of indices.
inline Graph make_graph(std::size_t n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

/// Builds a graph from label pairs; vertices are numbered by first appearance.
inline Graph make_graph(const std::vector<std::pair<std::string, std::string>>& edges) {
    Graph g;
    for (const auto& [a, b] : edges) {
        const VertexId u = g.ensure_vertex(a);
        const VertexId v = g.ensure_vertex(b);
        g.add_edge(u, v);
    }
    return g;
}

// ---------------------------------------------------------------------------
// Text formats
// ---------------------------------------------------------------------------

enum class GraphFormat { EdgeList, Graph6 };

/**
 * Parses the edge-list format: one edge per line as two whitespace-separated
 * labels, or a single label declaring a vertex. Blank lines and lines whose
 * first non-blank character is '#' are skipped.
 */
inline Graph parse_edge_list(std::string_view text) {
    Graph g;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;

        std::vector<std::pair<std::string_view, std::size_t>> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            if (i >= line.size()) break;
            const std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
            tokens.emplace_back(line.substr(start, i - start), start + 1);
        }

        if (!tokens.empty() && tokens.front().first.front() != '#') {
            if (tokens.size() > 2)
                throw ParseError("expected at most two labels per line", line_no,
                                 tokens[2].second);
            try {
                const VertexId u = g.ensure_vertex(tokens[0].first);
                if (tokens.size() == 2) {
                    const VertexId v = g.ensure_vertex(tokens[1].first);
                    g.add_edge(u, v);
                }
            } catch (const ValidationError& e) {
                throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
            }
        }
        if (end == text.size()) break;
        pos = end + 1;
    }
    return g;
}

/**
 * Serializes to the edge-list format so that parse_edge_list reproduces the
 * same labels in the same order. Vertex i contributes the edges to its
 * earlier neighbours, or a bare declaration when it has none.
 */
inline std::string to_edge_list(const Graph& g) {
    std::string out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        bool any = false;
        for (VertexId u : g.neighbors(v)) {
            if (u >= v) break;
            out += g.label(u) + ' ' + g.label(v) + '\n';
            any = true;
        }
        if (!any) out += g.label(v) + '\n';
    }
    return out;
}

namespace detail {

inline void append_graph6_size(std::string& out, std::size_t n) {
    if (n <= 62) {
        out += static_cast<char>(63 + n);
    } else if (n <= 258047) {
        out += '~';
        for (int shift = 12; shift >= 0; shift -= 6)
            out += static_cast<char>(63 + ((n >> shift) & 63));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6)
            out += static_cast<char>(63 + ((n >> shift) & 63));
    }
}

} // namespace detail

/// graph6 encoding: size prefix then the upper triangle column by column,
/// six bits per byte, big-endian, offset 63.
inline std::string to_graph6(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::string out;
    detail::append_graph6_size(out, n);
    int acc = 0;
    int bits = 0;
    for (VertexId j = 1; j < n; ++j) {
        for (VertexId i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out += static_cast<char>(63 + acc);
                acc = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out += static_cast<char>(63 + (acc << (6 - bits)));
    return out;
}

/// Decodes one graph6 string (an optional ">>graph6<<" header and trailing
/// newline are accepted). Vertices are labelled "0".."n-1".
inline Graph parse_graph6(std::string_view text) {
    std::size_t offset = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) offset = header.size();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    std::string_view body = text.substr(offset);

    auto byte = [&](std::size_t i) -> int {
        if (i >= body.size()) throw ParseError("unexpected end of graph6 data", 1, offset + i + 1);
        const int c = static_cast<unsigned char>(body[i]);
        if (c < 63 || c > 126)
            throw ParseError("byte outside the graph6 range 63..126", 1, offset + i + 1);
        return c - 63;
    };

    std::size_t n = 0;
    std::size_t pos = 0;
    if (body.empty()) throw ParseError("empty graph6 string", 1, offset + 1);
    if (byte(0) != 63) {
        n = static_cast<std::size_t>(byte(0));
        pos = 1;
    } else if (body.size() > 1 && byte(1) == 63) {
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | static_cast<std::size_t>(byte(i));
        pos = 8;
    } else {
        for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | static_cast<std::size_t>(byte(i));
        pos = 4;
    }

    const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t data_bytes = (pairs + 5) / 6;
    if (body.size() != pos + data_bytes) {
        const std::size_t at = std::min(body.size(), pos + data_bytes);
        throw ParseError("graph6 length does not match " + std::to_string(n) + " vertices", 1,
                         offset + at + 1);
    }

    Graph g(n);
    std::size_t k = 0;
    for (VertexId j = 1; j < n; ++j) {
        for (VertexId i = 0; i < j; ++i, ++k) {
            const int b = byte(pos + k / 6);
            if ((b >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    if (pairs % 6 != 0) {
        const int last = byte(pos + data_bytes - 1);
        if ((last & ((1 << (6 - pairs % 6)) - 1)) != 0)
            throw ParseError("nonzero graph6 padding bits", 1, offset + pos + data_bytes);
    }
    return g;
}

inline Graph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edge_list(text);
}

inline std::string serialize_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::Graph6 ? to_graph6(g) : to_edge_list(g);
}

} // namespace raag
