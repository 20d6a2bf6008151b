#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "raag/graph.hpp"
#include "raag/linalg.hpp"
#include "raag/structure.hpp"

namespace raag {

/// Coefficient ring for homology: the integers, the rationals, or F_p.
class Ring {
public:
    enum class Kind { Integers, Rationals, PrimeField };

    static Ring integers() { return Ring(Kind::Integers, 0); }
    static Ring rationals() { return Ring(Kind::Rationals, 0); }
    static Ring prime_field(std::int64_t p) {
        if (!is_prime(p)) throw DomainError("F_p needs a prime p, got " + std::to_string(p));
        return Ring(Kind::PrimeField, p);
    }

    /// Parses "Z", "Q" or "Fp:<p>".
    static Ring parse(std::string_view text) {
        if (text == "Z") return integers();
        if (text == "Q") return rationals();
        if (text.substr(0, 3) == "Fp:") {
            const std::string digits(text.substr(3));
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
                digits.size() > 12)
                throw DomainError("bad prime in ring '" + std::string(text) + "'");
            return prime_field(std::stoll(digits));
        }
        throw DomainError("unknown ring '" + std::string(text) + "' (expected Z, Q or Fp:<p>)");
    }

    Kind kind() const noexcept { return kind_; }
    std::int64_t characteristic() const noexcept { return p_; }
    bool is_field() const noexcept { return kind_ != Kind::Integers; }

    std::string name() const {
        switch (kind_) {
        case Kind::Integers: return "Z";
        case Kind::Rationals: return "Q";
        case Kind::PrimeField: return "Fp:" + std::to_string(p_);
        }
        return "?";
    }

    /// Rank of an integer matrix read over this ring (over Z: rank over Q).
    std::size_t rank(const IntegerMatrix& m) const {
        switch (kind_) {
        case Kind::PrimeField: return rank_mod_p(m, p_);
        default: return rank_rational(m);
        }
    }

    friend bool operator==(const Ring&, const Ring&) = default;

private:
    Ring(Kind k, std::int64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::int64_t p_;
};

using Face = VertexSubset;

/// Simplicial complex stored as faces by dimension; each face is a sorted
/// vertex list and faces of one dimension are in lexicographic order.
struct SimplicialComplex {
    std::size_t vertex_count = 0;
    std::vector<std::vector<Face>> faces;

    /// -1 for the empty complex.
    int dimension() const { return static_cast<int>(faces.size()) - 1; }

    std::size_t face_count(int d) const {
        if (d < 0 || d > dimension()) return 0;
        return faces[static_cast<std::size_t>(d)].size();
    }

    std::size_t total_faces() const {
        std::size_t k = 0;
        for (const auto& f : faces) k += f.size();
        return k;
    }

    std::int64_t euler_characteristic() const {
        std::int64_t chi = 0;
        for (int d = 0; d <= dimension(); ++d)
            chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(face_count(d));
        return chi;
    }
};

/// Flag (clique) complex: the d-faces are the (d+1)-cliques of g.
inline SimplicialComplex flag_complex(const Graph& g) {
    SimplicialComplex c;
    c.vertex_count = g.vertex_count();
    for (auto& clique : all_cliques(g)) {
        if (clique.empty()) continue;
        if (c.faces.size() < clique.size()) c.faces.resize(clique.size());
        c.faces[clique.size() - 1].push_back(std::move(clique));
    }
    return c;
}

/**
 * Boundary map of the augmented chain complex from dimension d to d-1.
 *
 * d = 0 is the augmentation onto the single (-1)-face. Rows index (d-1)-faces,
 * columns index d-faces; deleting the i-th vertex of a face carries (-1)^i.
 */
inline IntegerMatrix boundary_matrix(const SimplicialComplex& c, int d) {
    if (d < 0 || d > c.dimension()) {
        const std::size_t rows = d == c.dimension() + 1 ? c.face_count(d - 1) : 0;
        return IntegerMatrix(rows, 0);
    }
    const auto& cols = c.faces[static_cast<std::size_t>(d)];
    if (d == 0) {
        IntegerMatrix m(1, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) m(0, j) = 1;
        return m;
    }
    const auto& rows = c.faces[static_cast<std::size_t>(d - 1)];
    std::map<Face, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
    IntegerMatrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Face& f = cols[j];
        for (std::size_t i = 0; i < f.size(); ++i) {
            Face facet = f;
            facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(i));
            m(row_index.at(facet), j) = (i % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

/// Reduced homology in one degree: free rank plus torsion invariant factors.
struct HomologyGroup {
    int degree = 0;
    std::int64_t free_rank = 0;
    std::vector<std::int64_t> torsion;

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
};

/// Reduced homology of a complex over one ring, degrees 0..dim. The empty
/// complex has a single nonzero group in degree -1.
struct HomologyGroups {
    Ring ring = Ring::integers();
    std::vector<HomologyGroup> degrees;
    bool empty_complex = false;

    bool vanishes() const {
        return !empty_complex &&
               std::all_of(degrees.begin(), degrees.end(), [](const auto& h) { return h.is_zero(); });
    }

    /// True when reduced homology vanishes in every degree <= k.
    bool vanishes_through(int k) const {
        if (empty_complex) return false;
        for (const auto& h : degrees)
            if (h.degree <= k && !h.is_zero()) return false;
        return true;
    }

    const HomologyGroup* at(int degree) const {
        for (const auto& h : degrees)
            if (h.degree == degree) return &h;
        return nullptr;
    }
};

/// Reduced simplicial homology. Over Z the Smith normal forms of the
/// augmented boundary maps give free ranks and torsion; over a field only
/// the ranks of the boundary maps are needed.
inline HomologyGroups reduced_homology(const SimplicialComplex& c, const Ring& ring,
                                       const SNFOptions& snf = {}) {
    HomologyGroups out;
    out.ring = ring;
    const int dim = c.dimension();
    if (dim < 0) {
        out.empty_complex = true;
        return out;
    }
    // rank[d] = rank of boundary d -> d-1, for d = 0..dim+1
    std::vector<std::size_t> rank(static_cast<std::size_t>(dim) + 2, 0);
    std::vector<std::vector<std::int64_t>> factors(static_cast<std::size_t>(dim) + 2);
    for (int d = 0; d <= dim; ++d) {
        const IntegerMatrix m = boundary_matrix(c, d);
        if (ring.kind() == Ring::Kind::Integers) {
            auto r = smith_normal_form(m, snf);
            rank[static_cast<std::size_t>(d)] = r.rank;
            factors[static_cast<std::size_t>(d)] = std::move(r.factors);
        } else {
            rank[static_cast<std::size_t>(d)] = ring.rank(m);
        }
    }
    for (int d = 0; d <= dim; ++d) {
        HomologyGroup h;
        h.degree = d;
        const auto ud = static_cast<std::size_t>(d);
        h.free_rank = static_cast<std::int64_t>(c.face_count(d)) -
                      static_cast<std::int64_t>(rank[ud]) - static_cast<std::int64_t>(rank[ud + 1]);
        for (std::int64_t f : factors[ud + 1])
            if (f > 1) h.torsion.push_back(f);
        out.degrees.push_back(std::move(h));
    }
    return out;
}

inline bool is_acyclic(const SimplicialComplex& c, const Ring& ring) {
    return reduced_homology(c, ring).vanishes();
}

// ---------------------------------------------------------------------------
// Elementary collapses
// ---------------------------------------------------------------------------

struct CollapseStep {
    Face free_face;
    Face coface;
};

/// Greedy collapse outcome. When `collapsible` is false the `remaining`
/// complex has no free face and is not a single vertex; that verdict is
/// inconclusive about contractibility.
struct CollapseResult {
    bool collapsible = false;
    std::vector<CollapseStep> steps;
    SimplicialComplex remaining;
};

namespace detail {

inline SimplicialComplex complex_from_faces(std::size_t vertex_count,
                                            const std::map<Face, std::size_t, SizeThenLex>& faces) {
    SimplicialComplex c;
    c.vertex_count = vertex_count;
    for (const auto& [f, cofaces] : faces) {
        if (c.faces.size() < f.size()) c.faces.resize(f.size());
        c.faces[f.size() - 1].push_back(f);
    }
    return c;
}

} // namespace detail

/**
 * Greedy elementary collapses. A face is free when exactly one face of the
 * next dimension contains it; the first free face in (dimension, lex) order
 * is removed with its coface until none is left.
 */
inline CollapseResult collapse_to_point(const SimplicialComplex& c) {
    // face -> number of faces of the next dimension containing it
    std::map<Face, std::size_t, SizeThenLex> faces;
    for (const auto& layer : c.faces)
        for (const auto& f : layer) faces.emplace(f, 0);
    for (const auto& [f, k] : faces) {
        for (std::size_t i = 0; i < f.size() && f.size() > 1; ++i) {
            Face facet = f;
            facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(i));
            ++faces.at(facet);
        }
    }
    auto only_coface = [&](const Face& f) -> Face {
        for (const auto& [g, k] : faces) {
            if (g.size() != f.size() + 1) continue;
            if (std::includes(g.begin(), g.end(), f.begin(), f.end())) return g;
        }
        throw std::logic_error("free face without coface");
    };

    CollapseResult out;
    while (true) {
        auto it = std::find_if(faces.begin(), faces.end(), [](const auto& e) { return e.second == 1; });
        if (it == faces.end()) break;
        const Face sigma = it->first;
        const Face tau = only_coface(sigma);
        out.steps.push_back({sigma, tau});
        for (const Face* removed : {&tau, &sigma}) {
            for (std::size_t i = 0; i < removed->size() && removed->size() > 1; ++i) {
                Face facet = *removed;
                facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(i));
                auto f = faces.find(facet);
                if (f != faces.end()) --f->second;
            }
            faces.erase(*removed);
        }
    }
    out.remaining = detail::complex_from_faces(c.vertex_count, faces);
    out.collapsible = faces.size() == 1 && faces.begin()->first.size() == 1;
    return out;
}

/// Replays a collapse sequence on c and reports whether every step removes a
/// free face together with its unique coface and the end is one vertex.
inline bool replay_collapse(const SimplicialComplex& c, const std::vector<CollapseStep>& steps) {
    std::vector<Face> faces;
    for (const auto& layer : c.faces) faces.insert(faces.end(), layer.begin(), layer.end());
    auto present = [&](const Face& f) { return std::find(faces.begin(), faces.end(), f) != faces.end(); };
    for (const auto& s : steps) {
        if (!present(s.free_face) || !present(s.coface)) return false;
        std::size_t containing = 0;
        for (const auto& f : faces)
            if (f.size() > s.free_face.size() &&
                std::includes(f.begin(), f.end(), s.free_face.begin(), s.free_face.end()))
                ++containing;
        if (containing != 1 || s.coface.size() != s.free_face.size() + 1 ||
            !std::includes(s.coface.begin(), s.coface.end(), s.free_face.begin(), s.free_face.end()))
            return false;
        faces.erase(std::find(faces.begin(), faces.end(), s.coface));
        faces.erase(std::find(faces.begin(), faces.end(), s.free_face));
    }
    return faces.size() == 1 && faces.front().size() == 1;
}

} // namespace raag
