#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "raag/graph.hpp"
#include "raag/homology.hpp"
#include "raag/recognition.hpp"
#include "raag/structure.hpp"

namespace raag {

using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Finiteness, coherence, freeness, abelianness
// ---------------------------------------------------------------------------

/// Largest n such that the Bestvina-Brady object is of type FP_n over the
/// ring; nullopt means FP_infinity.
struct FpType {
    std::optional<int> n;

    bool infinite() const noexcept { return !n.has_value(); }
    std::string to_string() const { return n ? std::to_string(*n) : "infinity"; }
    friend bool operator==(const FpType&, const FpType&) = default;
};

/// FP_n holds iff reduced homology of the flag complex vanishes through
/// degree n-1, so the answer is the first degree with nonzero homology.
inline FpType fp_type_from(const HomologyGroups& h) {
    if (h.empty_complex) return {0};
    for (const auto& g : h.degrees)
        if (!g.is_zero()) return {g.degree};
    return {std::nullopt};
}

inline FpType fp_type(const Graph& g, const Ring& ring) {
    return fp_type_from(reduced_homology(flag_complex(g), ring));
}

struct CoherenceVerdict {
    bool coherent = false;
    std::optional<ForbiddenWitness> witness;
};

/// Coherence of the Bestvina-Brady object coincides with chordality.
inline CoherenceVerdict coherence(const Graph& g) {
    auto c = is_chordal(g);
    return {c.holds(), c.witness};
}

struct FreeVerdict {
    enum class Status { Free, NotFree, NotFinitelyGenerated };
    Status status = Status::NotFree;
    std::int64_t rank = 0;
    std::string reason;
    std::optional<ForbiddenWitness> witness;
};

inline const char* status_name(FreeVerdict::Status s) {
    switch (s) {
    case FreeVerdict::Status::Free: return "free";
    case FreeVerdict::Status::NotFree: return "not_free";
    case FreeVerdict::Status::NotFinitelyGenerated: return "not_finitely_generated";
    }
    return "?";
}

/// Free of rank v-1 exactly for trees.
inline FreeVerdict bb_free(const Graph& g) {
    const auto v = static_cast<std::int64_t>(g.vertex_count());
    const auto e = static_cast<std::int64_t>(g.edge_count());
    if (!is_connected(g))
        return {FreeVerdict::Status::NotFinitelyGenerated, 0,
                "graph is not connected, so the kernel is not finitely generated", std::nullopt};
    if (e == v - 1) return {FreeVerdict::Status::Free, v - 1, "graph is a tree", std::nullopt};
    if (clique_number(g) >= 3)
        return {FreeVerdict::Status::NotFree, 0,
                "graph contains a triangle, so cohomological dimension is at least 2", std::nullopt};
    auto c = is_chordal(g);
    return {FreeVerdict::Status::NotFree, 0,
            "graph contains an induced cycle of length at least 4, giving a subobject not of type FP_2",
            c.witness};
}

struct AbelianVerdict {
    bool abelian = false;
    std::int64_t rank = 0;
};

inline AbelianVerdict bb_abelian(const Graph& g) {
    if (!is_connected(g)) throw DomainError("bb_abelian requires a connected graph");
    const std::size_t v = g.vertex_count();
    const bool complete = g.edge_count() == v * (v - 1) / 2;
    return {complete, complete ? static_cast<std::int64_t>(v) - 1 : 0};
}

struct SubgroupVerdict {
    Recognition<DromsTreeDecomposition> recognition;
    std::string explanation;

    bool holds() const noexcept { return recognition.holds(); }
};

/// Whether every subgroup of the Bestvina-Brady group is a RAAG.
inline SubgroupVerdict subgroup_verdict(const Graph& g) {
    if (!is_connected(g)) throw DomainError("the subgroup criterion requires a connected graph");
    auto rec = is_tree_of_droms(g);
    std::string why;
    if (rec.holds()) {
        why = "tree of Droms graphs: all subgroups of B are RAAGs, B is Bloch-Kato, and B is "
              "finitely generated and locally Droms";
    } else {
        why = std::string("not a tree of Droms graphs (forbidden ") + pattern_name(rec.witness->pattern) +
              "): B has a subgroup that is not a RAAG and is not Bloch-Kato";
    }
    return {std::move(rec), std::move(why)};
}

// ---------------------------------------------------------------------------
// Structure graph of the Bestvina-Brady object
// ---------------------------------------------------------------------------

struct DerivationStep {
    enum class Kind { Point, ConeStrip, CutSplit };
    Kind kind = Kind::Point;
    VertexSubset vertices;
    VertexId pivot = 0;
    std::vector<VertexSubset> blocks;
};

inline const char* step_name(DerivationStep::Kind k) {
    switch (k) {
    case DerivationStep::Kind::Point: return "point";
    case DerivationStep::Kind::ConeStrip: return "cone_strip";
    case DerivationStep::Kind::CutSplit: return "cut_split";
    }
    return "?";
}

/// Defining graph of a RAAG isomorphic to the Bestvina-Brady object, with
/// the derivation that produced it. A vertex x of a cone with apex z is the
/// generator x z^-1 and is labelled "x/z".
struct StructureGraph {
    Graph graph;
    std::vector<DerivationStep> log;
};

namespace detail {

inline Graph cone_reduction(const Graph& g, const VertexSubset& s, VertexId apex) {
    const VertexSubset rest = without(s, apex);
    Graph h;
    for (VertexId x : rest) h.add_vertex(g.label(x) + "/" + g.label(apex));
    for (std::size_t i = 0; i < rest.size(); ++i)
        for (std::size_t j = i + 1; j < rest.size(); ++j)
            if (g.adjacent(rest[i], rest[j])) h.add_edge(i, j);
    return h;
}

inline Graph structure_within(const Graph& g, const VertexSubset& s, std::vector<DerivationStep>& log) {
    if (s.size() == 1) {
        log.push_back({DerivationStep::Kind::Point, s, s.front(), {}});
        return Graph{};
    }
    if (auto z = first_central_within(g, s)) {
        log.push_back({DerivationStep::Kind::ConeStrip, s, *z, {}});
        return cone_reduction(g, s, *z);
    }
    const Graph h = induced_subgraph(g, s);
    const auto cuts = cut_vertices(h);
    if (cuts.empty()) throw std::logic_error("tree of Droms piece without central or cut vertex");
    auto blocks = blocks_at(h, cuts.front()).blocks;
    for (auto& b : blocks) b = lift(s, b);
    log.push_back({DerivationStep::Kind::CutSplit, s, s[cuts.front()], blocks});
    Graph out;
    for (const auto& b : blocks) out = disjoint_union(out, structure_within(g, b, log));
    return out;
}

} // namespace detail

/// Cone over Y: the kernel is the RAAG on Y. Tree of Droms graphs split at
/// a cut vertex into a free product over the blocks. Anything else is
/// refused.
inline StructureGraph bb_structure_graph(const Graph& g) {
    if (!is_connected(g)) throw DomainError("bb_structure_graph requires a connected graph");
    if (central_vertices(g).empty()) {
        auto rec = is_tree_of_droms(g);
        if (!rec)
            throw NotSupported(std::string("no central vertex and not a tree of Droms graphs (induced ") +
                               pattern_name(rec.witness->pattern) +
                               "); the free-product split is not established here");
    }
    StructureGraph out;
    out.graph = detail::structure_within(g, all_vertices(g), out.log);
    return out;
}

/// Replays a derivation log against g; nullopt if any step is inconsistent.
inline std::optional<Graph> replay_structure(const Graph& g, const std::vector<DerivationStep>& log) {
    std::deque<VertexSubset> pending{all_vertices(g)};
    Graph out;
    for (const auto& step : log) {
        if (pending.empty() || pending.front() != step.vertices) return std::nullopt;
        pending.pop_front();
        const auto& s = step.vertices;
        switch (step.kind) {
        case DerivationStep::Kind::Point:
            if (s.size() != 1) return std::nullopt;
            break;
        case DerivationStep::Kind::ConeStrip: {
            if (!std::binary_search(s.begin(), s.end(), step.pivot)) return std::nullopt;
            for (VertexId x : s)
                if (x != step.pivot && !g.adjacent(x, step.pivot)) return std::nullopt;
            out = disjoint_union(out, detail::cone_reduction(g, s, step.pivot));
            break;
        }
        case DerivationStep::Kind::CutSplit: {
            const Graph h = induced_subgraph(g, s);
            auto local = std::find(s.begin(), s.end(), step.pivot);
            if (local == s.end()) return std::nullopt;
            std::vector<VertexSubset> expected;
            try {
                expected = blocks_at(h, static_cast<VertexId>(local - s.begin())).blocks;
            } catch (const DomainError&) {
                return std::nullopt;
            }
            for (auto& b : expected) b = lift(s, b);
            if (expected != step.blocks) return std::nullopt;
            pending.insert(pending.begin(), expected.begin(), expected.end());
            break;
        }
        }
    }
    if (!pending.empty()) return std::nullopt;
    return out;
}

// ---------------------------------------------------------------------------
// The omega invariant and inequalities
// ---------------------------------------------------------------------------

/// omega = (cd - 1) b1^2 - 2 cd b2.
inline std::int64_t omega(std::int64_t b1, std::int64_t b2, std::int64_t cd) {
    if (cd < 1) throw DomainError("omega needs cohomological dimension >= 1");
    return (cd - 1) * b1 * b1 - 2 * cd * b2;
}

/// (n+1) omega(B) = n omega(L) - (b1(L) - n - 1)^2, with cd(L) = n + 1 the
/// clique number, b1(B) = v - 1, b2(B) = e - v + 1 and cd(B) = n.
struct IdentityCheck {
    bool applicable = false;
    std::string reason;
    std::int64_t n = 0;
    std::int64_t omega_L = 0;
    std::int64_t omega_B = 0;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;

    bool holds() const noexcept { return applicable && lhs == rhs; }
};

inline IdentityCheck omega_identity_check(const Graph& g) {
    IdentityCheck out;
    if (!is_connected(g)) {
        out.reason = "graph is not connected";
        return out;
    }
    const SimplicialComplex c = flag_complex(g);
    if (!reduced_homology(c, Ring::rationals()).vanishes_through(1)) {
        out.reason = "flag complex is not 1-acyclic over Q";
        return out;
    }
    const auto v = static_cast<std::int64_t>(g.vertex_count());
    const auto e = static_cast<std::int64_t>(g.edge_count());
    const std::int64_t n = c.dimension();
    if (n < 1) {
        out.reason = "flag complex has dimension 0 (B is trivial)";
        return out;
    }
    out.applicable = true;
    out.n = n;
    out.omega_L = omega(v, e, n + 1);
    out.omega_B = omega(v - 1, e - v + 1, n);
    out.lhs = (n + 1) * out.omega_B;
    out.rhs = n * out.omega_L - (v - n - 1) * (v - n - 1);
    return out;
}

struct InequalityOutcome {
    enum class Status { Pass, Fail, Skipped };
    std::string name;
    std::string statement;
    Status status = Status::Skipped;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    std::string reason;
};

inline const char* status_name(InequalityOutcome::Status s) {
    switch (s) {
    case InequalityOutcome::Status::Pass: return "pass";
    case InequalityOutcome::Status::Fail: return "fail";
    case InequalityOutcome::Status::Skipped: return "skipped";
    }
    return "?";
}

/**
 * Evaluates the inequalities exactly:
 *  - "acyclic_bound":       n(v^2 - 2e - 1) >= (v-1)^2 for acyclic flag complexes of dimension n
 *                            (acyclic over every ring in `rings`);
 *  - "tree_of_droms_omega": n omega(L) >= (v - n - 1)^2 for trees of Droms graphs, clique number n+1;
 *  - "tree_of_droms_bound": n(v^2 - 2e - 2) >= (v-1)^2 under the same hypothesis;
 *  - "two_dim_edge_bound":  (v+1)^2 >= 4(e+1) for acyclic 2-dimensional flag complexes;
 *  - "turan":               omega(L) >= 0 whenever the graph has a vertex.
 */
inline std::vector<InequalityOutcome> inequality_checks(const Graph& g,
                                                        const std::vector<Ring>& rings = {Ring::rationals()}) {
    using S = InequalityOutcome::Status;
    const auto v = static_cast<std::int64_t>(g.vertex_count());
    const auto e = static_cast<std::int64_t>(g.edge_count());
    const SimplicialComplex c = flag_complex(g);
    const std::int64_t n = c.dimension();
    bool acyclic = !rings.empty();
    std::string which;
    for (const auto& r : rings)
        if (!reduced_homology(c, r).vanishes()) {
            acyclic = false;
            which = r.name();
            break;
        }
    auto judge = [](InequalityOutcome o) {
        o.status = o.lhs >= o.rhs ? S::Pass : S::Fail;
        return o;
    };
    std::vector<InequalityOutcome> out;

    InequalityOutcome acyclic_bound;
    acyclic_bound.name = "acyclic_bound";
    acyclic_bound.statement = "n(v^2-2e-1) >= (v-1)^2";
    if (acyclic) {
        acyclic_bound.lhs = n * (v * v - 2 * e - 1);
        acyclic_bound.rhs = (v - 1) * (v - 1);
        acyclic_bound = judge(acyclic_bound);
    } else {
        acyclic_bound.reason = rings.empty() ? "no ring selected" : "flag complex not acyclic over " + which;
    }
    out.push_back(acyclic_bound);

    const bool tree_of_droms = is_tree_of_droms(g).holds();
    InequalityOutcome omega_form;
    omega_form.name = "tree_of_droms_omega";
    omega_form.statement = "n*omega(L) >= (v-n-1)^2";
    InequalityOutcome count_form;
    count_form.name = "tree_of_droms_bound";
    count_form.statement = "n(v^2-2e-2) >= (v-1)^2";
    if (tree_of_droms && n >= 0) {
        omega_form.lhs = n * omega(v, e, n + 1);
        omega_form.rhs = (v - n - 1) * (v - n - 1);
        omega_form = judge(omega_form);
        count_form.lhs = n * (v * v - 2 * e - 2);
        count_form.rhs = (v - 1) * (v - 1);
        count_form = judge(count_form);
    } else {
        omega_form.reason = count_form.reason = "not a tree of Droms graphs";
    }
    out.push_back(omega_form);
    out.push_back(count_form);

    InequalityOutcome two_dim;
    two_dim.name = "two_dim_edge_bound";
    two_dim.statement = "(v+1)^2 >= 4(e+1)";
    if (acyclic && n == 2) {
        two_dim.lhs = (v + 1) * (v + 1);
        two_dim.rhs = 4 * (e + 1);
        two_dim = judge(two_dim);
    } else {
        two_dim.reason = acyclic ? "flag complex is not 2-dimensional" : acyclic_bound.reason;
    }
    out.push_back(two_dim);

    InequalityOutcome turan;
    turan.name = "turan";
    turan.statement = "omega(L) >= 0";
    if (v >= 1) {
        turan.lhs = omega(v, e, static_cast<std::int64_t>(clique_number(g)));
        turan.rhs = 0;
        turan = judge(turan);
    } else {
        turan.reason = "empty graph";
    }
    out.push_back(turan);
    return out;
}

// ---------------------------------------------------------------------------
// The quotient algebra A and the Hilbert series check
// ---------------------------------------------------------------------------

/// Graded dimensions of A = H(L)/(chi * H^1(L)) over a field, where H(L)
/// is the exterior face algebra of the graph (basis: cliques) and chi is
/// the sum of the vertices. Degrees run from 0 to the clique number.
struct CohomologyQuotient {
    Ring ring = Ring::rationals();
    std::vector<std::size_t> clique_counts;
    std::vector<std::int64_t> dims;
};

/// Matrix of x -> chi ^ x from degree k-1 to degree k in the clique basis.
/// For a clique s and v not in s, v ^ s = (-1)^{#{u in s : u < v}} (s + v).
inline IntegerMatrix chi_multiplication(const std::vector<VertexSubset>& lower,
                                        const std::vector<VertexSubset>& upper) {
    std::map<VertexSubset, std::size_t> row;
    for (std::size_t i = 0; i < upper.size(); ++i) row.emplace(upper[i], i);
    IntegerMatrix m(upper.size(), lower.size());
    for (std::size_t j = 0; j < lower.size(); ++j) {
        const auto& s = lower[j];
        for (const auto& [t, i] : row) {
            if (!std::includes(t.begin(), t.end(), s.begin(), s.end())) continue;
            VertexSubset extra;
            std::set_difference(t.begin(), t.end(), s.begin(), s.end(), std::back_inserter(extra));
            const VertexId v = extra.front();
            const auto before = std::count_if(s.begin(), s.end(), [v](VertexId u) { return u < v; });
            m(i, j) = before % 2 == 0 ? 1 : -1;
        }
    }
    return m;
}

inline CohomologyQuotient a_gamma_dimensions(const Graph& g, const Ring& ring) {
    if (!ring.is_field()) throw DomainError("a_gamma_dimensions needs a field, got " + ring.name());
    std::vector<std::vector<VertexSubset>> by_size;
    for (auto& c : all_cliques(g)) {
        if (by_size.size() <= c.size()) by_size.resize(c.size() + 1);
        by_size[c.size()].push_back(std::move(c));
    }
    CohomologyQuotient out;
    out.ring = ring;
    for (std::size_t k = 0; k < by_size.size(); ++k) {
        out.clique_counts.push_back(by_size[k].size());
        std::int64_t dim = static_cast<std::int64_t>(by_size[k].size());
        if (k > 0) dim -= static_cast<std::int64_t>(ring.rank(chi_multiplication(by_size[k - 1], by_size[k])));
        out.dims.push_back(dim);
    }
    return out;
}

/// Power series truncated at a fixed degree, exact rational coefficients.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t degree_bound) : c_(degree_bound + 1, Rational(0)) {}

    template <class Int>
    static TruncatedSeries from_polynomial(const std::vector<Int>& coeffs, std::size_t degree_bound) {
        TruncatedSeries s(degree_bound);
        for (std::size_t i = 0; i < coeffs.size() && i <= degree_bound; ++i) s.c_[i] = Rational(coeffs[i]);
        return s;
    }

    std::size_t degree_bound() const noexcept { return c_.size() - 1; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    Rational& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Rational>& coefficients() const noexcept { return c_; }

    /// f(t) -> f(-t)
    TruncatedSeries alternate() const {
        TruncatedSeries s = *this;
        for (std::size_t i = 1; i < c_.size(); i += 2) s.c_[i] = -s.c_[i];
        return s;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries s(a.degree_bound());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; i + j < s.c_.size(); ++j) s.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return s;
    }

    TruncatedSeries inverse() const {
        if (c_[0] == 0) throw DomainError("series with zero constant term is not invertible");
        TruncatedSeries s(degree_bound());
        s.c_[0] = Rational(1) / c_[0];
        for (std::size_t k = 1; k < c_.size(); ++k) {
            Rational acc = 0;
            for (std::size_t i = 1; i <= k; ++i) acc += c_[i] * s.c_[k - i];
            s.c_[k] = -acc / c_[0];
        }
        return s;
    }

    bool is_one() const {
        if (c_[0] != 1) return false;
        return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& x) { return x == 0; });
    }

private:
    std::vector<Rational> c_;
};

/// Koszul duality test on Hilbert series: with C the clique polynomial,
/// h_U(t) = (1 - t) / C(-t) and h_A from a_gamma_dimensions, checks
/// h_A(-t) h_U(t) = 1 through degree N.
struct HilbertCheck {
    bool applicable = false;
    std::string reason;
    std::size_t degree_bound = 0;
    std::vector<Rational> h_U;
    std::vector<Rational> h_A;
    std::vector<Rational> product;
    bool passed = false;

    bool holds() const noexcept { return applicable && passed; }
};

inline HilbertCheck koszul_hilbert_check(const Graph& g, std::size_t degree_bound = 12,
                                         const Ring& ring = Ring::rationals()) {
    if (!ring.is_field()) throw DomainError("koszul_hilbert_check needs a field, got " + ring.name());
    HilbertCheck out;
    out.degree_bound = degree_bound;
    if (!is_connected(g)) {
        out.reason = "graph is not connected";
        return out;
    }
    if (!is_acyclic(flag_complex(g), ring)) {
        out.reason = "flag complex is not acyclic over " + ring.name();
        return out;
    }
    out.applicable = true;
    const auto quotient = a_gamma_dimensions(g, ring);
    const auto clique_poly = TruncatedSeries::from_polynomial(quotient.clique_counts, degree_bound);
    const auto one_minus_t = TruncatedSeries::from_polynomial(std::vector<int>{1, -1}, degree_bound);
    const TruncatedSeries h_u = one_minus_t * clique_poly.alternate().inverse();
    const auto h_a = TruncatedSeries::from_polynomial(quotient.dims, degree_bound);
    const TruncatedSeries prod = h_a.alternate() * h_u;
    out.h_U = h_u.coefficients();
    out.h_A = h_a.coefficients();
    out.product = prod.coefficients();
    out.passed = prod.is_one();
    return out;
}

// ---------------------------------------------------------------------------
// Full report
// ---------------------------------------------------------------------------

enum class TriState { Yes, No, Unknown };

inline const char* tri_name(TriState t) {
    switch (t) {
    case TriState::Yes: return "yes";
    case TriState::No: return "no";
    case TriState::Unknown: return "unknown";
    }
    return "?";
}

struct RingSection {
    Ring ring = Ring::integers();
    HomologyGroups homology;
    FpType fp;
    bool lie_finitely_presented = false;
    std::optional<std::int64_t> b2_B;
    std::optional<std::int64_t> omega_B;
    std::optional<CohomologyQuotient> quotient;
    std::optional<HilbertCheck> hilbert;
};

struct ReportOptions {
    std::vector<Ring> rings{Ring::integers(), Ring::rationals()};
    std::size_t degree_bound = 12;
};

struct InvariantReport {
    std::int64_t v = 0;
    std::int64_t e = 0;
    int n_flag = -1;
    std::int64_t cd_L = 0;
    std::int64_t b1_L = 0;
    std::int64_t b2_L = 0;
    bool connected = false;
    std::optional<std::int64_t> b1_B;
    std::optional<std::int64_t> omega_L;
    std::vector<RingSection> rings;

    CollapseResult collapse;
    TriState finitely_presented_group = TriState::Unknown;
    std::string finitely_presented_reason;

    CoherenceVerdict coherent;
    FreeVerdict free;
    std::optional<AbelianVerdict> abelian;
    std::optional<SubgroupVerdict> subgroups;
    std::optional<StructureGraph> structure;
    std::string structure_note;

    IdentityCheck omega_identity;
    std::vector<InequalityOutcome> inequalities;
};

inline InvariantReport make_report(const Graph& g, const ReportOptions& opts = {}) {
    if (opts.degree_bound < 2) throw DomainError("degree bound must be at least 2");
    InvariantReport r;
    const SimplicialComplex c = flag_complex(g);
    r.v = static_cast<std::int64_t>(g.vertex_count());
    r.e = static_cast<std::int64_t>(g.edge_count());
    r.n_flag = c.dimension();
    r.cd_L = static_cast<std::int64_t>(clique_number(g));
    r.b1_L = r.v;
    r.b2_L = r.e;
    r.connected = is_connected(g);
    if (r.connected) r.b1_B = r.v - 1;
    if (r.cd_L >= 1) r.omega_L = omega(r.b1_L, r.b2_L, r.cd_L);

    for (const auto& ring : opts.rings) {
        RingSection s;
        s.ring = ring;
        s.homology = reduced_homology(c, ring);
        s.fp = fp_type_from(s.homology);
        s.lie_finitely_presented = r.connected && s.homology.vanishes_through(1);
        if (r.connected && s.homology.vanishes_through(1)) {
            s.b2_B = r.e - r.v + 1;
            if (r.n_flag >= 1) s.omega_B = omega(r.v - 1, *s.b2_B, r.n_flag);
        }
        if (ring.is_field()) {
            s.quotient = a_gamma_dimensions(g, ring);
            s.hilbert = koszul_hilbert_check(g, opts.degree_bound, ring);
        }
        r.rings.push_back(std::move(s));
    }

    r.collapse = collapse_to_point(c);
    if (!r.connected) {
        r.finitely_presented_group = TriState::No;
        r.finitely_presented_reason = "graph is not connected (B not finitely generated)";
    } else if (r.collapse.collapsible) {
        r.finitely_presented_group = TriState::Yes;
        r.finitely_presented_reason = "flag complex collapses to a point";
    } else if (auto h1 = reduced_homology(c, Ring::integers()).at(1); h1 && !h1->is_zero()) {
        r.finitely_presented_group = TriState::No;
        r.finitely_presented_reason = "H_1 of the flag complex over Z is nonzero";
    } else {
        r.finitely_presented_group = TriState::Unknown;
        r.finitely_presented_reason = "greedy collapse got stuck and H_1 over Z vanishes";
    }

    r.coherent = coherence(g);
    r.free = bb_free(g);
    if (r.connected) {
        r.abelian = bb_abelian(g);
        r.subgroups = subgroup_verdict(g);
        try {
            r.structure = bb_structure_graph(g);
        } catch (const NotSupported& e) {
            r.structure_note = e.what();
        }
    } else {
        r.structure_note = "graph is not connected";
    }
    r.omega_identity = omega_identity_check(g);
    r.inequalities = inequality_checks(g);
    return r;
}

} // namespace raag
