/**
 * Exact coordinate models for the named polytope families, the two
 * truncation operations, and a small recipe language ("pyramid(delta(2,4),1)")
 * that names every construction and rebuilds it.
 *
 * Every construction goes through facet_enumerate, so the combinatorics of a
 * Polytope are always those of its coordinates.
 */
#pragma once

#include <cctype>
#include <cstddef>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hull.hpp"
#include "lattice.hpp"
#include "rational.hpp"

namespace polycomb {

/** Points in convex position, their hull and its combinatorial structure. Immutable. */
class Polytope
{
    public:
        /// Every point must be a vertex of the hull.
        Polytope(PointSet points, std::string provenance)
        : points_(std::move(points)), provenance_(std::move(provenance)), structure_(make(points_, hull_))
        {
        }

        /// Keeps only the points that are vertices of their convex hull.
        static Polytope hull_of(const PointSet& points, std::string provenance)
        {
            const HullResult     hr = facet_enumerate(points);
            std::vector<RVector> verts;
            for (std::size_t i = 0; i < points.size(); ++i)
                if (hr.vertex_flags[i])
                    verts.push_back(points[i]);
            return Polytope(PointSet(points.dim(), std::move(verts)), std::move(provenance));
        }

        std::size_t dim() const noexcept { return points_.dim(); }
        const PointSet& points() const noexcept { return points_; }
        const RVector& vertex(std::size_t i) const { return points_[i]; }
        const std::vector<Hyperplane>& facet_planes() const noexcept { return hull_.facets; }
        const Structure& structure() const noexcept { return structure_; }
        const CombPolytope& comb() const noexcept { return structure_.comb(); }
        const Graph& graph() const noexcept { return structure_.graph(); }
        const std::string& provenance() const noexcept { return provenance_; }

        std::size_t num_vertices() const noexcept { return points_.size(); }
        std::size_t num_edges() const { return structure_.num_edges(); }
        std::size_t num_facets() const noexcept { return structure_.num_facets(); }
        long excess() const
        {
            return 2 * static_cast<long>(num_edges()) - static_cast<long>(dim() * num_vertices());
        }

        std::vector<std::size_t> simple_vertices() const
        {
            std::vector<std::size_t> out;
            for (std::size_t u = 0; u < num_vertices(); ++u)
                if (graph().degree(u) == dim())
                    out.push_back(u);
            return out;
        }
        std::vector<std::size_t> nonsimple_vertices() const
        {
            std::vector<std::size_t> out;
            for (std::size_t u = 0; u < num_vertices(); ++u)
                if (graph().degree(u) > dim())
                    out.push_back(u);
            return out;
        }

    private:
        static Structure make(const PointSet& ps, HullResult& hull)
        {
            hull = facet_enumerate(ps);
            if (!verify_vertices(ps, hull))
                throw std::invalid_argument("Polytope: some points are not vertices of their convex hull");
            return Structure(CombPolytope(ps.dim(), ps.size(), hull.incidence));
        }

        PointSet    points_;
        std::string provenance_;
        HullResult  hull_;
        Structure   structure_;
};

namespace detail {

inline long binom2(long n)
{
    return n * (n - 1) / 2;
}

inline void expect(bool ok, const std::string& what)
{
    if (!ok)
        throw std::logic_error("construction invariant violated: " + what);
}

inline void require(bool ok, const std::string& what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

inline std::string call(std::string_view name, std::initializer_list<std::string> args)
{
    std::string s(name);
    s += '(';
    bool first = true;
    for (const auto& a : args) {
        s += first ? "" : ",";
        s += a;
        first = false;
    }
    return s + ')';
}

} // namespace detail

// ---------------------------------------------------------------- basic operations

inline Polytope simplex(std::size_t d)
{
    detail::require(d >= 1, "simplex: d >= 1");
    std::vector<RVector> pts{RVector(d)};
    for (std::size_t i = 0; i < d; ++i)
        pts.push_back(RVector::unit(d, i));
    return Polytope(PointSet(d, std::move(pts)), detail::call("simplex", {std::to_string(d)}));
}

/** P x [0,1]. */
inline Polytope prism_over(const Polytope& p, std::string provenance = {})
{
    std::vector<RVector> pts;
    for (const auto& x : p.points().points())
        pts.push_back(x.lifted(0));
    for (const auto& x : p.points().points())
        pts.push_back(x.lifted(1));
    if (provenance.empty())
        provenance = detail::call("prism_over", {p.provenance()});
    return Polytope(PointSet(p.dim() + 1, std::move(pts)), std::move(provenance));
}

/** Simplicial d-prism; prism(1) is a segment. */
inline Polytope prism(std::size_t d)
{
    detail::require(d >= 1, "prism: d >= 1");
    auto name = detail::call("prism", {std::to_string(d)});
    if (d == 1)
        return Polytope(PointSet(1, {RVector{0}, RVector{1}}), name);
    return prism_over(simplex(d - 1), name);
}

inline Polytope cube(std::size_t d)
{
    detail::require(d >= 1, "cube: d >= 1");
    Polytope c = prism(1);
    for (std::size_t k = 2; k <= d; ++k)
        c = prism_over(c, detail::call("cube", {std::to_string(k)}));
    return Polytope(c.points(), detail::call("cube", {std::to_string(d)}));
}

/** Convex hull of +-e_i. */
inline Polytope cross(std::size_t d)
{
    detail::require(d >= 1, "cross: d >= 1");
    std::vector<RVector> pts;
    for (std::size_t i = 0; i < d; ++i) {
        pts.push_back(RVector::unit(d, i));
        pts.push_back(-RVector::unit(d, i));
    }
    return Polytope(PointSet(d, std::move(pts)), detail::call("cross", {std::to_string(d)}));
}

/**
 * r-fold pyramid: P sits at height 0 and apex i is the unit vector of the
 * i-th new coordinate, which lies off the affine hull of everything before it.
 */
inline Polytope pyramid(const Polytope& p, std::size_t r, std::string provenance = {})
{
    detail::require(r >= 1, "pyramid: r >= 1");
    const std::size_t    d = p.dim() + r;
    std::vector<RVector> pts;
    for (const auto& x : p.points().points()) {
        RVector y(d);
        for (std::size_t i = 0; i < x.size(); ++i)
            y[i] = x[i];
        pts.push_back(std::move(y));
    }
    for (std::size_t i = 0; i < r; ++i)
        pts.push_back(RVector::unit(d, p.dim() + i));
    if (provenance.empty())
        provenance = detail::call("pyramid", {p.provenance(), std::to_string(r)});
    Polytope out(PointSet(d, std::move(pts)), std::move(provenance));
    // each apex step adds one vertex and as many edges as there were vertices
    const std::size_t v = p.num_vertices();
    detail::expect(out.num_vertices() == v + r, "pyramid vertex count");
    detail::expect(out.num_edges() == p.num_edges() + r * v + detail::binom2(static_cast<long>(r)),
                   "pyramid edge count");
    return out;
}

/** M_{k,j}: j-fold pyramid over the simplicial k-prism. */
inline Polytope triplex(std::size_t k, std::size_t j)
{
    detail::require(k >= 1, "triplex: k >= 1");
    auto name = detail::call("triplex", {std::to_string(k), std::to_string(j)});
    if (j == 0)
        return Polytope(prism(k).points(), name);
    return pyramid(prism(k), j, name);
}

/** Minkowski sum of an m-simplex and an n-simplex in complementary coordinates. */
inline Polytope delta(std::size_t m, std::size_t n)
{
    detail::require(m >= 1 && n >= 1, "delta: m, n >= 1");
    const std::size_t    d = m + n;
    std::vector<RVector> left{RVector(d)}, right{RVector(d)};
    for (std::size_t i = 0; i < m; ++i)
        left.push_back(RVector::unit(d, i));
    for (std::size_t i = 0; i < n; ++i)
        right.push_back(RVector::unit(d, m + i));
    std::vector<RVector> pts;
    for (const auto& a : left)
        for (const auto& b : right)
            pts.push_back(a + b);
    Polytope out(PointSet(d, std::move(pts)), detail::call("delta", {std::to_string(m), std::to_string(n)}));
    const long M = static_cast<long>(m), N = static_cast<long>(n);
    detail::expect(out.num_vertices() == static_cast<std::size_t>((M + 1) * (N + 1)), "delta vertex count");
    detail::expect(out.num_facets() == m + n + 2, "delta facet count");
    detail::expect(2 * static_cast<long>(out.num_edges()) == (M + N) * (M + 1) * (N + 1), "delta edge count");
    return out;
}

namespace detail {

/// Sum of the outward normals of the facets containing all of s.
inline RVector cut_direction(const Polytope& p, const VertexSet& s)
{
    RVector a(p.dim());
    for (std::size_t f = 0; f < p.num_facets(); ++f)
        if (s.subset_of(p.comb().facet(f)))
            a += p.facet_planes()[f].normal;
    return a;
}

/// Point where the plane a.x = c crosses the segment from u to w.
inline RVector cut_point(const RVector& a, const Rational& c, const RVector& u, const RVector& w)
{
    const Rational t = (dot(a, u) - c) / (dot(a, u) - dot(a, w));
    return u + t * (w - u);
}

} // namespace detail

/**
 * Cuts off vertex u with a hyperplane strictly separating it from every
 * other vertex. The cut normal is the sum of the outward normals of the
 * facets at u, for which u is the unique maximiser over the vertices.
 */
inline Polytope truncate_vertex(const Polytope& p, std::size_t u, std::string provenance = {})
{
    detail::require(u < p.num_vertices(), "truncate_vertex: vertex index out of range");
    const RVector& pu = p.vertex(u);
    const RVector  a = detail::cut_direction(p, VertexSet{u});
    const Rational top = dot(a, pu);
    std::optional<Rational> below;
    for (std::size_t x = 0; x < p.num_vertices(); ++x)
        if (x != u && (!below || dot(a, p.vertex(x)) > *below))
            below = dot(a, p.vertex(x));
    detail::expect(below && *below < top, "truncation cut separates the vertex");
    const Rational c = (top + *below) / 2;

    std::vector<RVector> pts;
    for (std::size_t x = 0; x < p.num_vertices(); ++x)
        if (x != u)
            pts.push_back(p.vertex(x));
    for (auto w : p.graph().neighbors(u))
        pts.push_back(detail::cut_point(a, c, pu, p.vertex(w)));
    if (provenance.empty())
        provenance = detail::call("truncate_vertex", {p.provenance(), std::to_string(u)});
    Polytope out(PointSet(p.dim(), std::move(pts)), std::move(provenance));

    if (p.graph().degree(u) == p.dim()) {
        const std::size_t d = p.dim();
        detail::expect(out.num_vertices() == p.num_vertices() + d - 1, "vertex truncation adds d-1 vertices");
        detail::expect(out.num_edges() == p.num_edges() + static_cast<std::size_t>(detail::binom2(static_cast<long>(d))),
                       "vertex truncation adds C(d,2) edges");
        detail::expect(out.excess() == p.excess(), "vertex truncation preserves excess");
    }
    return out;
}

/** Cuts off the edge {u,w} of two adjacent simple vertices. */
inline Polytope truncate_edge(const Polytope& p, std::size_t u, std::size_t w, std::string provenance = {})
{
    const std::size_t d = p.dim();
    detail::require(u < p.num_vertices() && w < p.num_vertices(), "truncate_edge: vertex index out of range");
    detail::require(p.graph().adjacent(u, w), "truncate_edge: vertices are not adjacent");
    detail::require(p.graph().degree(u) == d && p.graph().degree(w) == d, "truncate_edge: edge is not simple");
    const RVector  a = detail::cut_direction(p, VertexSet{u, w});
    const Rational top = dot(a, p.vertex(u));
    detail::expect(dot(a, p.vertex(w)) == top, "edge cut direction is constant on the edge");
    std::optional<Rational> below;
    for (std::size_t x = 0; x < p.num_vertices(); ++x)
        if (x != u && x != w && (!below || dot(a, p.vertex(x)) > *below))
            below = dot(a, p.vertex(x));
    detail::expect(below && *below < top, "truncation cut separates the edge");
    const Rational c = (top + *below) / 2;

    std::vector<RVector> pts;
    for (std::size_t x = 0; x < p.num_vertices(); ++x)
        if (x != u && x != w)
            pts.push_back(p.vertex(x));
    for (auto end : {u, w}) {
        const std::size_t other = end == u ? w : u;
        for (auto x : p.graph().neighbors(end))
            if (x != other)
                pts.push_back(detail::cut_point(a, c, p.vertex(end), p.vertex(x)));
    }
    if (provenance.empty())
        provenance = detail::call("truncate_edge", {p.provenance(), std::to_string(u), std::to_string(w)});
    Polytope out(PointSet(d, std::move(pts)), std::move(provenance));
    detail::expect(out.num_vertices() == p.num_vertices() + 2 * d - 4, "edge truncation adds 2d-4 vertices");
    detail::expect(out.excess() == p.excess(), "edge truncation preserves excess");
    return out;
}

// ---------------------------------------------------------------- named families

namespace detail {

inline std::size_t first_of(const std::vector<std::size_t>& v, const char* what)
{
    if (v.empty())
        throw std::logic_error(std::string("no ") + what + " vertex available");
    return v.front();
}

inline std::pair<std::size_t, std::size_t> first_simple_edge(const Polytope& p)
{
    for (auto [u, w] : p.graph().edges())
        if (p.graph().degree(u) == p.dim() && p.graph().degree(w) == p.dim())
            return {u, w};
    throw std::logic_error("no simple edge available");
}

inline void expect_counts(const Polytope& p, std::size_t v, std::optional<std::size_t> e, std::optional<long> xi)
{
    expect(p.num_vertices() == v, p.provenance() + " vertex count");
    if (e)
        expect(p.num_edges() == *e, p.provenance() + " edge count");
    if (xi)
        expect(p.excess() == *xi, p.provenance() + " excess");
}

inline std::string named(std::string_view family, std::size_t d)
{
    return call(family, {std::to_string(d)});
}

} // namespace detail

/// Truncation of a nonsimple vertex of M_{2,d-2}; 2d+2 vertices, excess 2d-6.
inline Polytope family_a(std::size_t d)
{
    detail::require(d >= 3, "A_d: d >= 3");
    const Polytope m = triplex(2, d - 2);
    Polytope out = truncate_vertex(m, detail::first_of(m.nonsimple_vertices(), "nonsimple"), detail::named("a", d));
    const long D = static_cast<long>(d);
    detail::expect_counts(out, 2 * d + 2, static_cast<std::size_t>(D * D + 2 * D - 3), 2 * D - 6);
    return out;
}

/// A_d realised as the prism over M_{2,d-3}.
inline Polytope family_a_prism(std::size_t d)
{
    detail::require(d >= 3, "A_d: d >= 3");
    Polytope out = prism_over(triplex(2, d - 3), detail::named("a_prism", d));
    const long D = static_cast<long>(d);
    detail::expect_counts(out, 2 * d + 2, static_cast<std::size_t>(D * D + 2 * D - 3), 2 * D - 6);
    return out;
}

/// Truncation of a simple vertex of M_{3,d-3}; at d = 3 this slices a vertex of the 3-prism (the 5-wedge).
inline Polytope family_b(std::size_t d)
{
    detail::require(d >= 3, "B_d: d >= 3");
    const Polytope m = triplex(3, d - 3);
    Polytope out = truncate_vertex(m, detail::first_of(m.simple_vertices(), "simple"), detail::named("b", d));
    const long D = static_cast<long>(d);
    detail::expect_counts(out, 2 * d + 2, static_cast<std::size_t>(D * D + 2 * D - 3), 2 * D - 6);
    return out;
}

/// Truncation of a simple edge of M_{2,d-2}; 3d-2 vertices, excess d-2.
inline Polytope family_c(std::size_t d)
{
    detail::require(d >= 3, "C_d: d >= 3");
    const Polytope m = triplex(2, d - 2);
    auto [u, w] = detail::first_simple_edge(m);
    Polytope out = truncate_edge(m, u, w, detail::named("c", d));
    detail::expect_counts(out, 3 * d - 2, std::nullopt, static_cast<long>(d) - 2);
    return out;
}

/// conv{0, e1, e1+ek, e2, e2+ek, e1+e2, e1+e2+2ek : 3 <= k <= d}.
inline Polytope family_sigma(std::size_t d)
{
    detail::require(d >= 3, "Sigma_d: d >= 3");
    const RVector        e1 = RVector::unit(d, 0), e2 = RVector::unit(d, 1);
    std::vector<RVector> pts{RVector(d), e1, e2, e1 + e2};
    for (std::size_t k = 2; k < d; ++k) {
        const RVector ek = RVector::unit(d, k);
        pts.push_back(e1 + ek);
        pts.push_back(e2 + ek);
        pts.push_back(e1 + e2 + Rational(2) * ek);
    }
    Polytope out(PointSet(d, std::move(pts)), detail::named("sigma", d));
    detail::expect_counts(out, 3 * d - 2, std::nullopt, static_cast<long>(d) - 2);
    return out;
}

/// Simplicial d-prism with one vertex sliced off; simple, 3d-1 vertices.
inline Polytope family_j(std::size_t d)
{
    detail::require(d >= 2, "J_d: d >= 2");
    Polytope out = truncate_vertex(prism(d), 0, detail::named("j", d));
    detail::expect_counts(out, 3 * d - 1, std::nullopt, 0);
    return out;
}

/// Truncation of a simple vertex of M_{d-1,1}; 3d-2 vertices, excess d-2.
inline Polytope family_n(std::size_t d)
{
    detail::require(d >= 3, "N_d: d >= 3");
    const Polytope m = triplex(d - 1, 1);
    Polytope out = truncate_vertex(m, detail::first_of(m.simple_vertices(), "simple"), detail::named("n", d));
    detail::expect_counts(out, 3 * d - 2, std::nullopt, static_cast<long>(d) - 2);
    return out;
}

/// Truncation of a simple vertex of M_{2,d-2}; 2d+1 vertices, d^2+d-1 edges.
inline Polytope family_pentasm(std::size_t d)
{
    detail::require(d >= 2, "pentasm: d >= 2");
    const Polytope m = triplex(2, d - 2);
    Polytope out = truncate_vertex(m, detail::first_of(m.simple_vertices(), "simple"), detail::named("pentasm", d));
    const long D = static_cast<long>(d);
    detail::expect_counts(out, 2 * d + 1, static_cast<std::size_t>(D * D + D - 1), D - 2);
    return out;
}

/**
 * The two nonpyramidal 4-polytopes with 8 vertices and 18 edges.
 * which = 1 needs 0 < epsilon < 1; which = 2 ignores epsilon.
 */
inline Polytope table1(int which, const Rational& epsilon = Rational(1, 2))
{
    auto pt = [](Rational a, Rational b, Rational c, Rational d) { return RVector{a, b, c, d}; };
    std::vector<RVector> pts;
    std::string          name;
    if (which == 1) {
        detail::require(epsilon > 0 && epsilon < 1, "table1(1): epsilon must lie in (0,1)");
        pts = {pt(epsilon, 0, 0, 0), pt(1, 0, 0, 0), pt(0, 1, 0, 0), pt(0, 0, 1, 0),
               pt(0, 0, 0, 1),       pt(1, 0, 0, 1), pt(0, 1, 0, 1), pt(0, 0, 1, 1)};
        name = detail::call("table1", {"1", to_string(epsilon)});
    } else if (which == 2) {
        pts = {pt(1, 1, 0, 0), pt(1, -1, 0, 0), pt(-1, 1, 0, 0), pt(-1, -1, 0, 0),
               pt(1, 0, 1, 0), pt(-1, 0, 1, 0), pt(0, 1, 0, 1),  pt(0, -1, 0, 1)};
        name = detail::call("table1", {"2"});
    } else {
        throw std::invalid_argument("table1: which must be 1 or 2");
    }
    Polytope out(PointSet(4, std::move(pts)), name);
    detail::expect_counts(out, 8, 18, std::nullopt);
    return out;
}

// ---------------------------------------------------------------- recipes

/**
 * A construction as a term: name(arg, ...), where args are integers,
 * rationals or (for prism_over, pyramid, truncate_*) a nested recipe first.
 */
struct Recipe
{
    std::string                   name;
    std::shared_ptr<const Recipe> base;
    std::vector<Rational>         args;

    std::string to_string() const
    {
        std::string s = name + "(";
        bool first = true;
        if (base) {
            s += base->to_string();
            first = false;
        }
        for (const auto& a : args) {
            s += first ? "" : ",";
            s += polycomb::to_string(a);
            first = false;
        }
        return s + ")";
    }

    static Recipe parse(std::string_view text)
    {
        std::size_t pos = 0;
        Recipe      r = parse_term(text, pos);
        skip_ws(text, pos);
        if (pos != text.size())
            throw std::invalid_argument("recipe: trailing characters in '" + std::string(text) + "'");
        return r;
    }

    private:
        static void skip_ws(std::string_view t, std::size_t& pos)
        {
            while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos])))
                ++pos;
        }

        static Recipe parse_term(std::string_view t, std::size_t& pos)
        {
            skip_ws(t, pos);
            const std::size_t start = pos;
            while (pos < t.size() && (std::isalnum(static_cast<unsigned char>(t[pos])) || t[pos] == '_'))
                ++pos;
            Recipe r;
            r.name = std::string(t.substr(start, pos - start));
            for (auto& ch : r.name)
                ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
            skip_ws(t, pos);
            if (r.name.empty() || pos >= t.size() || t[pos] != '(')
                throw std::invalid_argument("recipe: expected name( at offset " + std::to_string(start));
            ++pos;
            bool first = true;
            while (true) {
                skip_ws(t, pos);
                if (pos < t.size() && t[pos] == ')') {
                    ++pos;
                    break;
                }
                if (!first) {
                    if (pos >= t.size() || t[pos] != ',')
                        throw std::invalid_argument("recipe: expected ',' at offset " + std::to_string(pos));
                    ++pos;
                    skip_ws(t, pos);
                }
                if (pos < t.size() && std::isalpha(static_cast<unsigned char>(t[pos]))) {
                    if (!first || r.base)
                        throw std::invalid_argument("recipe: nested recipe must be the first argument");
                    r.base = std::make_shared<Recipe>(parse_term(t, pos));
                } else {
                    const std::size_t s = pos;
                    while (pos < t.size() && t[pos] != ',' && t[pos] != ')' && !std::isspace(static_cast<unsigned char>(t[pos])))
                        ++pos;
                    r.args.push_back(parse_rational(t.substr(s, pos - s)));
                }
                first = false;
            }
            return r;
        }
};

namespace detail {

inline std::size_t as_index(const Rational& r, const std::string& what)
{
    if (boost::multiprecision::denominator(r) != 1 || r < 0 || r > 1000)
        throw std::invalid_argument(what + ": expected a small nonnegative integer, got " + polycomb::to_string(r));
    return static_cast<std::size_t>(boost::multiprecision::numerator(r).convert_to<long>());
}

} // namespace detail

/** Builds the polytope a recipe names. */
inline Polytope build(const Recipe& r)
{
    auto arity = [&](std::size_t n, bool needs_base) {
        if (r.args.size() != n || static_cast<bool>(r.base) != needs_base)
            throw std::invalid_argument("recipe " + r.name + ": expected " + (needs_base ? "a base recipe and " : "")
                                        + std::to_string(n) + " numeric argument(s)");
    };
    auto idx = [&](std::size_t i) { return detail::as_index(r.args.at(i), r.name); };
    const std::string& n = r.name;
    if (n == "simplex") { arity(1, false); return simplex(idx(0)); }
    if (n == "prism") { arity(1, false); return prism(idx(0)); }
    if (n == "cube") { arity(1, false); return cube(idx(0)); }
    if (n == "cross") { arity(1, false); return cross(idx(0)); }
    if (n == "triplex") { arity(2, false); return triplex(idx(0), idx(1)); }
    if (n == "delta") { arity(2, false); return delta(idx(0), idx(1)); }
    if (n == "a") { arity(1, false); return family_a(idx(0)); }
    if (n == "a_prism") { arity(1, false); return family_a_prism(idx(0)); }
    if (n == "b") { arity(1, false); return family_b(idx(0)); }
    if (n == "c") { arity(1, false); return family_c(idx(0)); }
    if (n == "sigma") { arity(1, false); return family_sigma(idx(0)); }
    if (n == "j") { arity(1, false); return family_j(idx(0)); }
    if (n == "n") { arity(1, false); return family_n(idx(0)); }
    if (n == "pentasm") { arity(1, false); return family_pentasm(idx(0)); }
    if (n == "table1") {
        if (r.base || r.args.empty() || r.args.size() > 2)
            throw std::invalid_argument("recipe table1: expected table1(1[,eps]) or table1(2)");
        const std::size_t which = idx(0);
        if (which == 1)
            return table1(1, r.args.size() == 2 ? r.args[1] : Rational(1, 2));
        if (r.args.size() != 1)
            throw std::invalid_argument("recipe table1(2) takes no epsilon");
        return table1(static_cast<int>(which));
    }
    if (n == "prism_over") { arity(0, true); return prism_over(build(*r.base)); }
    if (n == "pyramid") { arity(1, true); return pyramid(build(*r.base), idx(0)); }
    if (n == "truncate_vertex") { arity(1, true); return truncate_vertex(build(*r.base), idx(0)); }
    if (n == "truncate_edge") { arity(2, true); return truncate_edge(build(*r.base), idx(0), idx(1)); }
    throw std::invalid_argument("unknown recipe family '" + n + "'");
}

inline Polytope build(std::string_view recipe)
{
    return build(Recipe::parse(recipe));
}

} // namespace polycomb
