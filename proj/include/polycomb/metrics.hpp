/**
 * Scalar invariants and edge-count bounds: excess degree, Grünbaum's phi,
 * the Lower Bound Theorem, minimum edge counts for 2d+2 vertices, the f_d(v)
 * upper bounds obtained by truncation, and a suite of graph-theoretic
 * necessary conditions evaluated on a concrete polytope.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "lattice.hpp"
#include "rational.hpp"

namespace polycomb {

inline long binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

struct ExcessProfile
{
    std::vector<long>        per_vertex; ///< deg u - d
    long                     total = 0;
    std::vector<std::size_t> nonsimple;
};

inline ExcessProfile excess_profile(const Structure& s)
{
    ExcessProfile p;
    const long    d = static_cast<long>(s.dim());
    for (std::size_t u = 0; u < s.num_vertices(); ++u) {
        const long x = static_cast<long>(s.graph().degree(u)) - d;
        if (x < 0)
            throw NotPolytopal("vertex " + std::to_string(u) + " has degree below the dimension");
        p.per_vertex.push_back(x);
        p.total += x;
        if (x > 0)
            p.nonsimple.push_back(u);
    }
    const long identity = 2 * static_cast<long>(s.num_edges()) - d * static_cast<long>(s.num_vertices());
    if (identity != p.total)
        throw std::logic_error("excess profile disagrees with 2e - dv");
    return p;
}

/** phi(v,d) = C(d+1,2) + C(d,2) - C(2d+1-v,2), defined for d+1 <= v <= 2d+1. */
inline long phi(long v, long d)
{
    if (d < 1 || v < d + 1 || v > 2 * d + 1)
        throw std::domain_error("phi(v,d) requires d+1 <= v <= 2d+1");
    const long binomial_form = binomial(d + 1, 2) + binomial(d, 2) - binomial(2 * d + 1 - v, 2);
    const long k = v - d;
    const Rational half_form = Rational(d * (d + k), 2) + Rational((k - 1) * (d - k), 2);
    if (boost::multiprecision::denominator(half_form) != 1 || half_form != binomial_form)
        throw std::logic_error("phi: the two closed forms disagree");
    return binomial_form;
}

/** Lower Bound Theorem: a simplicial d-polytope with v vertices has at least dv - C(d+1,2) edges. */
inline long lbt_bound(long v, long d)
{
    return d * v - binomial(d + 1, 2);
}

inline bool is_simplicial(const CombPolytope& cp)
{
    return std::all_of(cp.facets().begin(), cp.facets().end(), [&](const VertexSet& f) { return f.size() == cp.dim(); });
}

struct MinEdges
{
    long value;
    bool special; ///< d = 5, where Delta_{2,3} undercuts d^2+2d-3
};

/** Minimum edge count of d-polytopes with 2d+2 vertices, d >= 3. */
inline MinEdges min_edges_2dplus2(long d)
{
    if (d < 3)
        throw std::domain_error("min_edges_2dplus2 requires d >= 3");
    if (d == 5)
        return {30, true};
    return {d * d + 2 * d - 3, false};
}

/**
 * Upper bound on the minimum excess f_d(v) from truncating triplexes:
 * (v-2d)(3d-1-v) on [2d, 3d-1] and (v-3d+1)(4d-2-v) on [3d-1, 4d-2].
 */
inline long f_upper(long v, long d)
{
    if (v >= 2 * d && v <= 3 * d - 1)
        return (v - 2 * d) * (3 * d - 1 - v);
    if (v >= 3 * d - 1 && v <= 4 * d - 2)
        return (v - 3 * d + 1) * (4 * d - 2 - v);
    throw std::domain_error("f_upper requires 2d <= v <= 4d-2");
}

inline long missing_edges(const Structure& s)
{
    return binomial(static_cast<long>(s.num_vertices()), 2) - static_cast<long>(s.num_edges());
}

// ---------------------------------------------------------------- lemma suite

struct LemmaCheck
{
    std::string lemma;    ///< short name of the property
    std::string instance; ///< which facet / vertex / subset
    bool        pass;
};

struct LemmaReport
{
    std::vector<LemmaCheck> checks;

    std::size_t failures() const
    {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const LemmaCheck& c) { return !c.pass; }));
    }
    std::size_t count(const std::string& lemma) const
    {
        return static_cast<std::size_t>(
            std::count_if(checks.begin(), checks.end(), [&](const LemmaCheck& c) { return c.lemma == lemma; }));
    }
};

namespace detail {

inline std::string set_label(const VertexSet& s)
{
    std::string out = "{";
    bool first = true;
    for (auto i : s) {
        out += (first ? "" : " ") + std::to_string(i);
        first = false;
    }
    return out + "}";
}

} // namespace detail

/**
 * Evaluates, on one polytope:
 *  - excess-identity: sum of (deg - d) equals 2e - dv
 *  - excess-theorem: a nonsimple polytope has excess >= d-2
 *  - outside-connected: vertices outside each facet induce a connected subgraph
 *  - outside-edges: any n <= d vertices meet at least nd - C(n,2) edges
 *    (every subset when v <= 14, otherwise all subsets of size <= 3 plus a
 *    seeded random sample of larger ones)
 *  - nonsimple-neighbour: a nonsimple u in facet F adjacent to a simple x
 *    outside F has a second neighbour outside F
 *  - three-outside-ridges: when exactly three simple vertices lie outside F,
 *    at least d-4 ridges of F have their other facet containing all three
 *  - lower-bound-theorem: simplicial polytopes of dimension >= 3 have
 *    e >= dv - C(d+1,2) (polygons are simplicial but fall below it)
 */
inline LemmaReport check_lemma_suite(const Structure& s, unsigned seed = 20190101u, std::size_t samples = 4000)
{
    LemmaReport    rep;
    const auto&    g = s.graph();
    const auto&    cp = s.comb();
    const long     d = static_cast<long>(s.dim());
    const long     v = static_cast<long>(s.num_vertices());
    const long     e = static_cast<long>(s.num_edges());
    const VertexSet all = cp.all_vertices();

    long total = 0;
    for (std::size_t u = 0; u < s.num_vertices(); ++u)
        total += static_cast<long>(g.degree(u)) - d;
    rep.checks.push_back({"excess-identity", "whole polytope", total == 2 * e - d * v});

    bool nonsimple = false;
    for (std::size_t u = 0; u < s.num_vertices(); ++u)
        nonsimple = nonsimple || static_cast<long>(g.degree(u)) > d;
    if (nonsimple)
        rep.checks.push_back({"excess-theorem", "whole polytope", total >= d - 2});

    for (std::size_t f = 0; f < cp.num_facets(); ++f)
        rep.checks.push_back({"outside-connected", "facet " + std::to_string(f), g.induced_connected(all - cp.facet(f))});

    auto check_subset = [&](const VertexSet& sub) {
        const long n = static_cast<long>(sub.size());
        rep.checks.push_back({"outside-edges", detail::set_label(sub),
                              static_cast<long>(g.edges_meeting(sub)) >= n * d - binomial(n, 2)});
    };
    const std::size_t nmax = static_cast<std::size_t>(std::min(d, v));
    std::vector<std::size_t> pick;
    auto enumerate = [&](auto&& self, std::size_t start, std::size_t limit) -> void {
        if (!pick.empty())
            check_subset(VertexSet::from(pick));
        if (pick.size() == limit)
            return;
        for (std::size_t i = start; i < s.num_vertices(); ++i) {
            pick.push_back(i);
            self(self, i + 1, limit);
            pick.pop_back();
        }
    };
    if (v <= 14) {
        enumerate(enumerate, 0, nmax);
    } else {
        enumerate(enumerate, 0, std::min<std::size_t>(3, nmax));
        std::mt19937                          rng(seed);
        std::uniform_int_distribution<std::size_t> size_dist(4, std::max<std::size_t>(4, nmax));
        std::vector<std::size_t>              idx(s.num_vertices());
        for (std::size_t i = 0; i < idx.size(); ++i)
            idx[i] = i;
        for (std::size_t k = 0; k < samples && nmax >= 4; ++k) {
            std::shuffle(idx.begin(), idx.end(), rng);
            const std::size_t n = size_dist(rng);
            check_subset(VertexSet::from(std::vector<std::size_t>(idx.begin(), idx.begin() + static_cast<long>(n))));
        }
    }

    for (std::size_t f = 0; f < cp.num_facets(); ++f) {
        const VertexSet& F = cp.facet(f);
        const VertexSet  out = all - F;
        for (auto u : F) {
            if (static_cast<long>(g.degree(u)) <= d)
                continue;
            const VertexSet outside_nbrs = g.neighbors(u) & out;
            for (auto x : outside_nbrs) {
                if (static_cast<long>(g.degree(x)) != d)
                    continue;
                rep.checks.push_back({"nonsimple-neighbour",
                                      "facet " + std::to_string(f) + " vertex " + std::to_string(u) + " via " + std::to_string(x),
                                      outside_nbrs.size() >= 2});
            }
        }
    }

    if (d >= 2) {
        const auto ridges = ridges_and_other_facet(cp, s.lattice());
        for (std::size_t f = 0; f < cp.num_facets(); ++f) {
            const VertexSet out = all - cp.facet(f);
            if (out.size() != 3)
                continue;
            bool simple = true;
            for (auto u : out)
                simple = simple && static_cast<long>(g.degree(u)) == d;
            if (!simple)
                continue;
            long good = 0;
            for (const auto& r : ridges) {
                if (r.facet_a != f && r.facet_b != f)
                    continue;
                const std::size_t other = r.facet_a == f ? r.facet_b : r.facet_a;
                if (out.subset_of(cp.facet(other)))
                    ++good;
            }
            rep.checks.push_back({"three-outside-ridges", "facet " + std::to_string(f), good >= d - 4});
        }
    }

    if (d >= 3 && is_simplicial(cp))
        rep.checks.push_back({"lower-bound-theorem", "whole polytope", e >= lbt_bound(v, d)});
    return rep;
}

} // namespace polycomb
