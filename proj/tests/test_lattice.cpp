#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "polycomb/factory.hpp"
#include "polycomb/lattice.hpp"

using namespace polycomb;

namespace {

CombPolytope simplex_comb(std::size_t d)
{
    std::vector<VertexSet> facets;
    for (std::size_t i = 0; i <= d; ++i)
        facets.push_back(VertexSet::range(d + 1) - VertexSet{i});
    return CombPolytope(d, d + 1, facets);
}

CombPolytope cube_comb()
{
    std::vector<VertexSet> facets;
    for (std::size_t axis = 0; axis < 3; ++axis)
        for (std::size_t bit = 0; bit < 2; ++bit) {
            VertexSet f;
            for (std::size_t m = 0; m < 8; ++m)
                if (((m >> axis) & 1) == bit)
                    f.insert(m);
            facets.push_back(f);
        }
    return CombPolytope(3, 8, facets);
}

CombPolytope relabel(const CombPolytope& cp, const std::vector<std::size_t>& perm)
{
    std::vector<VertexSet> f;
    for (const auto& F : cp.facets())
        f.push_back(F.mapped(perm));
    std::reverse(f.begin(), f.end());
    return CombPolytope(cp.dim(), cp.num_vertices(), f);
}

// Edge oracle straight from the definition: {u,w} spans an edge iff the
// intersection of all facets containing both is exactly {u,w}.
std::size_t edge_count_oracle(const CombPolytope& cp)
{
    std::size_t n = 0;
    for (std::size_t u = 0; u < cp.num_vertices(); ++u)
        for (std::size_t w = u + 1; w < cp.num_vertices(); ++w) {
            VertexSet meet = cp.all_vertices();
            bool      any = false;
            for (const auto& F : cp.facets())
                if (F.contains(u) && F.contains(w)) {
                    meet &= F;
                    any = true;
                }
            n += any && meet == VertexSet{u, w};
        }
    return n;
}

} // namespace

TEST(CombPolytope, ValidatesInvariants)
{
    EXPECT_THROW(CombPolytope(0, 1, {VertexSet{0}}), std::invalid_argument);
    EXPECT_THROW(CombPolytope(2, 3, {VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{0, 5}}), std::invalid_argument);
    EXPECT_THROW(CombPolytope(2, 3, {VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{0}}), std::invalid_argument);
    EXPECT_THROW(CombPolytope(2, 3, {VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{0, 1, 2}}), std::invalid_argument);
    EXPECT_THROW(CombPolytope(2, 4, {VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{0, 2}}), std::invalid_argument);
}

TEST(BuildLattice, FVectors)
{
    EXPECT_EQ(build_lattice(simplex_comb(3)).f_vector(), (std::vector<std::size_t>{4, 6, 4}));
    EXPECT_EQ(build_lattice(cube_comb()).f_vector(), (std::vector<std::size_t>{8, 12, 6}));
    const auto fv = build_lattice(delta(2, 3).comb()).f_vector();
    ASSERT_EQ(fv.size(), 5u);
    EXPECT_EQ(fv[0], 12u);
    EXPECT_EQ(fv[1], 30u);
    EXPECT_EQ(fv[4], 7u);
}

TEST(BuildLattice, GradedWithSingletonAtoms)
{
    const FaceLattice lat = build_lattice(family_b(5).comb());
    for (std::size_t i = 0; i < lat.size(); ++i)
        for (auto c : lat.children(i))
            EXPECT_EQ(lat.face(c).dim + 1, lat.face(i).dim);
    for (auto i : lat.faces_of_dim(0))
        EXPECT_EQ(lat.face(i).vertices.size(), 1u);
    EXPECT_EQ(lat.faces_of_dim(0).size(), 12u);
}

TEST(BuildLattice, EulerPoincareRelation)
{
    for (const Polytope& p : {family_a(5), family_j(4), delta(2, 2), family_sigma(6)}) {
        const auto fv = build_lattice(p.comb()).f_vector();
        long       alt = 0;
        for (std::size_t i = 0; i < fv.size(); ++i)
            alt += (i % 2 ? -1 : 1) * static_cast<long>(fv[i]);
        EXPECT_EQ(alt, p.dim() % 2 ? 2 : 0) << p.provenance();
    }
}

TEST(BuildLattice, RejectsNonPolytopalIncidences)
{
    // vertices 1 and 3 lie in exactly the same facets, so no face separates them
    EXPECT_THROW(build_lattice(CombPolytope(3, 5, {{1, 2, 3, 4}, {0, 1, 2, 3}, {0, 2, 4}, {0, 1, 3, 4}})), NotPolytopal);
    // a vertex lying in every facet
    EXPECT_THROW(build_lattice(CombPolytope(3, 5, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 1, 4}, {0, 1, 3}, {0, 2, 4}})),
                 NotPolytopal);
}

TEST(GraphOf, EdgeCounts)
{
    EXPECT_EQ(graph_of(prism(3).comb()).num_edges(), 9u);
    EXPECT_EQ(graph_of(family_a(4).comb()).num_edges(), 21u);
    EXPECT_EQ(graph_of(pyramid(delta(2, 4), 1).comb()).num_edges(), 60u);
    for (const Polytope& p : {family_c(5), family_n(4), table1(1), table1(2)})
        EXPECT_EQ(graph_of(p.comb()).num_edges(), edge_count_oracle(p.comb())) << p.provenance();
}

TEST(GraphOf, NecessaryConditions)
{
    for (const Polytope& p : {family_a(6), family_b(6), family_sigma(5)}) {
        const Graph g = graph_of(p.comb());
        EXPECT_TRUE(g.induced_connected(p.comb().all_vertices()));
        for (std::size_t u = 0; u < p.num_vertices(); ++u) {
            EXPECT_GE(g.degree(u), p.dim());
            EXPECT_FALSE(g.adjacent(u, u));
            for (auto w : g.neighbors(u))
                EXPECT_TRUE(g.adjacent(w, u));
        }
    }
}

TEST(Ridges, Examples)
{
    EXPECT_EQ(ridges_and_other_facet(simplex_comb(3)).size(), 6u);
    EXPECT_EQ(ridges_and_other_facet(cube_comb()).size(), 12u);
    const CombPolytope b5 = family_b(5).comb();
    const FaceLattice  lat = build_lattice(b5);
    const auto         ridges = ridges_and_other_facet(b5, lat);
    EXPECT_EQ(ridges.size(), lat.f_vector()[3]);
    for (const auto& r : ridges) {
        EXPECT_NE(r.facet_a, r.facet_b);
        EXPECT_EQ(b5.facet(r.facet_a) & b5.facet(r.facet_b), r.vertices);
    }
}

TEST(Isomorphism, Examples)
{
    EXPECT_TRUE(isomorphic(family_b(3).comb(), family_j(3).comb()));
    EXPECT_TRUE(isomorphic(family_n(4).comb(), family_b(4).comb()));
    EXPECT_FALSE(isomorphic(family_a(3).comb(), family_b(3).comb()));
    EXPECT_FALSE(isomorphic(cube_comb(), simplex_comb(3)));
}

TEST(Isomorphism, WitnessMapsFacetsOntoFacets)
{
    const CombPolytope a = family_a(5).comb();
    std::vector<std::size_t> perm(a.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937 rng(1);
    std::shuffle(perm.begin(), perm.end(), rng);
    const CombPolytope b = relabel(a, perm);
    const auto         w = find_isomorphism(a, b);
    ASSERT_TRUE(w.has_value());
    std::set<VertexSet> image, target(b.facets().begin(), b.facets().end());
    for (const auto& F : a.facets())
        image.insert(F.mapped(*w));
    EXPECT_EQ(image, target);
}

TEST(Property, IsomorphismIsReflexiveAndSymmetric)
{
    std::vector<CombPolytope> polys;
    for (const Polytope& p : {family_a(5), family_b(5), family_n(5), family_c(5), family_sigma(5), family_pentasm(5)})
        polys.push_back(p.comb());
    for (std::size_t i = 0; i < polys.size(); ++i) {
        EXPECT_TRUE(isomorphic(polys[i], polys[i]));
        for (std::size_t j = 0; j < polys.size(); ++j)
            EXPECT_EQ(isomorphic(polys[i], polys[j]), isomorphic(polys[j], polys[i]));
    }
}

TEST(Property, ClosureIsIdempotent)
{
    const CombPolytope cp = family_j(5).comb();
    std::mt19937       rng(9);
    std::uniform_int_distribution<std::size_t> pick(0, cp.num_vertices() - 1);
    for (int t = 0; t < 200; ++t) {
        VertexSet s;
        for (int k = 0; k < 3; ++k)
            s.insert(pick(rng));
        const VertexSet c = cp.closure(s);
        EXPECT_TRUE(s.subset_of(c));
        EXPECT_EQ(cp.closure(c), c);
    }
}

TEST(Property, RestrictedFaceLatticeMatches)
{
    const CombPolytope cp = family_b(5).comb();
    const FaceLattice  lat = build_lattice(cp);
    for (std::size_t f = 0; f < cp.num_facets(); ++f) {
        const FacetView   view = facet_polytope(cp, lat, f);
        const FaceLattice sub = build_lattice(view.polytope);
        std::size_t       below = 0;
        for (std::size_t i = 0; i < lat.size(); ++i)
            below += lat.face(i).vertices.subset_of(cp.facet(f));
        // every face of the facet, including the empty face and the facet itself
        EXPECT_EQ(sub.size(), below);
    }
}

TEST(FacetPolytope, RejectsLowDimension)
{
    const CombPolytope seg(1, 2, {VertexSet{0}, VertexSet{1}});
    EXPECT_THROW(facet_polytope(seg, build_lattice(seg), 0), std::invalid_argument);
}
