#include <gtest/gtest.h>

#include "polycomb/census.hpp"
#include "polycomb/factory.hpp"

using namespace polycomb;

namespace {

// Catalog-free oracle: count facets of p combinatorially equivalent to ref.
int count_facets_like(const Polytope& p, const Polytope& ref)
{
    const Structure& s = p.structure();
    int              n = 0;
    for (std::size_t f = 0; f < s.num_facets(); ++f) {
        const FacetView v = facet_polytope(s.comb(), s.lattice(), f);
        n += isomorphic(v.polytope, ref.comb());
    }
    return n;
}

std::map<std::string, int> census_of(const Polytope& p)
{
    ReferenceCatalog cat;
    return facet_census(p.structure(), cat);
}

} // namespace

TEST(FacetCensus, A6)
{
    const Polytope a6 = family_a(6);
    const std::map<std::string, int> expected{{"A(5)", 3}, {"prism(5)", 4}, {"M(2,3)", 2}};
    EXPECT_EQ(census_of(a6), expected);
    EXPECT_EQ(count_facets_like(a6, family_a(5)), 3);
    EXPECT_EQ(count_facets_like(a6, prism(5)), 4);
    EXPECT_EQ(count_facets_like(a6, triplex(2, 3)), 2);
}

TEST(FacetCensus, B6)
{
    const Polytope b6 = family_b(6);
    const auto     c = census_of(b6);
    int            total = 0;
    for (const auto& [k, n] : c)
        total += n;
    EXPECT_EQ(total, static_cast<int>(b6.num_facets()));
    EXPECT_EQ(c.count("unknown"), 0u);
    EXPECT_EQ(count_facets_like(b6, family_b(5)), c.count("B(5)") ? c.at("B(5)") : 0);
}

TEST(FacetCensus, DeltaFacetsAreSmallerDeltas)
{
    // Delta(m,n) has m+1 facets Delta(m-1,n) and n+1 facets Delta(m,n-1).
    for (std::size_t m = 2; m <= 4; ++m)
        for (std::size_t n = 2; n <= 3; ++n) {
            const Polytope p = delta(m, n);
            const Polytope left = delta(m - 1, n), right = delta(m, n - 1);
            const int      a = count_facets_like(p, left), b = count_facets_like(p, right);
            if (m == n) {
                EXPECT_EQ(a, static_cast<int>(m + n + 2)) << m << "," << n;
            } else {
                EXPECT_EQ(a, static_cast<int>(m + 1)) << m << "," << n;
                EXPECT_EQ(b, static_cast<int>(n + 1)) << m << "," << n;
            }
        }
}

TEST(ClassifyFacet, SimplexFacetsAreSimplices)
{
    ReferenceCatalog cat;
    const Polytope   s = simplex(4);
    for (std::size_t f = 0; f < s.num_facets(); ++f) {
        const auto t = classify_facet(s.structure(), f, cat);
        ASSERT_TRUE(t.has_value());
        EXPECT_EQ(t->to_string(), "simplex(3)");
    }
}

TEST(CanonicalTag, PrecedenceOrder)
{
    ReferenceCatalog cat;
    // B(3) and J(3) coincide; the earlier family wins.
    EXPECT_EQ(tag_name(canonical_tag(family_j(3).structure(), cat)), "B(3)");
    EXPECT_EQ(tag_name(canonical_tag(family_n(4).structure(), cat)), "B(4)");
    EXPECT_EQ(tag_name(canonical_tag(triplex(3, 0).structure(), cat)), "prism(3)");
    EXPECT_EQ(tag_name(canonical_tag(delta(3, 1).structure(), cat)), "prism(4)");
    EXPECT_EQ(tag_name(canonical_tag(table1(1).structure(), cat)), "unknown");
}

TEST(CensusString, Format)
{
    EXPECT_EQ(census_string({{"A(3)", 1}, {"M(2,1)", 2}}), "{1xA(3), 2xM(2,1)}");
    EXPECT_EQ(census_string({}), "{}");
}

TEST(Property, CensusCountsEveryFacet)
{
    for (const Polytope& p : {family_c(5), family_sigma(5), family_n(5), family_pentasm(5), family_j(5)}) {
        int total = 0;
        for (const auto& [k, n] : census_of(p))
            total += n;
        EXPECT_EQ(total, static_cast<int>(p.num_facets())) << p.provenance();
    }
}
