#include <gtest/gtest.h>

#include "polycomb/factory.hpp"
#include "polycomb/metrics.hpp"

using namespace polycomb;

namespace {

// Pascal's triangle, independent of binomial().
long pascal(long n, long k)
{
    if (k < 0 || k > n)
        return 0;
    std::vector<long> row{1};
    for (long i = 1; i <= n; ++i) {
        std::vector<long> next(static_cast<std::size_t>(i + 1), 1);
        for (long j = 1; j < i; ++j)
            next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)];
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

} // namespace

TEST(Binomial, MatchesPascal)
{
    for (long n = 0; n <= 25; ++n)
        for (long k = -1; k <= n + 1; ++k)
            EXPECT_EQ(binomial(n, k), pascal(n, k)) << n << "," << k;
}

TEST(Phi, Examples)
{
    for (long d = 1; d <= 12; ++d) {
        EXPECT_EQ(phi(2 * d, d), d * d);
        EXPECT_EQ(phi(d + 1, d), pascal(d + 1, 2));
    }
    EXPECT_EQ(phi(9, 5), 24);
    EXPECT_EQ(phi(10, 5), 25);
}

TEST(Phi, BothClosedFormsAgree)
{
    // d(d+k)/2 + (k-1)(d-k)/2 with v = d+k, checked against the binomial form
    for (long d = 1; d <= 12; ++d)
        for (long k = 1; k <= d + 1; ++k) {
            const long twice = d * (d + k) + (k - 1) * (d - k);
            ASSERT_EQ(twice % 2, 0);
            EXPECT_EQ(phi(d + k, d), twice / 2);
            EXPECT_EQ(phi(d + k, d), pascal(d + 1, 2) + pascal(d, 2) - pascal(d + 1 - k, 2));
        }
}

TEST(Phi, DomainErrors)
{
    EXPECT_THROW(phi(5, 5), std::domain_error);
    EXPECT_THROW(phi(12, 5), std::domain_error);
    EXPECT_THROW(phi(1, 0), std::domain_error);
}

TEST(Phi, TriplexAttainsIt)
{
    for (long d = 2; d <= 8; ++d)
        for (long k = 1; k <= d; ++k) {
            const Polytope m = triplex(static_cast<std::size_t>(k), static_cast<std::size_t>(d - k));
            EXPECT_EQ(static_cast<long>(m.num_vertices()), d + k);
            EXPECT_EQ(static_cast<long>(m.num_edges()), phi(d + k, d));
            EXPECT_EQ(m.excess(), (k - 1) * (d - k));
        }
}

TEST(LowerBound, Examples)
{
    EXPECT_EQ(lbt_bound(6, 3), 12);
    EXPECT_EQ(static_cast<long>(cross(3).num_edges()), lbt_bound(6, 3));
    EXPECT_EQ(static_cast<long>(simplex(5).num_edges()), lbt_bound(6, 5));
    EXPECT_TRUE(is_simplicial(cross(4).comb()));
    EXPECT_FALSE(is_simplicial(cube(3).comb()));
    for (long d = 3; d <= 9; ++d)
        EXPECT_GT(lbt_bound(2 * d + 2, d), d * d + 2 * d - 3) << d;
}

TEST(MinEdges, Values)
{
    EXPECT_EQ(min_edges_2dplus2(6).value, 45);
    EXPECT_FALSE(min_edges_2dplus2(6).special);
    EXPECT_EQ(min_edges_2dplus2(5).value, 30);
    EXPECT_TRUE(min_edges_2dplus2(5).special);
    EXPECT_EQ(min_edges_2dplus2(3).value, 12);
    EXPECT_EQ(min_edges_2dplus2(4).value, 21);
    EXPECT_THROW(min_edges_2dplus2(2), std::domain_error);
    EXPECT_EQ(static_cast<long>(delta(2, 3).num_edges()), 30);
    EXPECT_LT(30, 5 * 5 + 2 * 5 - 3);
}

TEST(FUpper, PiecewiseShape)
{
    for (long d = 3; d <= 9; ++d) {
        EXPECT_EQ(f_upper(2 * d, d), 0);
        EXPECT_EQ(f_upper(3 * d - 1, d), 0);
        EXPECT_EQ(f_upper(4 * d - 2, d), 0);
        EXPECT_EQ(f_upper(2 * d + 1, d), d - 2);
        EXPECT_THROW(f_upper(2 * d - 1, d), std::domain_error);
        EXPECT_THROW(f_upper(4 * d - 1, d), std::domain_error);
        for (long v = 2 * d; v <= 4 * d - 2; ++v)
            EXPECT_GE(f_upper(v, d), 0);
    }
}

TEST(MissingEdges, Examples)
{
    EXPECT_EQ(missing_edges(simplex(4).structure()), 0);
    EXPECT_EQ(missing_edges(triplex(2, 2).structure()), 2);
    EXPECT_EQ(missing_edges(cube(3).structure()), 16);
}

TEST(ExcessProfile, Examples)
{
    EXPECT_EQ(excess_profile(delta(2, 3).structure()).total, 0);
    const ExcessProfile sq = excess_profile(triplex(2, 1).structure());
    EXPECT_EQ(sq.total, 1);
    ASSERT_EQ(sq.nonsimple.size(), 1u);
    EXPECT_EQ(sq.per_vertex[sq.nonsimple[0]], 1);
    EXPECT_EQ(excess_profile(family_a(6).structure()).total, 6);
    const ExcessProfile s5 = excess_profile(family_sigma(5).structure());
    ASSERT_EQ(s5.nonsimple.size(), 1u);
    EXPECT_EQ(s5.total, 3);
}

TEST(LemmaSuite, CubeAndB5)
{
    for (const Polytope& p : {cube(3), family_b(5)}) {
        const LemmaReport r = check_lemma_suite(p.structure());
        EXPECT_EQ(r.failures(), 0u) << p.provenance();
        EXPECT_EQ(r.count("excess-identity"), 1u);
        EXPECT_EQ(r.count("outside-connected"), p.num_facets());
        EXPECT_GT(r.count("outside-edges"), 0u);
    }
    EXPECT_EQ(check_lemma_suite(cube(3).structure()).count("excess-theorem"), 0u);
    EXPECT_EQ(check_lemma_suite(family_b(5).structure()).count("excess-theorem"), 1u);
}

TEST(LemmaSuite, SimplicialRunsLowerBound)
{
    const LemmaReport r = check_lemma_suite(cross(4).structure());
    EXPECT_EQ(r.count("lower-bound-theorem"), 1u);
    EXPECT_EQ(r.failures(), 0u);
    EXPECT_EQ(check_lemma_suite(simplex(2).structure()).count("lower-bound-theorem"), 0u);
}

TEST(LemmaSuite, LargePolytopeUsesSampling)
{
    const Polytope    p = family_j(6);
    const LemmaReport a = check_lemma_suite(p.structure(), 1, 50), b = check_lemma_suite(p.structure(), 1, 50);
    EXPECT_EQ(a.failures(), 0u);
    ASSERT_EQ(a.checks.size(), b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i)
        EXPECT_EQ(a.checks[i].instance, b.checks[i].instance);
}

TEST(Property, LemmaSuiteHoldsOnConstructions)
{
    for (std::size_t d = 3; d <= 5; ++d)
        for (const Polytope& p : {family_a(d), family_c(d), family_n(d), family_pentasm(d), triplex(2, d - 2), delta(d - 2, 2)})
            EXPECT_EQ(check_lemma_suite(p.structure(), 7, 300).failures(), 0u) << p.provenance();
}
