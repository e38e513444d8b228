#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "polycomb/rational.hpp"
#include "polycomb/vertex_set.hpp"

using namespace polycomb;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

// Independent rank oracle: fraction-free elimination over long long with
// small entries, run on integer matrices only.
std::size_t integer_rank(std::vector<std::vector<long long>> m)
{
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            const long long a = m[r][c], b = m[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] = m[i][j] * a - m[r][j] * b;
            long long g = 0;
            for (auto x : m[i])
                g = std::gcd(g, x < 0 ? -x : x);
            if (g > 1)
                for (auto& x : m[i])
                    x /= g;
        }
        ++r;
    }
    return r;
}

} // namespace

TEST(ParseRational, AcceptsIntegersAndFractions)
{
    EXPECT_EQ(parse_rational("3"), q(3));
    EXPECT_EQ(parse_rational("-7/14"), q(-1, 2));
    EXPECT_EQ(parse_rational("+2/3"), q(2, 3));
    EXPECT_EQ(parse_rational("0/5"), q(0));
}

TEST(ParseRational, RejectsMalformed)
{
    for (const char* bad : {"", "-", "1/", "/2", "1.5", "a", "1/0", "1/-2", " 1", "1//2"})
        EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(ParseRational, PrintsCanonicalForm)
{
    EXPECT_EQ(to_string(q(6, 4)), "3/2");
    EXPECT_EQ(to_string(q(-4, 2)), "-2");
    EXPECT_EQ(to_string(q(0)), "0");
    EXPECT_EQ(parse_rational(to_string(q(-22, 7))), q(-22, 7));
}

TEST(RVector, ArithmeticAndOrder)
{
    RVector a{q(1), q(1, 2)}, b{q(-1), q(3)};
    EXPECT_EQ(a + b, (RVector{q(0), q(7, 2)}));
    EXPECT_EQ(a - b, (RVector{q(2), q(-5, 2)}));
    EXPECT_EQ(q(2) * a, (RVector{q(2), q(1)}));
    EXPECT_EQ(-a, (RVector{q(-1), q(-1, 2)}));
    EXPECT_EQ(dot(a, b), q(1, 2));
    EXPECT_TRUE(b < a);
    EXPECT_EQ(a.lifted(q(5)).size(), 3u);
    EXPECT_TRUE(RVector(3).is_zero());
    EXPECT_EQ(RVector::unit(3, 1), (RVector{q(0), q(1), q(0)}));
}

TEST(RVector, LengthMismatchThrows)
{
    RVector a(2), b(3);
    EXPECT_THROW(a += b, std::invalid_argument);
    EXPECT_THROW(dot(a, b), std::invalid_argument);
}

TEST(Rank, EmptyIsZero) { EXPECT_EQ(rank({}), 0u); }

TEST(Rank, StandardBasis)
{
    for (std::size_t d = 1; d <= 6; ++d) {
        std::vector<RVector> rows;
        for (std::size_t i = 0; i < d; ++i)
            rows.push_back(RVector::unit(d, i));
        EXPECT_EQ(rank(rows), d);
    }
}

TEST(Rank, MixedLengthsThrow) { EXPECT_THROW(rank({RVector(2), RVector(3)}), std::invalid_argument); }

TEST(AffineDim, Examples)
{
    const std::vector<RVector> five{{q(0), q(0), q(0)}, {q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(1), q(1), q(0)}, {q(0), q(0), q(1)}};
    EXPECT_EQ(affine_dim(five), 3u);
    EXPECT_EQ(affine_dim({RVector{q(4), q(5)}}), 0u);
    const std::vector<RVector> square{{q(0), q(0), q(0)}, {q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(1), q(1), q(0)}};
    EXPECT_EQ(affine_dim(square), 2u);
    EXPECT_THROW(affine_dim({}), std::invalid_argument);

    // {0,e1,e2} + {0,e3,e4}
    std::vector<RVector> delta22;
    std::vector<RVector> left{RVector(4), RVector::unit(4, 0), RVector::unit(4, 1)};
    std::vector<RVector> right{RVector(4), RVector::unit(4, 2), RVector::unit(4, 3)};
    for (const auto& a : left)
        for (const auto& b : right)
            delta22.push_back(a + b);
    EXPECT_EQ(affine_dim(delta22), 4u);
}

TEST(SolveHyperplane, Examples)
{
    const Hyperplane h2 = solve_hyperplane({{q(0), q(0)}, {q(0), q(1)}});
    EXPECT_EQ(h2.normal, (RVector{q(1), q(0)}));
    EXPECT_EQ(h2.offset, q(0));

    const Hyperplane h3 = solve_hyperplane({RVector::unit(3, 0), RVector::unit(3, 1), RVector::unit(3, 2)});
    EXPECT_EQ(h3.normal, (RVector{q(1), q(1), q(1)}));
    EXPECT_EQ(h3.offset, q(1));
}

TEST(SolveHyperplane, SecondTableModelFacet)
{
    // (±1,±1,0,0), (±1,0,1,0), (0,±1,0,1); the first tabulated facet is vertices 1..6.
    const std::vector<RVector> pts{{q(1), q(1), q(0), q(0)},  {q(1), q(-1), q(0), q(0)}, {q(-1), q(1), q(0), q(0)},
                                   {q(-1), q(-1), q(0), q(0)}, {q(1), q(0), q(1), q(0)},  {q(-1), q(0), q(1), q(0)},
                                   {q(0), q(1), q(0), q(1)},  {q(0), q(-1), q(0), q(1)}};
    // Any 6 points on a common hyperplane with the other two strictly on one side.
    bool found = false;
    for (std::size_t skip_a = 0; skip_a < 8 && !found; ++skip_a)
        for (std::size_t skip_b = skip_a + 1; skip_b < 8 && !found; ++skip_b) {
            std::vector<RVector> six;
            for (std::size_t i = 0; i < 8; ++i)
                if (i != skip_a && i != skip_b)
                    six.push_back(pts[i]);
            if (affine_dim(six) != 3)
                continue;
            const Hyperplane h = solve_hyperplane(six);
            bool on = true;
            for (const auto& p : six)
                on = on && h.contains(p);
            const auto sa = h.eval(pts[skip_a]), sb = h.eval(pts[skip_b]);
            if (on && sa != 0 && sb != 0 && (sa > 0) == (sb > 0))
                found = true;
        }
    EXPECT_TRUE(found);
}

TEST(SolveHyperplane, WrongDimensionThrows)
{
    EXPECT_THROW(solve_hyperplane({RVector::unit(3, 0), RVector::unit(3, 1)}), std::invalid_argument);
    EXPECT_THROW(solve_hyperplane({}), std::invalid_argument);
}

TEST(SolveHyperplane, NormalIsPrimitiveAndContainsInputs)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coord(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<RVector> pts;
        for (int i = 0; i < 3; ++i)
            pts.push_back({q(coord(rng), 1 + (coord(rng) & 3)), q(coord(rng)), q(coord(rng))});
        if (affine_dim(pts) != 2)
            continue;
        const Hyperplane h = solve_hyperplane(pts);
        for (const auto& p : pts)
            EXPECT_TRUE(h.contains(p));
        Integer g = 0;
        bool    first_positive = false, seen = false;
        for (const auto& x : h.normal) {
            EXPECT_EQ(boost::multiprecision::denominator(x), 1);
            g = boost::multiprecision::gcd(g, Integer(boost::multiprecision::numerator(x)));
            if (!seen && x != 0) {
                first_positive = x > 0;
                seen = true;
            }
        }
        EXPECT_EQ(g, 1);
        EXPECT_TRUE(first_positive);
    }
}

TEST(Property, RankEqualsTransposeRank)
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> entry(-3, 3), shape(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
        const int r = shape(rng), c = shape(rng);
        std::vector<std::vector<long long>> m(r, std::vector<long long>(c)), t(c, std::vector<long long>(r));
        std::vector<RVector> rows(r, RVector(c)), cols(c, RVector(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                const int x = entry(rng) * (trial % 3 == 0 ? (j % 2) : 1);
                m[i][j] = t[j][i] = x;
                rows[i][j] = cols[j][i] = q(x);
            }
        const std::size_t oracle = integer_rank(m);
        EXPECT_EQ(rank(rows), oracle);
        EXPECT_EQ(rank(cols), oracle);
        EXPECT_EQ(integer_rank(t), oracle);
    }
}

TEST(Property, AddSubtractRoundTrip)
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 99999);
    for (int i = 0; i < 1000; ++i) {
        const Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        EXPECT_EQ((a + b) - b, a);
        EXPECT_EQ(parse_rational(to_string(a)), a);
    }
}

TEST(VertexSet, BasicOperations)
{
    VertexSet a{0, 3, 70, 127}, b{3, 4};
    EXPECT_EQ(a.size(), 4u);
    EXPECT_TRUE(a.contains(70));
    EXPECT_EQ((a & b), VertexSet{3});
    EXPECT_EQ((a | b).size(), 5u);
    EXPECT_EQ((a - b), (VertexSet{0, 70, 127}));
    EXPECT_TRUE(VertexSet{3}.subset_of(b));
    EXPECT_FALSE(a.subset_of(b));
    EXPECT_EQ(a.front(), 0u);
    EXPECT_EQ(a.elements(), (std::vector<std::size_t>{0, 3, 70, 127}));
    EXPECT_EQ(VertexSet::range(5).size(), 5u);
    EXPECT_THROW(a.insert(128), std::out_of_range);
}

TEST(VertexSet, OrderIsTotalAndConsistent)
{
    std::vector<VertexSet> sets{{0}, {1}, {0, 1}, {2, 3}, {}, {0, 2}};
    for (const auto& x : sets)
        for (const auto& y : sets) {
            const int lt = (x < y) + (y < x) + (x == y);
            EXPECT_EQ(lt, 1);
        }
}
