/**
 * Exact rational scalars, vectors and the small amount of linear algebra the
 * rest of the library needs (rank, affine dimension, hyperplane through a
 * point set). Everything is exact; there are no tolerances anywhere.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace polycomb {

using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// "p/q", or "p" when q == 1.
inline std::string to_string(const Rational& r)
{
    return r.str();
}

/**
 * Parses "p", "-p", "p/q" or "-p/q" with decimal integers p, q (q > 0).
 * Throws std::invalid_argument on anything else.
 */
inline Rational parse_rational(std::string_view text)
{
    auto is_digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    Integer q{std::string(den)};
    if (q == 0)
        throw std::invalid_argument("zero denominator in rational: '" + std::string(text) + "'");
    Integer p{std::string(num)};
    if (negative)
        p = -p;
    return Rational(p, q);
}

/** Fixed-length vector of rationals. */
class RVector
{
    public:
        RVector() = default;
        explicit RVector(std::size_t dim) : coords_(dim) {}
        RVector(std::initializer_list<Rational> coords) : coords_(coords) {}
        explicit RVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}

        static RVector unit(std::size_t dim, std::size_t i)
        {
            RVector e(dim);
            e.coords_.at(i) = 1;
            return e;
        }

        std::size_t size() const noexcept { return coords_.size(); }
        const Rational& operator[](std::size_t i) const { return coords_[i]; }
        Rational& operator[](std::size_t i) { return coords_[i]; }
        auto begin() const noexcept { return coords_.begin(); }
        auto end() const noexcept { return coords_.end(); }
        const std::vector<Rational>& coords() const noexcept { return coords_; }

        bool is_zero() const
        {
            return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return x == 0; });
        }

        RVector& operator+=(const RVector& o)
        {
            check_same(o);
            for (std::size_t i = 0; i < coords_.size(); ++i)
                coords_[i] += o.coords_[i];
            return *this;
        }
        RVector& operator-=(const RVector& o)
        {
            check_same(o);
            for (std::size_t i = 0; i < coords_.size(); ++i)
                coords_[i] -= o.coords_[i];
            return *this;
        }
        RVector& operator*=(const Rational& s)
        {
            for (auto& x : coords_)
                x *= s;
            return *this;
        }

        friend RVector operator+(RVector a, const RVector& b) { return a += b; }
        friend RVector operator-(RVector a, const RVector& b) { return a -= b; }
        friend RVector operator*(const Rational& s, RVector a) { return a *= s; }
        friend RVector operator-(RVector a)
        {
            for (auto& x : a.coords_)
                x = -x;
            return a;
        }
        friend bool operator==(const RVector& a, const RVector& b) { return a.coords_ == b.coords_; }
        friend bool operator<(const RVector& a, const RVector& b)
        {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        }

        /// Appends one coordinate; used to lift a point into one more dimension.
        RVector lifted(const Rational& last) const
        {
            RVector r = *this;
            r.coords_.push_back(last);
            return r;
        }

    private:
        void check_same(const RVector& o) const
        {
            if (o.size() != size())
                throw std::invalid_argument("RVector length mismatch");
        }

        std::vector<Rational> coords_;
};

inline Rational dot(const RVector& a, const RVector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const RVector& v)
{
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << to_string(v[i]);
    return os << ')';
}

/** {x : normal . x = offset}; when used as a facet the polytope is on the side normal . x <= offset. */
struct Hyperplane
{
    RVector  normal;
    Rational offset;

    Rational eval(const RVector& x) const { return dot(normal, x) - offset; }
    bool contains(const RVector& x) const { return dot(normal, x) == offset; }

    Hyperplane flipped() const { return {-normal, -offset}; }

    friend bool operator==(const Hyperplane& a, const Hyperplane& b)
    {
        return a.normal == b.normal && a.offset == b.offset;
    }
    friend bool operator<(const Hyperplane& a, const Hyperplane& b)
    {
        if (a.normal == b.normal)
            return a.offset < b.offset;
        return a.normal < b.normal;
    }
};

namespace detail {

/// In-place reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(std::vector<RVector>& m)
{
    std::vector<std::size_t> pivots;
    if (m.empty())
        return pivots;
    const std::size_t cols = m.front().size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0)
            ++sel;
        if (sel == m.size())
            continue;
        std::swap(m[row], m[sel]);
        const Rational inv = 1 / m[row][col];
        m[row] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0)
                continue;
            const Rational f = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Scales v to coprime integer entries with the first nonzero entry positive.
inline RVector primitive(const RVector& v)
{
    Integer lcm_den = 1;
    for (const auto& x : v)
        lcm_den = boost::multiprecision::lcm(lcm_den, Integer(boost::multiprecision::denominator(x)));
    std::vector<Integer> ints;
    ints.reserve(v.size());
    Integer g = 0;
    for (const auto& x : v) {
        Integer n = boost::multiprecision::numerator(x) * (lcm_den / boost::multiprecision::denominator(x));
        g = boost::multiprecision::gcd(g, n);
        ints.push_back(std::move(n));
    }
    if (g == 0)
        return v;
    int sign = 1;
    for (const auto& n : ints) {
        if (n != 0) {
            sign = n > 0 ? 1 : -1;
            break;
        }
    }
    RVector out(v.size());
    for (std::size_t i = 0; i < ints.size(); ++i)
        out[i] = Rational(ints[i] * sign / g);
    return out;
}

} // namespace detail

/** Rank of the span of the rows. All rows must share one length. */
inline std::size_t rank(std::vector<RVector> rows)
{
    for (const auto& r : rows)
        if (r.size() != rows.front().size())
            throw std::invalid_argument("rank: rows of different length");
    return detail::rref(rows).size();
}

/** Dimension of the affine hull: rank of {p_i - p_0}. */
inline std::size_t affine_dim(const std::vector<RVector>& points)
{
    if (points.empty())
        throw std::invalid_argument("affine_dim: empty point list");
    std::vector<RVector> diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i)
        diffs.push_back(points[i] - points[0]);
    return rank(std::move(diffs));
}

/**
 * The hyperplane through points that affinely span a (d-1)-flat of R^d.
 * The normal consists of coprime integers with its first nonzero entry
 * positive, so equal hyperplanes compare equal structurally.
 */
inline Hyperplane solve_hyperplane(const std::vector<RVector>& points)
{
    if (points.empty())
        throw std::invalid_argument("solve_hyperplane: empty point list");
    const std::size_t d = points.front().size();
    std::vector<RVector> diffs;
    for (std::size_t i = 1; i < points.size(); ++i)
        diffs.push_back(points[i] - points[0]);
    const auto pivots = detail::rref(diffs);
    if (pivots.size() + 1 != d)
        throw std::invalid_argument("solve_hyperplane: points span affine dimension "
                                    + std::to_string(pivots.size()) + ", expected " + std::to_string(d - 1));
    std::size_t free_col = 0;
    for (std::size_t k = 0; k < pivots.size() && pivots[k] == free_col; ++k)
        ++free_col;
    RVector normal(d);
    normal[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
        normal[pivots[r]] = -diffs[r][free_col];
    normal = detail::primitive(normal);
    Rational offset = dot(normal, points.front());
    return {std::move(normal), std::move(offset)};
}

} // namespace polycomb
