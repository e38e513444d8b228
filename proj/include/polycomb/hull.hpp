/**
 * Exact facet enumeration for full-dimensional rational point sets.
 *
 * Points are inserted one at a time into an initial simplex (the first d+1
 * affinely independent points in input order). For each new point the
 * facets it sees are discarded and replaced by cones over the horizon
 * ridges; coplanar facets simply absorb the point. Ridges are detected
 * combinatorially: two facets meet in a ridge iff their common points number
 * at least d-1 and no third facet contains them all.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "vertex_set.hpp"

namespace polycomb {

class NotFullDimensional : public std::runtime_error
{
    public:
        explicit NotFullDimensional(const std::string& what) : std::runtime_error(what) {}
};

/** V-representation: d and a list of distinct points of R^d. */
class PointSet
{
    public:
        PointSet(std::size_t dim, std::vector<RVector> points) : dim_(dim), points_(std::move(points))
        {
            if (points_.size() > VertexSet::kCapacity)
                throw std::invalid_argument("PointSet: too many points (" + std::to_string(points_.size()) + ")");
            for (const auto& p : points_)
                if (p.size() != dim_)
                    throw std::invalid_argument("PointSet: point of length " + std::to_string(p.size())
                                                + " in dimension " + std::to_string(dim_));
            std::set<RVector> seen(points_.begin(), points_.end());
            if (seen.size() != points_.size())
                throw std::invalid_argument("PointSet: duplicate points");
        }

        std::size_t dim() const noexcept { return dim_; }
        std::size_t size() const noexcept { return points_.size(); }
        const std::vector<RVector>& points() const noexcept { return points_; }
        const RVector& operator[](std::size_t i) const { return points_[i]; }

    private:
        std::size_t          dim_;
        std::vector<RVector> points_;
};

struct HullResult
{
    std::vector<Hyperplane> facets;       ///< outward, primitive integer normals, sorted
    std::vector<VertexSet>  incidence;    ///< per facet, indices of points on it
    std::vector<bool>       vertex_flags; ///< per point
};

/** Centroid of the points; strictly interior when the set is full-dimensional. */
inline RVector interior_point(const PointSet& ps)
{
    RVector c(ps.dim());
    for (const auto& p : ps.points())
        c += p;
    c *= Rational(1, static_cast<long>(ps.size()));
    return c;
}

namespace detail {

inline Hyperplane oriented_plane(const std::vector<RVector>& pts, const RVector& inside)
{
    Hyperplane h = solve_hyperplane(pts);
    const Rational s = h.eval(inside);
    if (s == 0)
        throw std::logic_error("hull: interior reference point lies on a facet plane");
    return s > 0 ? h.flipped() : h;
}

inline std::vector<RVector> gather(const PointSet& ps, const VertexSet& idx)
{
    std::vector<RVector> out;
    for (auto i : idx)
        out.push_back(ps[i]);
    return out;
}

} // namespace detail

inline HullResult facet_enumerate(const PointSet& ps)
{
    const std::size_t d = ps.dim();
    const std::size_t n = ps.size();
    if (d == 0 || n == 0 || affine_dim(ps.points()) < d)
        throw NotFullDimensional("facet_enumerate: points do not span dimension " + std::to_string(d));

    // Initial simplex.
    std::vector<std::size_t> simplex{0};
    std::vector<RVector>     diffs;
    for (std::size_t i = 1; i < n && simplex.size() < d + 1; ++i) {
        diffs.push_back(ps[i] - ps[0]);
        if (rank(diffs) == diffs.size())
            simplex.push_back(i);
        else
            diffs.pop_back();
    }
    RVector inside(d);
    for (auto i : simplex)
        inside += ps[i];
    inside *= Rational(1, static_cast<long>(d + 1));

    struct Facet
    {
        Hyperplane plane;
        VertexSet  inc;
    };
    std::vector<Facet> facets;
    VertexSet          inserted = VertexSet::from(simplex);
    for (std::size_t skip = 0; skip < simplex.size(); ++skip) {
        VertexSet on = inserted;
        on.erase(simplex[skip]);
        facets.push_back({detail::oriented_plane(detail::gather(ps, on), inside), on});
    }

    for (std::size_t p = 0; p < n; ++p) {
        if (inserted.contains(p))
            continue;
        std::vector<std::size_t> visible, kept;
        for (std::size_t f = 0; f < facets.size(); ++f) {
            const Rational s = facets[f].plane.eval(ps[p]);
            (s > 0 ? visible : kept).push_back(f);
            if (s == 0)
                facets[f].inc.insert(p);
        }
        inserted.insert(p);
        if (visible.empty())
            continue;

        std::map<Hyperplane, VertexSet> fresh;
        for (auto fv : visible) {
            for (auto fk : kept) {
                VertexSet common = facets[fv].inc & facets[fk].inc;
                common.erase(p);
                if (common.size() + 1 < d)
                    continue;
                bool ridge = true;
                for (std::size_t h = 0; h < facets.size() && ridge; ++h)
                    if (h != fv && h != fk && common.subset_of(facets[h].inc))
                        ridge = false;
                if (!ridge)
                    continue;
                auto pts = detail::gather(ps, common);
                pts.push_back(ps[p]);
                fresh.emplace(detail::oriented_plane(pts, inside), VertexSet{});
            }
        }

        std::vector<Facet> next;
        for (auto fk : kept) {
            fresh.erase(facets[fk].plane);
            next.push_back(std::move(facets[fk]));
        }
        for (auto& [plane, inc] : fresh) {
            for (auto i : inserted)
                if (plane.contains(ps[i]))
                    inc.insert(i);
            next.push_back({plane, inc});
        }
        facets = std::move(next);
    }

    std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) { return a.plane < b.plane; });
    HullResult out;
    for (auto& f : facets) {
        out.facets.push_back(std::move(f.plane));
        out.incidence.push_back(f.inc);
    }
    out.vertex_flags.assign(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<RVector> normals;
        for (std::size_t f = 0; f < out.facets.size(); ++f)
            if (out.incidence[f].contains(i))
                normals.push_back(out.facets[f].normal);
        out.vertex_flags[i] = normals.size() >= d && rank(std::move(normals)) == d;
    }
    return out;
}

/** True iff every input point is a vertex of the hull. */
inline bool verify_vertices(const PointSet& ps, const HullResult& hr)
{
    if (hr.vertex_flags.size() != ps.size())
        return false;
    return std::all_of(hr.vertex_flags.begin(), hr.vertex_flags.end(), [](bool b) { return b; });
}

} // namespace polycomb
