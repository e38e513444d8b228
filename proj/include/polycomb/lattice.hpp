/**
 * Combinatorial structure of a polytope recovered from its vertex-facet
 * incidences alone: face lattice, graph, ridges and the "other facet" of
 * each ridge, and combinatorial isomorphism.
 *
 * Nothing here looks at coordinates. Face dimensions come from longest-chain
 * grading of the intersection closure of the facets.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "vertex_set.hpp"

namespace polycomb {

/** Raised when incidence data cannot come from a polytope. */
class NotPolytopal : public std::runtime_error
{
    public:
        explicit NotPolytopal(const std::string& what) : std::runtime_error(what) {}
};

/** dim, vertex count and facet vertex sets. Validated on construction. */
class CombPolytope
{
    public:
        CombPolytope(std::size_t dim, std::size_t nverts, std::vector<VertexSet> facets)
        : dim_(dim), nverts_(nverts), facets_(std::move(facets))
        {
            if (dim_ == 0)
                throw std::invalid_argument("CombPolytope: dimension must be positive");
            if (nverts_ > VertexSet::kCapacity)
                throw std::invalid_argument("CombPolytope: too many vertices");
            const VertexSet all = VertexSet::range(nverts_);
            std::vector<std::size_t> count(nverts_, 0);
            for (std::size_t i = 0; i < facets_.size(); ++i) {
                const auto& f = facets_[i];
                if (!f.subset_of(all))
                    throw std::invalid_argument("CombPolytope: facet " + std::to_string(i) + " has out-of-range vertex");
                if (f.size() < dim_)
                    throw std::invalid_argument("CombPolytope: facet " + std::to_string(i) + " has fewer than d vertices");
                for (auto v : f)
                    ++count[v];
            }
            for (std::size_t v = 0; v < nverts_; ++v)
                if (count[v] < dim_)
                    throw std::invalid_argument("CombPolytope: vertex " + std::to_string(v) + " lies in fewer than d facets");
            for (std::size_t i = 0; i < facets_.size(); ++i)
                for (std::size_t j = 0; j < facets_.size(); ++j)
                    if (i != j && facets_[i].subset_of(facets_[j]))
                        throw std::invalid_argument("CombPolytope: facet " + std::to_string(i) + " contained in facet "
                                                    + std::to_string(j));
        }

        std::size_t dim() const noexcept { return dim_; }
        std::size_t num_vertices() const noexcept { return nverts_; }
        std::size_t num_facets() const noexcept { return facets_.size(); }
        const std::vector<VertexSet>& facets() const noexcept { return facets_; }
        const VertexSet& facet(std::size_t i) const { return facets_.at(i); }
        VertexSet all_vertices() const { return VertexSet::range(nverts_); }

        /// Intersection of the facets containing s (the whole vertex set if none do).
        VertexSet closure(const VertexSet& s) const
        {
            VertexSet c = all_vertices();
            for (const auto& f : facets_)
                if (s.subset_of(f))
                    c &= f;
            return c;
        }

        friend bool operator==(const CombPolytope&, const CombPolytope&) = default;

    private:
        std::size_t            dim_;
        std::size_t            nverts_;
        std::vector<VertexSet> facets_;
};

struct Face
{
    VertexSet vertices;
    int       dim;
};

/**
 * All faces, from the empty face (dim -1) to the polytope itself (dim d),
 * ordered by dimension and then by vertex set. Covers are stored both ways.
 */
class FaceLattice
{
    public:
        const std::vector<Face>& faces() const noexcept { return faces_; }
        const Face& face(std::size_t i) const { return faces_.at(i); }
        std::size_t size() const noexcept { return faces_.size(); }
        int dim() const noexcept { return faces_.back().dim; }

        const std::vector<std::size_t>& children(std::size_t i) const { return children_.at(i); }
        const std::vector<std::size_t>& parents(std::size_t i) const { return parents_.at(i); }

        std::optional<std::size_t> index_of(const VertexSet& s) const
        {
            auto it = index_.find(s);
            if (it == index_.end())
                return std::nullopt;
            return it->second;
        }
        bool is_face(const VertexSet& s) const { return index_.count(s) != 0; }

        /// Face indices of the given dimension, in lattice order.
        std::vector<std::size_t> faces_of_dim(int k) const
        {
            std::vector<std::size_t> out;
            for (std::size_t i = 0; i < faces_.size(); ++i)
                if (faces_[i].dim == k)
                    out.push_back(i);
            return out;
        }

        /// (f_0, ..., f_{d-1})
        std::vector<std::size_t> f_vector() const
        {
            std::vector<std::size_t> f(static_cast<std::size_t>(std::max(dim(), 0)), 0);
            for (const auto& face : faces_)
                if (face.dim >= 0 && face.dim < dim())
                    ++f[static_cast<std::size_t>(face.dim)];
            return f;
        }

        /// Lattice index of facet i of the CombPolytope the lattice was built from.
        std::size_t facet_face(std::size_t i) const { return facet_faces_.at(i); }

    private:
        friend FaceLattice build_lattice(const CombPolytope&);

        std::vector<Face>                                      faces_;
        std::vector<std::vector<std::size_t>>                  children_;
        std::vector<std::vector<std::size_t>>                  parents_;
        std::unordered_map<VertexSet, std::size_t, VertexSetHash> index_;
        std::vector<std::size_t>                               facet_faces_;
};

/**
 * Closes the facet family under intersection, computes covers as the maximal
 * proper intersections with facets, and grades by longest chain.
 * Throws NotPolytopal when the result is not graded of rank d+1 with the
 * vertices as atoms.
 */
inline FaceLattice build_lattice(const CombPolytope& cp)
{
    const VertexSet all = cp.all_vertices();
    const auto&     facets = cp.facets();

    std::unordered_set<VertexSet, VertexSetHash> seen{all, VertexSet{}};
    std::vector<VertexSet>                       work;
    for (const auto& f : facets)
        if (seen.insert(f).second)
            work.push_back(f);
    std::vector<VertexSet> sets{all, VertexSet{}};
    sets.insert(sets.end(), work.begin(), work.end());
    while (!work.empty()) {
        const VertexSet x = work.back();
        work.pop_back();
        for (const auto& f : facets) {
            VertexSet y = x & f;
            if (seen.insert(y).second) {
                work.push_back(y);
                sets.push_back(y);
            }
        }
    }
    std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });

    std::unordered_map<VertexSet, std::size_t, VertexSetHash> pos;
    for (std::size_t i = 0; i < sets.size(); ++i)
        pos.emplace(sets[i], i);

    // Covers and longest-chain rank, smallest sets first.
    std::vector<std::vector<std::size_t>> children(sets.size());
    std::vector<int>                      rank(sets.size(), -1);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const VertexSet& x = sets[i];
        if (x.empty())
            continue;
        std::vector<VertexSet> cand;
        for (const auto& f : facets) {
            VertexSet y = x & f;
            if (y != x && std::find(cand.begin(), cand.end(), y) == cand.end())
                cand.push_back(y);
        }
        for (const auto& c : cand) {
            bool maximal = true;
            for (const auto& o : cand)
                if (o != c && c.subset_of(o)) {
                    maximal = false;
                    break;
                }
            if (maximal)
                children[i].push_back(pos.at(c));
        }
        if (children[i].empty())
            throw NotPolytopal("vertex set " + std::to_string(x.size()) + " lies in every facet");
        std::sort(children[i].begin(), children[i].end());
        rank[i] = rank[children[i].front()] + 1;
        for (auto c : children[i])
            if (rank[c] != rank[i] - 1)
                throw NotPolytopal("face lattice is not graded");
    }
    if (rank[pos.at(all)] != static_cast<int>(cp.dim()))
        throw NotPolytopal("face lattice has rank " + std::to_string(rank[pos.at(all)] + 1) + ", expected "
                           + std::to_string(cp.dim() + 1));
    std::size_t atoms = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (rank[i] == 0) {
            if (sets[i].size() != 1)
                throw NotPolytopal("atom of the face lattice is not a single vertex");
            ++atoms;
        }
    }
    if (atoms != cp.num_vertices())
        throw NotPolytopal("not every vertex is a face");
    for (const auto& f : facets)
        if (rank[pos.at(f)] != static_cast<int>(cp.dim()) - 1)
            throw NotPolytopal("facet of wrong dimension");

    // Final order: by dimension, then by vertex set.
    std::vector<std::size_t> order(sets.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return rank[a] != rank[b] ? rank[a] < rank[b] : sets[a] < sets[b];
    });
    std::vector<std::size_t> renum(sets.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        renum[order[k]] = k;

    FaceLattice lat;
    lat.faces_.reserve(sets.size());
    lat.children_.resize(sets.size());
    lat.parents_.resize(sets.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        const std::size_t i = order[k];
        lat.faces_.push_back({sets[i], rank[i]});
        lat.index_.emplace(sets[i], k);
        for (auto c : children[i]) {
            lat.children_[k].push_back(renum[c]);
            lat.parents_[renum[c]].push_back(k);
        }
    }
    for (auto& c : lat.children_)
        std::sort(c.begin(), c.end());
    for (auto& p : lat.parents_)
        std::sort(p.begin(), p.end());
    for (const auto& f : facets)
        lat.facet_faces_.push_back(lat.index_.at(f));
    return lat;
}

/** Simple undirected graph on vertices 0..v-1. */
class Graph
{
    public:
        explicit Graph(std::size_t n = 0) : adj_(n) {}

        void add_edge(std::size_t u, std::size_t w)
        {
            if (u == w)
                throw std::invalid_argument("Graph: loop");
            adj_.at(u).insert(w);
            adj_.at(w).insert(u);
        }

        std::size_t num_vertices() const noexcept { return adj_.size(); }
        std::size_t num_edges() const
        {
            std::size_t s = 0;
            for (const auto& a : adj_)
                s += a.size();
            return s / 2;
        }
        std::size_t degree(std::size_t u) const { return adj_.at(u).size(); }
        bool adjacent(std::size_t u, std::size_t w) const { return adj_.at(u).contains(w); }
        const VertexSet& neighbors(std::size_t u) const { return adj_.at(u); }

        std::vector<std::pair<std::size_t, std::size_t>> edges() const
        {
            std::vector<std::pair<std::size_t, std::size_t>> out;
            for (std::size_t u = 0; u < adj_.size(); ++u)
                for (auto w : adj_[u])
                    if (u < w)
                        out.emplace_back(u, w);
            return out;
        }

        /// Connectivity of the subgraph induced on s (empty set counts as connected).
        bool induced_connected(const VertexSet& s) const
        {
            if (s.empty())
                return true;
            VertexSet reached{s.front()};
            VertexSet frontier = reached;
            while (!frontier.empty()) {
                VertexSet next;
                for (auto u : frontier)
                    next |= adj_[u] & s;
                next -= reached;
                reached |= next;
                frontier = next;
            }
            return reached == s;
        }

        /// Number of edges with at least one endpoint in s.
        std::size_t edges_meeting(const VertexSet& s) const
        {
            std::size_t inside = 0, leaving = 0;
            for (auto u : s) {
                inside += (adj_[u] & s).size();
                leaving += (adj_[u] - s).size();
            }
            return inside / 2 + leaving;
        }

    private:
        std::vector<VertexSet> adj_;
};

/** Edges are exactly the 1-faces. */
inline Graph graph_of(const CombPolytope& cp, const FaceLattice& lat)
{
    Graph g(cp.num_vertices());
    for (auto i : lat.faces_of_dim(1)) {
        const auto& s = lat.face(i).vertices;
        if (s.size() != 2)
            throw NotPolytopal("1-face with " + std::to_string(s.size()) + " vertices");
        g.add_edge(s.front(), *++s.begin());
    }
    return g;
}

inline Graph graph_of(const CombPolytope& cp)
{
    return graph_of(cp, build_lattice(cp));
}

struct Ridge
{
    VertexSet   vertices;
    std::size_t facet_a; ///< index into CombPolytope::facets()
    std::size_t facet_b;
};

/** Every (d-2)-face with the two facets containing it. */
inline std::vector<Ridge> ridges_and_other_facet(const CombPolytope& cp, const FaceLattice& lat)
{
    std::vector<Ridge> out;
    const int          d = static_cast<int>(cp.dim());
    if (d < 1)
        return out;
    for (auto i : lat.faces_of_dim(d - 2)) {
        std::vector<std::size_t> owners;
        for (std::size_t f = 0; f < cp.num_facets(); ++f)
            if (lat.face(i).vertices.subset_of(cp.facet(f)))
                owners.push_back(f);
        if (owners.size() != 2)
            throw NotPolytopal("ridge contained in " + std::to_string(owners.size()) + " facets");
        out.push_back({lat.face(i).vertices, owners[0], owners[1]});
    }
    return out;
}

inline std::vector<Ridge> ridges_and_other_facet(const CombPolytope& cp)
{
    return ridges_and_other_facet(cp, build_lattice(cp));
}

/**
 * The facet as a (d-1)-dimensional CombPolytope, its vertices relabeled
 * 0..|F|-1 in increasing order. labels[i] is the original index of new vertex i.
 */
struct FacetView
{
    CombPolytope             polytope;
    std::vector<std::size_t> labels;
};

/** Lattice face i as a polytope in its own right, vertices relabelled 0..k-1. */
inline FacetView face_polytope(const FaceLattice& lat, std::size_t face_index)
{
    const Face& face = lat.face(face_index);
    if (face.dim < 1)
        throw std::invalid_argument("face_polytope: face of dimension < 1");
    std::vector<std::size_t> labels = face.vertices.elements();
    std::vector<std::size_t> relabel(labels.empty() ? 0 : labels.back() + 1, 0);
    for (std::size_t k = 0; k < labels.size(); ++k)
        relabel[labels[k]] = k;
    std::vector<VertexSet> sub;
    for (auto c : lat.children(face_index))
        sub.push_back(lat.face(c).vertices.mapped(relabel));
    return {CombPolytope(static_cast<std::size_t>(face.dim), labels.size(), std::move(sub)), labels};
}

inline FacetView facet_polytope(const CombPolytope& cp, const FaceLattice& lat, std::size_t facet_index)
{
    if (cp.dim() < 2)
        throw std::invalid_argument("facet_polytope: facets of a polytope of dimension < 2 are points");
    return face_polytope(lat, lat.facet_face(facet_index));
}

namespace detail {

/// Joint colour refinement of the vertex-facet incidence graphs of a and b.
inline std::pair<std::vector<long>, std::vector<long>> refine_colors(const CombPolytope& a, const CombPolytope& b,
                                                                     std::vector<long>& fa, std::vector<long>& fb)
{
    std::map<std::vector<long>, long> dict;
    auto intern = [&](std::vector<long> sig) {
        auto it = dict.find(sig);
        if (it != dict.end())
            return it->second;
        const long id = static_cast<long>(dict.size());
        dict.emplace(std::move(sig), id);
        return id;
    };
    auto init = [&](const CombPolytope& p, std::vector<long>& vc, std::vector<long>& fc) {
        vc.assign(p.num_vertices(), 0);
        fc.assign(p.num_facets(), 0);
        for (std::size_t f = 0; f < p.num_facets(); ++f) {
            fc[f] = intern({-1, static_cast<long>(p.facet(f).size())});
            for (auto v : p.facet(f))
                ++vc[v];
        }
        for (auto& c : vc)
            c = intern({-2, c});
    };
    std::vector<long> va, vb;
    init(a, va, fa);
    init(b, vb, fb);
    auto step = [&](const CombPolytope& p, std::vector<long>& vc, std::vector<long>& fc) {
        std::vector<std::vector<long>> vsig(p.num_vertices());
        std::vector<long>              nf(p.num_facets());
        for (std::size_t f = 0; f < p.num_facets(); ++f) {
            std::vector<long> s{-3, fc[f]};
            for (auto v : p.facet(f)) {
                s.push_back(vc[v]);
                vsig[v].push_back(fc[f]);
            }
            std::sort(s.begin() + 2, s.end());
            nf[f] = intern(std::move(s));
        }
        for (std::size_t v = 0; v < p.num_vertices(); ++v) {
            std::sort(vsig[v].begin(), vsig[v].end());
            vsig[v].insert(vsig[v].begin(), {-4, vc[v]});
            vc[v] = intern(std::move(vsig[v]));
        }
        fc = std::move(nf);
    };
    const std::size_t rounds = std::max(a.num_vertices(), a.num_facets()) + 1;
    for (std::size_t r = 0; r < rounds; ++r) {
        auto classes = [](const std::vector<long>& v) {
            std::vector<long> s = v;
            std::sort(s.begin(), s.end());
            return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
        };
        const std::size_t before = classes(va) + classes(fa);
        step(a, va, fa);
        step(b, vb, fb);
        if (classes(va) + classes(fa) == before)
            break;
    }
    return {va, vb};
}

} // namespace detail

/**
 * Vertex bijection sigma with {sigma(F)} = facets of b, or nullopt.
 * witness[i] is the image in b of vertex i of a.
 */
inline std::optional<std::vector<std::size_t>> find_isomorphism(const CombPolytope& a, const CombPolytope& b)
{
    if (a.dim() != b.dim() || a.num_vertices() != b.num_vertices() || a.num_facets() != b.num_facets())
        return std::nullopt;
    const std::size_t n = a.num_vertices();
    std::vector<long> fa, fb;
    auto [va, vb] = detail::refine_colors(a, b, fa, fb);
    auto histogram = [](std::vector<long> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    if (histogram(va) != histogram(vb) || histogram(fa) != histogram(fb))
        return std::nullopt;

    // Assignment order: rarest colour first, then vertices sharing the most
    // facets with those already placed.
    std::map<long, std::size_t> class_size;
    for (auto c : va)
        ++class_size[c];
    std::vector<std::size_t> order;
    VertexSet                placed;
    while (order.size() < n) {
        std::size_t best = n;
        long        best_share = -1;
        std::size_t best_class = 0;
        for (std::size_t u = 0; u < n; ++u) {
            if (placed.contains(u))
                continue;
            long share = 0;
            for (const auto& f : a.facets())
                if (f.contains(u))
                    share += static_cast<long>((f & placed).size());
            const std::size_t cs = class_size[va[u]];
            if (share > best_share || (share == best_share && cs < best_class)) {
                best = u;
                best_share = share;
                best_class = cs;
            }
        }
        order.push_back(best);
        placed.insert(best);
    }

    std::vector<std::size_t> image(n, n);
    VertexSet                used;
    std::vector<VertexSet>   img_facet(a.num_facets());

    auto consistent = [&]() {
        for (std::size_t f = 0; f < a.num_facets(); ++f) {
            bool found = false;
            for (std::size_t g = 0; g < b.num_facets() && !found; ++g)
                found = fa[f] == fb[g] && (b.facet(g) & used) == img_facet[f];
            if (!found)
                return false;
        }
        return true;
    };

    auto search = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == n)
            return true;
        const std::size_t u = order[depth];
        for (std::size_t x = 0; x < n; ++x) {
            if (used.contains(x) || vb[x] != va[u])
                continue;
            image[u] = x;
            used.insert(x);
            std::vector<std::size_t> touched;
            for (std::size_t f = 0; f < a.num_facets(); ++f)
                if (a.facet(f).contains(u)) {
                    img_facet[f].insert(x);
                    touched.push_back(f);
                }
            if (consistent() && self(self, depth + 1))
                return true;
            for (auto f : touched)
                img_facet[f].erase(x);
            used.erase(x);
            image[u] = n;
        }
        return false;
    };
    if (!search(search, 0))
        return std::nullopt;
    return image;
}

inline bool isomorphic(const CombPolytope& a, const CombPolytope& b)
{
    return find_isomorphism(a, b).has_value();
}

/** Comb structure plus its lattice and graph, computed once. */
class Structure
{
    public:
        explicit Structure(CombPolytope cp)
        : comb_(std::move(cp)), lattice_(build_lattice(comb_)), graph_(graph_of(comb_, lattice_))
        {
        }

        const CombPolytope& comb() const noexcept { return comb_; }
        const FaceLattice& lattice() const noexcept { return lattice_; }
        const Graph& graph() const noexcept { return graph_; }

        std::size_t dim() const noexcept { return comb_.dim(); }
        std::size_t num_vertices() const noexcept { return comb_.num_vertices(); }
        std::size_t num_edges() const { return graph_.num_edges(); }
        std::size_t num_facets() const noexcept { return comb_.num_facets(); }

    private:
        CombPolytope comb_;
        FaceLattice  lattice_;
        Graph        graph_;
};

} // namespace polycomb
