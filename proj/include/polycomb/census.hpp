/**
 * Facet classification against reference constructions.
 *
 * Several families coincide in low dimension (J_3 is B_3, N_3 is the
 * 3-pentasm, N_4 is B_4, prism(d) is M_{d,0}). A polytope is tagged with the
 * first matching family in kPrecedence order, so expected censuses must be
 * canonicalised the same way (see canonical_tag).
 */
#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "factory.hpp"
#include "lattice.hpp"

namespace polycomb {

enum class Family { Simplex, Prism, Triplex, Delta, Pentasm, A, B, J, N, Sigma, C };

struct FamilyTag
{
    Family           family;
    std::vector<int> params;

    std::string to_string() const
    {
        static const char* names[] = {"simplex", "prism", "M", "Delta", "pentasm", "A", "B", "J", "N", "Sigma", "C"};
        std::string s = names[static_cast<int>(family)];
        s += '(';
        for (std::size_t i = 0; i < params.size(); ++i)
            s += (i ? "," : "") + std::to_string(params[i]);
        return s + ')';
    }
    friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

/**
 * Lazily built reference polytopes, one list per dimension. Safe to share
 * between threads; each dimension is built once and read-only afterwards.
 */
class ReferenceCatalog
{
    public:
        struct Entry
        {
            FamilyTag    tag;
            std::size_t  nverts;
            std::size_t  nedges;
            std::size_t  nfacets;
            CombPolytope comb;
        };

        const std::vector<Entry>& for_dim(std::size_t k)
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = by_dim_.find(k);
            if (it == by_dim_.end())
                it = by_dim_.emplace(k, build_dim(k)).first;
            return it->second;
        }

        /// First family (in precedence order) combinatorially equivalent to cp.
        std::optional<FamilyTag> identify(const CombPolytope& cp, std::size_t nedges)
        {
            for (const auto& e : for_dim(cp.dim()))
                if (e.nverts == cp.num_vertices() && e.nedges == nedges && e.nfacets == cp.num_facets()
                    && isomorphic(cp, e.comb))
                    return e.tag;
            return std::nullopt;
        }

        /// All matching families, in precedence order.
        std::vector<FamilyTag> identify_all(const CombPolytope& cp, std::size_t nedges)
        {
            std::vector<FamilyTag> out;
            for (const auto& e : for_dim(cp.dim()))
                if (e.nverts == cp.num_vertices() && e.nedges == nedges && e.nfacets == cp.num_facets()
                    && isomorphic(cp, e.comb))
                    out.push_back(e.tag);
            return out;
        }

    private:
        static std::vector<Entry> build_dim(std::size_t k)
        {
            std::vector<Entry> out;
            auto add = [&](FamilyTag tag, const Polytope& p) {
                out.push_back({std::move(tag), p.num_vertices(), p.num_edges(), p.num_facets(), p.comb()});
            };
            const int K = static_cast<int>(k);
            if (k >= 1)
                add({Family::Simplex, {K}}, simplex(k));
            if (k >= 2)
                add({Family::Prism, {K}}, prism(k));
            for (std::size_t a = 2; a + 1 <= k; ++a)
                add({Family::Triplex, {static_cast<int>(a), static_cast<int>(k - a)}}, triplex(a, k - a));
            for (std::size_t n = 2; 2 * n <= k; ++n)
                add({Family::Delta, {static_cast<int>(k - n), static_cast<int>(n)}}, delta(k - n, n));
            if (k >= 2)
                add({Family::Pentasm, {K}}, family_pentasm(k));
            if (k >= 3) {
                add({Family::A, {K}}, family_a(k));
                add({Family::B, {K}}, family_b(k));
            }
            if (k >= 2)
                add({Family::J, {K}}, family_j(k));
            if (k >= 3) {
                add({Family::N, {K}}, family_n(k));
                add({Family::Sigma, {K}}, family_sigma(k));
                add({Family::C, {K}}, family_c(k));
            }
            return out;
        }

        std::mutex                                 mutex_;
        std::map<std::size_t, std::vector<Entry>> by_dim_;
};

/** Edges of s lying inside the vertex set f. */
inline std::size_t edges_within(const Structure& s, const VertexSet& f)
{
    std::size_t n = 0;
    for (auto u : f)
        n += (s.graph().neighbors(u) & f).size();
    return n / 2;
}

/** Tag of facet i of s, or nullopt when no reference construction matches. */
inline std::optional<FamilyTag> classify_facet(const Structure& s, std::size_t facet_index, ReferenceCatalog& cat)
{
    const FacetView view = facet_polytope(s.comb(), s.lattice(), facet_index);
    return cat.identify(view.polytope, edges_within(s, s.comb().facet(facet_index)));
}

/** Canonical tag of a whole polytope (how classify_facet would name it as a facet). */
inline std::optional<FamilyTag> canonical_tag(const Structure& s, ReferenceCatalog& cat)
{
    return cat.identify(s.comb(), s.num_edges());
}

inline std::string tag_name(const std::optional<FamilyTag>& t)
{
    return t ? t->to_string() : std::string("unknown");
}

/** Multiset of facet tags, as name -> count. */
inline std::map<std::string, int> facet_census(const Structure& s, ReferenceCatalog& cat)
{
    std::map<std::string, int> out;
    for (std::size_t f = 0; f < s.num_facets(); ++f)
        ++out[tag_name(classify_facet(s, f, cat))];
    return out;
}

inline std::string census_string(const std::map<std::string, int>& census)
{
    std::string s = "{";
    bool first = true;
    for (const auto& [name, count] : census) {
        s += (first ? "" : ", ") + std::to_string(count) + "x" + name;
        first = false;
    }
    return s + "}";
}

} // namespace polycomb
