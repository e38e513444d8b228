/**
 * Minkowski decomposability from sufficient conditions, with certificates
 * that can be re-checked without repeating the search.
 *
 * Decomposable: a facet with Shephard's property and at least two vertices
 * outside it. Indecomposable: a pyramid; at most 2d vertices and not a prism;
 * or an indecomposable seed subgraph (edge, triangle, non-coplanar K_{2,3})
 * grown by simple extensions until it touches every facet.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "factory.hpp"
#include "lattice.hpp"
#include "rational.hpp"

namespace polycomb {

enum class Verdict { Decomposable, Indecomposable, Unknown };
enum class Rule { Shephard, Pyramid, SmallVertexCount, GraphGrowth };
enum class SeedKind { Edge, Triangle, K23 };

inline const char* to_string(Verdict v)
{
    switch (v) {
        case Verdict::Decomposable: return "Decomposable";
        case Verdict::Indecomposable: return "Indecomposable";
        default: return "Unknown";
    }
}

inline const char* to_string(Rule r)
{
    switch (r) {
        case Rule::Shephard: return "Shephard";
        case Rule::Pyramid: return "Pyramid";
        case Rule::SmallVertexCount: return "SmallVertexCount";
        default: return "GraphGrowth";
    }
}

inline const char* to_string(SeedKind k)
{
    switch (k) {
        case SeedKind::Edge: return "edge";
        case SeedKind::Triangle: return "triangle";
        default: return "k23";
    }
}

struct ShephardCertificate
{
    std::size_t facet;
    std::size_t outside;
};

struct PyramidCertificate
{
    std::size_t apex;
    std::size_t base_facet;
};

struct SmallCertificate
{
    std::size_t v;
    std::size_t d;
};

struct Extension
{
    std::size_t              vertex;
    std::vector<std::size_t> attachments;
};

/** For K23 the seed lists the two hubs first, then the three spokes. */
struct GrowthCertificate
{
    SeedKind                 kind;
    std::vector<std::size_t> seed;
    std::vector<Extension>   extensions;
    std::vector<std::size_t> facet_witness; ///< one grown vertex per facet, by facet index
};

using Certificate = std::variant<ShephardCertificate, PyramidCertificate, SmallCertificate, GrowthCertificate>;

struct DecompVerdict
{
    Verdict                    verdict = Verdict::Unknown;
    std::optional<Certificate> certificate;
    std::vector<Rule>          fired;
    bool                       contradiction = false;
};

/// Facets where every vertex has exactly one neighbour outside the facet.
inline std::vector<std::size_t> shephard_facets(const Structure& s)
{
    std::vector<std::size_t> out;
    const VertexSet          all = s.comb().all_vertices();
    for (std::size_t f = 0; f < s.num_facets(); ++f) {
        const VertexSet& F = s.comb().facet(f);
        const VertexSet  outside = all - F;
        bool             ok = true;
        for (auto u : F)
            ok = ok && (s.graph().neighbors(u) & outside).size() == 1;
        if (ok)
            out.push_back(f);
    }
    return out;
}

namespace detail {

inline bool is_prism_like(const Structure& s)
{
    if (s.num_vertices() != 2 * s.dim() || s.dim() < 2)
        return false;
    const Polytope ref = prism(s.dim());
    return ref.num_edges() == s.num_edges() && ref.num_facets() == s.num_facets() && isomorphic(ref.comb(), s.comb());
}

inline std::optional<PyramidCertificate> find_apex(const Structure& s)
{
    for (std::size_t f = 0; f < s.num_facets(); ++f)
        if (s.comb().facet(f).size() + 1 == s.num_vertices())
            return PyramidCertificate{(s.comb().all_vertices() - s.comb().facet(f)).front(), f};
    return std::nullopt;
}

inline std::optional<std::vector<std::size_t>> witness_for(const Structure& s, const VertexSet& grown)
{
    std::vector<std::size_t> w;
    for (const auto& F : s.comb().facets()) {
        const VertexSet hit = F & grown;
        if (hit.empty())
            return std::nullopt;
        w.push_back(hit.front());
    }
    return w;
}

/// Simple extensions until none applies; the closure does not depend on order.
inline GrowthCertificate grow(const Structure& s, SeedKind kind, std::vector<std::size_t> seed)
{
    GrowthCertificate cert{kind, seed, {}, {}};
    VertexSet         cur = VertexSet::from(seed);
    for (;;) {
        std::size_t best = s.num_vertices(), best_count = 1;
        for (std::size_t u = 0; u < s.num_vertices(); ++u) {
            if (cur.contains(u))
                continue;
            const std::size_t c = (s.graph().neighbors(u) & cur).size();
            if (c > best_count) {
                best = u;
                best_count = c;
            }
        }
        if (best == s.num_vertices())
            break;
        cert.extensions.push_back({best, (s.graph().neighbors(best) & cur).elements()});
        cur.insert(best);
    }
    return cert;
}

inline VertexSet grown_set(const GrowthCertificate& c)
{
    VertexSet v = VertexSet::from(c.seed);
    for (const auto& e : c.extensions)
        v.insert(e.vertex);
    return v;
}

inline std::optional<GrowthCertificate> growth_search(const Structure& s, const std::vector<RVector>* coords)
{
    const auto& g = s.graph();
    const std::size_t n = s.num_vertices();
    auto attempt = [&](SeedKind kind, std::vector<std::size_t> seed) -> std::optional<GrowthCertificate> {
        GrowthCertificate c = grow(s, kind, std::move(seed));
        if (auto w = witness_for(s, grown_set(c))) {
            c.facet_witness = std::move(*w);
            return c;
        }
        return std::nullopt;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (auto b : g.neighbors(a))
            if (b > a)
                for (auto c : g.neighbors(a) & g.neighbors(b))
                    if (c > b)
                        if (auto r = attempt(SeedKind::Triangle, {a, b, c}))
                            return r;
    for (const auto& [a, b] : g.edges())
        if (auto r = attempt(SeedKind::Edge, {a, b}))
            return r;
    if (coords) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) {
                const auto common = (g.neighbors(a) & g.neighbors(b)).elements();
                for (std::size_t i = 0; i < common.size(); ++i)
                    for (std::size_t j = i + 1; j < common.size(); ++j)
                        for (std::size_t k = j + 1; k < common.size(); ++k) {
                            const std::vector<std::size_t> seed{a, b, common[i], common[j], common[k]};
                            std::vector<RVector>           pts;
                            for (auto x : seed)
                                pts.push_back((*coords)[x]);
                            if (affine_dim(pts) < 3)
                                continue;
                            if (auto r = attempt(SeedKind::K23, seed))
                                return r;
                        }
            }
    }
    return std::nullopt;
}

} // namespace detail

/**
 * Evaluates every rule. coords may be null (coordinate-free input), in which
 * case K_{2,3} seeds are not tried.
 */
inline DecompVerdict decide(const Structure& s, const std::vector<RVector>* coords = nullptr)
{
    DecompVerdict out;
    std::optional<Certificate> dec, indec;

    const VertexSet all = s.comb().all_vertices();
    for (auto f : shephard_facets(s)) {
        const std::size_t outside = (all - s.comb().facet(f)).size();
        if (outside >= 2) {
            out.fired.push_back(Rule::Shephard);
            dec = ShephardCertificate{f, outside};
            break;
        }
    }
    if (auto p = detail::find_apex(s)) {
        out.fired.push_back(Rule::Pyramid);
        indec = *p;
    }
    if (s.num_vertices() <= 2 * s.dim() && !detail::is_prism_like(s)) {
        out.fired.push_back(Rule::SmallVertexCount);
        if (!indec)
            indec = SmallCertificate{s.num_vertices(), s.dim()};
    }
    if (auto gcert = detail::growth_search(s, coords)) {
        out.fired.push_back(Rule::GraphGrowth);
        if (!indec)
            indec = std::move(*gcert);
    }

    out.contradiction = dec && indec;
    if (dec) {
        out.verdict = Verdict::Decomposable;
        out.certificate = dec;
    } else if (indec) {
        out.verdict = Verdict::Indecomposable;
        out.certificate = indec;
    }
    return out;
}

inline DecompVerdict decide(const Polytope& p)
{
    return decide(p.structure(), &p.points().points());
}

/**
 * Re-validates a certificate. Returns false when a step fails, throws
 * std::invalid_argument when the certificate is malformed (indices out of
 * range, wrong seed size, missing coordinates for a K_{2,3} seed).
 */
inline bool replay(const Structure& s, const Certificate& cert, const std::vector<RVector>* coords = nullptr)
{
    const std::size_t n = s.num_vertices();
    const auto&       g = s.graph();
    auto vertex_ok = [&](std::size_t u) {
        if (u >= n)
            throw std::invalid_argument("certificate names vertex " + std::to_string(u) + " out of range");
    };
    auto facet_ok = [&](std::size_t f) {
        if (f >= s.num_facets())
            throw std::invalid_argument("certificate names facet " + std::to_string(f) + " out of range");
    };

    if (const auto* c = std::get_if<ShephardCertificate>(&cert)) {
        facet_ok(c->facet);
        const auto sf = shephard_facets(s);
        const std::size_t outside = n - s.comb().facet(c->facet).size();
        return std::find(sf.begin(), sf.end(), c->facet) != sf.end() && outside == c->outside && outside >= 2;
    }
    if (const auto* c = std::get_if<PyramidCertificate>(&cert)) {
        vertex_ok(c->apex);
        facet_ok(c->base_facet);
        const VertexSet& base = s.comb().facet(c->base_facet);
        return !base.contains(c->apex) && base.size() + 1 == n;
    }
    if (const auto* c = std::get_if<SmallCertificate>(&cert))
        return c->v == n && c->d == s.dim() && n <= 2 * s.dim() && !detail::is_prism_like(s);

    const auto& c = std::get<GrowthCertificate>(cert);
    const std::size_t want = c.kind == SeedKind::Edge ? 2 : c.kind == SeedKind::Triangle ? 3 : 5;
    if (c.seed.size() != want)
        throw std::invalid_argument("growth certificate seed has wrong size");
    if (c.facet_witness.size() != s.num_facets())
        throw std::invalid_argument("growth certificate witness length differs from facet count");
    for (auto u : c.seed)
        vertex_ok(u);
    VertexSet cur = VertexSet::from(c.seed);
    if (cur.size() != want)
        return false;
    const auto& q = c.seed;
    switch (c.kind) {
        case SeedKind::Edge:
            if (!g.adjacent(q[0], q[1]))
                return false;
            break;
        case SeedKind::Triangle:
            if (!g.adjacent(q[0], q[1]) || !g.adjacent(q[1], q[2]) || !g.adjacent(q[0], q[2]))
                return false;
            break;
        case SeedKind::K23: {
            if (!coords)
                throw std::invalid_argument("K_{2,3} seed needs coordinates");
            for (std::size_t hub = 0; hub < 2; ++hub)
                for (std::size_t spoke = 2; spoke < 5; ++spoke)
                    if (!g.adjacent(q[hub], q[spoke]))
                        return false;
            std::vector<RVector> pts;
            for (auto u : q)
                pts.push_back(coords->at(u));
            if (affine_dim(pts) < 3)
                return false;
            break;
        }
    }
    for (const auto& e : c.extensions) {
        vertex_ok(e.vertex);
        if (cur.contains(e.vertex) || e.attachments.size() < 2)
            return false;
        for (auto a : e.attachments) {
            vertex_ok(a);
            if (!cur.contains(a) || !g.adjacent(a, e.vertex))
                return false;
        }
        if (VertexSet::from(e.attachments).size() != e.attachments.size())
            return false;
        cur.insert(e.vertex);
    }
    for (std::size_t f = 0; f < s.num_facets(); ++f) {
        vertex_ok(c.facet_witness[f]);
        if (!cur.contains(c.facet_witness[f]) || !s.comb().facet(f).contains(c.facet_witness[f]))
            return false;
    }
    return true;
}

// ------------------------------------------------------------ serialisation

namespace detail {

inline std::string join(const std::vector<std::size_t>& v, char sep = ',')
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? std::string(1, sep) : std::string()) + std::to_string(v[i]);
    return s;
}

inline std::vector<std::size_t> split_indices(const std::string& s, char sep = ',')
{
    std::vector<std::size_t> out;
    if (s.empty())
        return out;
    std::stringstream ss(s);
    std::string       item;
    while (std::getline(ss, item, sep)) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed index list: '" + s + "'");
        out.push_back(std::stoul(item));
    }
    return out;
}

} // namespace detail

/**
 * One-line text forms:
 *   shephard facet=F outside=N
 *   pyramid apex=U base=F
 *   small v=V d=D
 *   growth seed=KIND:i,j,.. ext=u<a,b>;w<c,d,e> witness=x,y,..
 */
inline std::string to_string(const Certificate& cert)
{
    if (const auto* c = std::get_if<ShephardCertificate>(&cert))
        return "shephard facet=" + std::to_string(c->facet) + " outside=" + std::to_string(c->outside);
    if (const auto* c = std::get_if<PyramidCertificate>(&cert))
        return "pyramid apex=" + std::to_string(c->apex) + " base=" + std::to_string(c->base_facet);
    if (const auto* c = std::get_if<SmallCertificate>(&cert))
        return "small v=" + std::to_string(c->v) + " d=" + std::to_string(c->d);
    const auto& c = std::get<GrowthCertificate>(cert);
    std::string ext;
    for (std::size_t i = 0; i < c.extensions.size(); ++i)
        ext += (i ? ";" : "") + std::to_string(c.extensions[i].vertex) + "<" + detail::join(c.extensions[i].attachments) + ">";
    return std::string("growth seed=") + to_string(c.kind) + ":" + detail::join(c.seed) + " ext=" + ext
           + " witness=" + detail::join(c.facet_witness);
}

inline Certificate parse_certificate(const std::string& text)
{
    std::istringstream in(text);
    std::string        kind;
    in >> kind;
    std::map<std::string, std::string> kv;
    std::string                        tok;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("malformed certificate field: '" + tok + "'");
        kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    auto field = [&](const std::string& k) -> const std::string& {
        auto it = kv.find(k);
        if (it == kv.end())
            throw std::invalid_argument("certificate missing field '" + k + "'");
        return it->second;
    };
    auto one = [&](const std::string& k) {
        const auto v = detail::split_indices(field(k));
        if (v.size() != 1)
            throw std::invalid_argument("certificate field '" + k + "' must be a single index");
        return v.front();
    };
    if (kind == "shephard")
        return ShephardCertificate{one("facet"), one("outside")};
    if (kind == "pyramid")
        return PyramidCertificate{one("apex"), one("base")};
    if (kind == "small")
        return SmallCertificate{one("v"), one("d")};
    if (kind != "growth")
        throw std::invalid_argument("unknown certificate kind '" + kind + "'");

    GrowthCertificate c;
    const std::string& seed = field("seed");
    const auto         colon = seed.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("growth seed needs KIND:indices");
    const std::string sk = seed.substr(0, colon);
    if (sk == "edge")
        c.kind = SeedKind::Edge;
    else if (sk == "triangle")
        c.kind = SeedKind::Triangle;
    else if (sk == "k23")
        c.kind = SeedKind::K23;
    else
        throw std::invalid_argument("unknown seed kind '" + sk + "'");
    c.seed = detail::split_indices(seed.substr(colon + 1));
    std::stringstream ext(field("ext"));
    std::string       item;
    while (std::getline(ext, item, ';')) {
        const auto lt = item.find('<');
        if (lt == std::string::npos || item.back() != '>')
            throw std::invalid_argument("malformed extension: '" + item + "'");
        const auto v = detail::split_indices(item.substr(0, lt));
        if (v.size() != 1)
            throw std::invalid_argument("malformed extension: '" + item + "'");
        c.extensions.push_back({v.front(), detail::split_indices(item.substr(lt + 1, item.size() - lt - 2))});
    }
    c.facet_witness = detail::split_indices(field("witness"));
    return c;
}

} // namespace polycomb
