/**
 * Plain-text polytope files.
 *
 *     # comment
 *     dim 3
 *     vertices 4            (or "vertices 8 implicit" for incidence-only data)
 *     0 0 0
 *     1 0 0
 *     0 1 0
 *     0 0 1
 *     facets 4
 *     0 1 2
 *     ...
 *     provenance simplex(3)
 *
 * Sections appear in this order; facets and provenance are optional, except
 * that implicit-vertex files must list facets. Indices are 0-based and each
 * facet line is written in increasing order.
 */
#pragma once

#include <cstddef>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "factory.hpp"
#include "lattice.hpp"
#include "rational.hpp"

namespace polycomb {

class ParseError : public std::invalid_argument
{
    public:
        ParseError(std::size_t line, const std::string& what)
        : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line)
        {
        }
        std::size_t line() const noexcept { return line_; }

    private:
        std::size_t line_;
};

struct PolytopeFile
{
    std::size_t                           dim = 0;
    std::size_t                           num_vertices = 0;
    std::optional<std::vector<RVector>>   coordinates;
    std::optional<std::vector<VertexSet>> facets;
    std::string                           provenance;
};

inline PolytopeFile to_file(const Polytope& p)
{
    return {p.dim(), p.num_vertices(), p.points().points(), p.comb().facets(), p.provenance()};
}

inline PolytopeFile to_file(const CombPolytope& cp, std::string provenance = {})
{
    return {cp.dim(), cp.num_vertices(), std::nullopt, cp.facets(), std::move(provenance)};
}

inline std::string write_polytope_file(const PolytopeFile& f)
{
    std::ostringstream out;
    out << "dim " << f.dim << '\n';
    out << "vertices " << f.num_vertices << (f.coordinates ? "" : " implicit") << '\n';
    if (f.coordinates)
        for (const auto& x : *f.coordinates) {
            for (std::size_t i = 0; i < x.size(); ++i)
                out << (i ? " " : "") << to_string(x[i]);
            out << '\n';
        }
    if (f.facets) {
        out << "facets " << f.facets->size() << '\n';
        for (const auto& F : *f.facets) {
            bool first = true;
            for (auto i : F) {
                out << (first ? "" : " ") << i;
                first = false;
            }
            out << '\n';
        }
    }
    if (!f.provenance.empty())
        out << "provenance " << f.provenance << '\n';
    return out.str();
}

namespace detail {

inline std::vector<std::string> tokens(const std::string& line)
{
    std::istringstream       in(line);
    std::vector<std::string> out;
    std::string              t;
    while (in >> t)
        out.push_back(t);
    return out;
}

inline std::size_t parse_count(const std::string& s, std::size_t line)
{
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
        throw ParseError(line, "expected a non-negative integer, got '" + s + "'");
    return std::stoul(s);
}

} // namespace detail

inline PolytopeFile parse_polytope_file(const std::string& text)
{
    struct Line
    {
        std::size_t number;
        std::string body;
    };
    std::vector<Line>  lines;
    std::istringstream in(text);
    std::string        raw;
    for (std::size_t n = 1; std::getline(in, raw); ++n) {
        if (const auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        if (raw.find_first_not_of(" \t\r") != std::string::npos)
            lines.push_back({n, raw});
    }
    std::size_t pos = 0;
    auto next = [&](const char* what) -> const Line& {
        if (pos >= lines.size())
            throw ParseError(lines.empty() ? 1 : lines.back().number, std::string("unexpected end of file, expected ") + what);
        return lines[pos++];
    };

    PolytopeFile f;
    {
        const Line& l = next("'dim'");
        const auto  t = detail::tokens(l.body);
        if (t.size() != 2 || t[0] != "dim")
            throw ParseError(l.number, "expected 'dim <d>'");
        f.dim = detail::parse_count(t[1], l.number);
        if (f.dim == 0)
            throw ParseError(l.number, "dimension must be positive");
    }
    {
        const Line& l = next("'vertices'");
        const auto  t = detail::tokens(l.body);
        if (t.size() < 2 || t.size() > 3 || t[0] != "vertices" || (t.size() == 3 && t[2] != "implicit"))
            throw ParseError(l.number, "expected 'vertices <n>' or 'vertices <n> implicit'");
        f.num_vertices = detail::parse_count(t[1], l.number);
        if (f.num_vertices > VertexSet::kCapacity)
            throw ParseError(l.number, "too many vertices");
        if (t.size() == 2) {
            std::vector<RVector> coords;
            for (std::size_t i = 0; i < f.num_vertices; ++i) {
                const Line& c = next("a coordinate line");
                const auto  ct = detail::tokens(c.body);
                if (ct.size() != f.dim)
                    throw ParseError(c.number, "expected " + std::to_string(f.dim) + " coordinates");
                RVector x(f.dim);
                for (std::size_t k = 0; k < f.dim; ++k) {
                    try {
                        x[k] = parse_rational(ct[k]);
                    } catch (const std::invalid_argument& e) {
                        throw ParseError(c.number, e.what());
                    }
                }
                coords.push_back(std::move(x));
            }
            f.coordinates = std::move(coords);
        }
    }
    if (pos < lines.size() && detail::tokens(lines[pos].body).front() == "facets") {
        const Line& l = next("'facets'");
        const auto  t = detail::tokens(l.body);
        if (t.size() != 2)
            throw ParseError(l.number, "expected 'facets <m>'");
        const std::size_t      m = detail::parse_count(t[1], l.number);
        std::vector<VertexSet> facets;
        for (std::size_t i = 0; i < m; ++i) {
            const Line& fl = next("a facet line");
            VertexSet   F;
            for (const auto& tok : detail::tokens(fl.body)) {
                const std::size_t idx = detail::parse_count(tok, fl.number);
                if (idx >= f.num_vertices)
                    throw ParseError(fl.number, "vertex index " + tok + " out of range");
                if (F.contains(idx))
                    throw ParseError(fl.number, "repeated vertex index " + tok);
                F.insert(idx);
            }
            facets.push_back(F);
        }
        f.facets = std::move(facets);
    }
    if (pos < lines.size()) {
        const Line& l = next("'provenance'");
        const auto  sp = l.body.find_first_not_of(" \t");
        const auto  body = l.body.substr(sp);
        if (body.rfind("provenance", 0) != 0)
            throw ParseError(l.number, "unexpected content '" + body + "'");
        const auto t = detail::tokens(body.substr(10));
        if (t.size() != 1)
            throw ParseError(l.number, "provenance must be a single recipe token");
        f.provenance = t.front();
    }
    if (pos < lines.size())
        throw ParseError(lines[pos].number, "trailing content after provenance");
    if (!f.coordinates && !f.facets)
        throw ParseError(lines.back().number, "implicit vertices require a facet list");
    return f;
}

inline std::string read_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline PolytopeFile load_polytope_file(const std::string& path)
{
    return parse_polytope_file(read_text(path));
}

inline void save_polytope_file(const PolytopeFile& f, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot write '" + path + "'");
    out << write_polytope_file(f);
}

/** Geometric polytope from a file with coordinates; listed facets must match the hull. */
inline Polytope polytope_from_file(const PolytopeFile& f)
{
    if (!f.coordinates)
        throw std::invalid_argument("file has no coordinates");
    Polytope p(PointSet(f.dim, *f.coordinates), f.provenance);
    if (f.facets) {
        const std::set<VertexSet> listed(f.facets->begin(), f.facets->end());
        const std::set<VertexSet> computed(p.comb().facets().begin(), p.comb().facets().end());
        if (listed.size() != f.facets->size() || listed != computed)
            throw std::invalid_argument("listed facets disagree with the convex hull of the coordinates");
    }
    return p;
}

/** Combinatorial structure from either section; may throw NotPolytopal. */
inline CombPolytope comb_from_file(const PolytopeFile& f)
{
    if (f.coordinates)
        return polytope_from_file(f).comb();
    return CombPolytope(f.dim, f.num_vertices, *f.facets);
}

} // namespace polycomb
