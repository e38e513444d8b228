// polycomb: build, inspect and verify exact polytopes from the command line.
//
// Exit status: 0 success (or isomorphic), 1 verification failure (or not
// isomorphic), 2 bad input.

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polycomb/census.hpp"
#include "polycomb/decomp.hpp"
#include "polycomb/factory.hpp"
#include "polycomb/io.hpp"
#include "polycomb/metrics.hpp"
#include "polycomb/verify.hpp"

using namespace polycomb;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

struct Args
{
    std::string                family;
    std::optional<std::size_t> dim, m, n, k, which;
    std::string                epsilon = "1/2";
    std::string                recipe;
    std::string                out;
    std::string                format = "human";
    std::string                in, in_b;
    std::size_t                dmin = 3, dmax = 8;
    std::string                fixtures;
};

std::string dim_arg(const Args& a)
{
    if (!a.dim)
        throw std::invalid_argument("--dim is required for family '" + a.family + "'");
    return std::to_string(*a.dim);
}

std::string need(const std::optional<std::size_t>& v, const char* flag)
{
    if (!v)
        throw std::invalid_argument(std::string(flag) + " is required");
    return std::to_string(*v);
}

/// Family name plus flags, or a literal recipe, as a recipe string.
std::string recipe_from(const Args& a)
{
    if (!a.recipe.empty())
        return a.recipe;
    std::string f;
    for (char c : a.family)
        f += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (f.size() > 2 && f.substr(f.size() - 2) == "_d")
        f.resize(f.size() - 2);
    if (f == "delta")
        return "delta(" + need(a.m, "--m") + "," + need(a.n, "--n") + ")";
    if (f == "triplex" || f == "m")
        return "triplex(" + need(a.k, "--k") + "," + std::to_string(std::stoul(dim_arg(a)) - std::stoul(need(a.k, "--k"))) + ")";
    if (f == "table1") {
        const std::string w = a.which ? std::to_string(*a.which) : "1";
        return w == "1" ? "table1(1," + a.epsilon + ")" : "table1(" + w + ")";
    }
    if (f.empty())
        throw std::invalid_argument("a family name or --recipe is required");
    return f + "(" + dim_arg(a) + ")";
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f)
        throw std::invalid_argument("cannot write '" + out + "'");
    f << text;
}

int cmd_build(const Args& a)
{
    const Polytope p = build(recipe_from(a));
    emit(write_polytope_file(to_file(p)), a.out);
    if (!a.out.empty() && a.out != "-")
        std::cerr << p.provenance() << ": " << p.num_vertices() << " vertices, " << p.num_edges() << " edges, "
                  << p.num_facets() << " facets\n";
    return kOk;
}

int cmd_hull(const Args& a)
{
    PolytopeFile f = load_polytope_file(a.in);
    if (!f.coordinates)
        throw std::invalid_argument("hull needs coordinates");
    const Polytope p = Polytope::hull_of(PointSet(f.dim, *f.coordinates), f.provenance);
    emit(write_polytope_file(to_file(p)), a.out);
    return kOk;
}

std::string join_list(const std::vector<std::size_t>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

int cmd_analyze(const Args& a)
{
    const PolytopeFile f = load_polytope_file(a.in);
    std::optional<Polytope> geom;
    if (f.coordinates)
        geom.emplace(polytope_from_file(f));
    const Structure     s(geom ? geom->comb() : comb_from_file(f));
    const ExcessProfile xp = excess_profile(s);
    ReferenceCatalog    cat;
    const auto          census = facet_census(s, cat);
    const DecompVerdict verdict = geom ? decide(*geom) : decide(s);
    const auto          fvec = s.lattice().f_vector();

    std::vector<std::pair<std::string, std::string>> rows;
    std::string fv;
    for (std::size_t i = 0; i < fvec.size(); ++i)
        fv += (i ? " " : "") + std::to_string(fvec[i]);
    rows.emplace_back("dim", std::to_string(s.dim()));
    rows.emplace_back("vertices", std::to_string(s.num_vertices()));
    rows.emplace_back("edges", std::to_string(s.num_edges()));
    rows.emplace_back("facets", std::to_string(s.num_facets()));
    rows.emplace_back("f-vector", fv);
    rows.emplace_back("excess", std::to_string(xp.total));
    rows.emplace_back("nonsimple", std::to_string(xp.nonsimple.size()) + (xp.nonsimple.empty() ? "" : " (" + join_list(xp.nonsimple) + ")"));
    rows.emplace_back("missing-edges", std::to_string(missing_edges(s)));
    rows.emplace_back("type", tag_name(canonical_tag(s, cat)));
    rows.emplace_back("facet-census", census_string(census));
    rows.emplace_back("decomposability", to_string(verdict.verdict));
    if (verdict.certificate)
        rows.emplace_back("certificate", to_string(*verdict.certificate));
    if (!f.provenance.empty())
        rows.emplace_back("provenance", f.provenance);

    std::ostringstream os;
    for (const auto& [k, v] : rows)
        os << k << (a.format == "machine" ? "\t" : ": ") << v << '\n';
    emit(os.str(), a.out);
    return kOk;
}

int cmd_iso(const Args& a)
{
    const CombPolytope x = comb_from_file(load_polytope_file(a.in));
    const CombPolytope y = comb_from_file(load_polytope_file(a.in_b));
    const auto         w = find_isomorphism(x, y);
    if (!w) {
        std::cout << "not isomorphic\n";
        return kFail;
    }
    std::cout << "isomorphic\n";
    for (std::size_t i = 0; i < w->size(); ++i)
        std::cout << i << " -> " << (*w)[i] << '\n';
    return kOk;
}

int cmd_decomp(const Args& a)
{
    const PolytopeFile f = a.in.empty() ? to_file(build(recipe_from(a))) : load_polytope_file(a.in);
    DecompVerdict      v;
    bool               replayed = false;
    if (f.coordinates) {
        const Polytope p = polytope_from_file(f);
        v = decide(p);
        replayed = v.certificate && replay(p.structure(), *v.certificate, &p.points().points());
    } else {
        const Structure s(comb_from_file(f));
        v = decide(s);
        replayed = v.certificate && replay(s, *v.certificate);
    }
    std::cout << "verdict: " << to_string(v.verdict) << '\n';
    std::string fired;
    for (auto r : v.fired)
        fired += (fired.empty() ? "" : ",") + std::string(to_string(r));
    std::cout << "fired: " << (fired.empty() ? "none" : fired) << '\n';
    if (v.certificate)
        std::cout << "certificate: " << to_string(*v.certificate) << "\nreplay: " << (replayed ? "ok" : "rejected") << '\n';
    return v.contradiction || (v.certificate && !replayed) ? kFail : kOk;
}

int cmd_verify(const Args& a)
{
    VerifyOptions o;
    o.dmin = a.dmin;
    o.dmax = a.dmax;
    if (!a.fixtures.empty())
        o.fixtures_dir = a.fixtures;
    Verifier          v(o);
    const Report&     r = v.run_all();
    std::ostringstream os;
    if (a.format == "machine")
        r.write_machine(os);
    else
        r.write_human(os);
    emit(os.str(), a.out);
    if (!r.all_pass())
        for (const auto& e : r.sorted())
            if (!e.informational && !e.pass)
                std::cerr << "FAIL " << e.claim << " [" << e.params << "]\n";
    return r.all_pass() ? kOk : kFail;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact polytope constructions, face lattices and verification"};
    app.require_subcommand(1);
    Args a;

    auto format = [&](CLI::App* c) {
        c->add_option("--format", a.format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
    };
    auto family_flags = [&](CLI::App* c) {
        c->add_option("-d,--dim", a.dim, "dimension");
        c->add_option("--m", a.m, "first Delta parameter");
        c->add_option("--n", a.n, "second Delta parameter");
        c->add_option("--k", a.k, "triplex prism dimension");
        c->add_option("--which", a.which, "table1 model (1 or 2)");
        c->add_option("--epsilon", a.epsilon, "table1 model 1 parameter, 0 < eps < 1");
        c->add_option("--recipe", a.recipe, "recipe expression, e.g. truncate_vertex(triplex(3,2),0)");
    };

    auto* build_cmd = app.add_subcommand("build", "construct a polytope and write it");
    build_cmd->add_option("family", a.family, "simplex, prism, cube, cross, triplex, delta, a, a_prism, b, c, sigma, j, n, pentasm, table1");
    family_flags(build_cmd);
    build_cmd->add_option("-o,--out", a.out, "output file (default stdout)");

    auto* analyze_cmd = app.add_subcommand("analyze", "f-vector, excess, facet census and decomposability");
    analyze_cmd->add_option("file", a.in, "polytope file")->required();
    analyze_cmd->add_option("-o,--out", a.out);
    format(analyze_cmd);

    auto* hull_cmd = app.add_subcommand("hull", "convex hull of the coordinates in a file");
    hull_cmd->add_option("file", a.in, "polytope file")->required();
    hull_cmd->add_option("-o,--out", a.out);

    auto* iso_cmd = app.add_subcommand("iso", "combinatorial isomorphism test");
    iso_cmd->add_option("a", a.in)->required();
    iso_cmd->add_option("b", a.in_b)->required();

    auto* decomp_cmd = app.add_subcommand("decomp", "decomposability verdict with certificate");
    decomp_cmd->add_option("file", a.in, "polytope file (or use a family)");
    decomp_cmd->add_option("--family", a.family);
    family_flags(decomp_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
    verify_cmd->add_option("--dmin", a.dmin)->check(CLI::Range(3, 9));
    verify_cmd->add_option("--dmax", a.dmax)->check(CLI::Range(3, 9));
    verify_cmd->add_option("--fixtures", a.fixtures, "directory of golden .poly files to check");
    verify_cmd->add_option("-o,--out", a.out);
    format(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }

    try {
        if (*build_cmd)
            return cmd_build(a);
        if (*analyze_cmd)
            return cmd_analyze(a);
        if (*hull_cmd)
            return cmd_hull(a);
        if (*iso_cmd)
            return cmd_iso(a);
        if (*decomp_cmd)
            return cmd_decomp(a);
        if (*verify_cmd)
            return cmd_verify(a);
    } catch (const NotPolytopal& e) {
        std::cerr << "not polytopal: " << e.what() << '\n';
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    }
    return kInput;
}
