/**
 * Verification harness: recomputes every claimed count, census,
 * isomorphism and decomposability verdict and records one report entry per
 * claim instance. Criteria are numbered 1..10; claim ids carry the criterion
 * as a "cNN." prefix, notes use "nNN.".
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "census.hpp"
#include "decomp.hpp"
#include "factory.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "metrics.hpp"

namespace polycomb {

struct ReportEntry
{
    std::string claim;
    std::string locus;
    std::string params;
    std::string expected;
    std::string actual;
    bool        pass = true;
    bool        informational = false;
};

class Report
{
    public:
        void add(ReportEntry e) { entries_.push_back(std::move(e)); }

        const std::vector<ReportEntry>& entries() const noexcept { return entries_; }

        std::size_t failures() const
        {
            return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(),
                                                          [](const ReportEntry& e) { return !e.informational && !e.pass; }));
        }
        std::size_t checked() const
        {
            return static_cast<std::size_t>(
                std::count_if(entries_.begin(), entries_.end(), [](const ReportEntry& e) { return !e.informational; }));
        }
        bool all_pass() const { return failures() == 0; }

        /// Entries ordered by claim id; insertion order is kept within a claim.
        std::vector<ReportEntry> sorted() const
        {
            auto out = entries_;
            std::stable_sort(out.begin(), out.end(), [](const ReportEntry& a, const ReportEntry& b) { return a.claim < b.claim; });
            return out;
        }

        static const char* status(const ReportEntry& e) { return e.informational ? "INFO" : e.pass ? "PASS" : "FAIL"; }

        void write_machine(std::ostream& os) const
        {
            for (const auto& e : sorted())
                os << e.claim << '\t' << e.locus << '\t' << e.params << '\t' << e.expected << '\t' << e.actual << '\t'
                   << status(e) << '\n';
        }

        void write_human(std::ostream& os) const
        {
            for (const auto& e : sorted()) {
                os << status(e) << "  " << e.claim;
                if (!e.params.empty())
                    os << " [" << e.params << "]";
                os << "  " << e.locus << "\n      expected " << e.expected << "\n      actual   " << e.actual << '\n';
            }
            os << checked() << " claims checked, " << failures() << " failed, " << (entries_.size() - checked())
               << " notes\n";
        }

    private:
        std::vector<ReportEntry> entries_;
};

struct VerifyOptions
{
    std::size_t                dmin = 3;
    std::size_t                dmax = 8;
    std::optional<std::string> fixtures_dir;
};

/** Vertex-facet incidences as printed for the two 4-polytopes with 8 vertices and 18 edges (1-based). */
inline CombPolytope table1_column(int which)
{
    static const std::vector<std::vector<int>> col1 = {{1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 7, 8}, {1, 2, 5, 6, 7, 8}, {3, 4, 5, 6, 7},
                                                       {2, 4, 6, 8},       {1, 3, 5, 7},       {4, 6, 7, 8}};
    static const std::vector<std::vector<int>> col2 = {{1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 7, 8}, {1, 2, 5, 6, 7}, {1, 3, 5, 7, 8},
                                                       {3, 4, 5, 6, 8},    {2, 4, 6, 7, 8},    {5, 6, 7, 8}};
    if (which != 1 && which != 2)
        throw std::invalid_argument("table1_column: which must be 1 or 2");
    std::vector<VertexSet> facets;
    for (const auto& f : which == 1 ? col1 : col2) {
        VertexSet s;
        for (int i : f)
            s.insert(static_cast<std::size_t>(i - 1));
        facets.push_back(s);
    }
    return CombPolytope(4, 8, std::move(facets));
}

class Verifier
{
    public:
        explicit Verifier(VerifyOptions opts) : opts_(std::move(opts))
        {
            if (opts_.dmin < 3 || opts_.dmin > opts_.dmax || opts_.dmax > 9)
                throw std::invalid_argument("verify range must satisfy 3 <= dmin <= dmax <= 9");
        }

        const Report& report() const noexcept { return report_; }

        /// Runs one criterion (1..10); returns whether all of its claims passed.
        bool run_criterion(int k)
        {
            const std::size_t before = report_.failures();
            switch (k) {
                case 1: minimiser_counts(); break;
                case 2: minimiser_censuses(); break;
                case 3: sporadic_minimisers(); break;
                case 4: family_signatures(); break;
                case 5: table1_models(); break;
                case 6: isomorphism_identities(); break;
                case 7: property_suite(); break;
                case 8: truncation_arithmetic(); break;
                case 9: excess_d_minus_2(); break;
                case 10: decomposability(); break;
                default: throw std::invalid_argument("criterion must be 1..10");
            }
            return report_.failures() == before;
        }

        void run_notes()
        {
            common_structure_note();
            n_facet_note();
            for (std::size_t d = opts_.dmin; d <= opts_.dmax; ++d) {
                const long D = d_l(d), bound = lbt_bound(2 * D + 2, D);
                add("n03.lbt-2d+2", "simplicial d-polytopes with 2d+2 vertices exceed d^2+2d-3 edges", d_param(d),
                    "> " + std::to_string(D * D + 2 * D - 3), std::to_string(bound), bound > D * D + 2 * D - 3);
            }
            report_.add({"n03.lbt-display", "edge bound for simplicial case with 2d+2 vertices", "",
                         "d(2d+2) - C(d+1,2) = (3d^2+3d)/2",
                         "the displayed factor (2d+3) gives (3d^2+5d)/2; it reads as a typo for (2d+2), and the conclusion holds with either",
                         true, true});
        }

        void run_fixtures()
        {
            if (!opts_.fixtures_dir)
                return;
            namespace fs = std::filesystem;
            std::vector<fs::path> files;
            for (const auto& entry : fs::directory_iterator(*opts_.fixtures_dir))
                if (entry.path().extension() == ".poly")
                    files.push_back(entry.path());
            std::sort(files.begin(), files.end());
            if (files.empty())
                add("fx.present", "golden fixtures", *opts_.fixtures_dir, "at least one .poly file", "none", false);
            for (const auto& path : files)
                check_fixture(path);
        }

        /// Criteria 1..10, the notes and (when configured) the fixture check.
        const Report& run_all()
        {
            for (int k = 1; k <= 10; ++k)
                run_criterion(k);
            run_notes();
            run_fixtures();
            return report_;
        }

    private:
        // ------------------------------------------------------------ helpers

        const Polytope& get(const std::string& recipe)
        {
            auto it = cache_.find(recipe);
            if (it == cache_.end())
                it = cache_.emplace(recipe, build(recipe)).first;
            return it->second;
        }

        static std::string d_param(std::size_t d) { return "d=" + std::to_string(d); }

        static std::string triple(long v, long e, long xi)
        {
            return "(v,e,xi)=(" + std::to_string(v) + "," + std::to_string(e) + "," + std::to_string(xi) + ")";
        }

        static std::string triple(const Polytope& p)
        {
            return triple(static_cast<long>(p.num_vertices()), static_cast<long>(p.num_edges()), p.excess());
        }

        void add(std::string claim, std::string locus, std::string params, std::string expected, std::string actual, bool pass)
        {
            report_.add({std::move(claim), std::move(locus), std::move(params), std::move(expected), std::move(actual), pass, false});
        }

        void add_eq(std::string claim, std::string locus, std::string params, const std::string& expected, const std::string& actual)
        {
            add(std::move(claim), std::move(locus), std::move(params), expected, actual, expected == actual);
        }

        std::string canonical_name(const Polytope& p) { return tag_name(canonical_tag(p.structure(), catalog_)); }

        std::string census_of(const Polytope& p) { return census_string(facet_census(p.structure(), catalog_)); }

        /// Census string of an expected multiset given as (recipe, count), named as each recipe classifies.
        std::string expected_census(const std::vector<std::pair<std::string, int>>& parts)
        {
            std::map<std::string, int> m;
            for (const auto& [recipe, count] : parts)
                if (count > 0)
                    m[canonical_name(get(recipe))] += count;
            return census_string(m);
        }

        static std::string rec(const char* name, std::size_t d) { return std::string(name) + "(" + std::to_string(d) + ")"; }
        static std::string rec(const char* name, std::size_t a, std::size_t b)
        {
            return std::string(name) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        }

        long d_l(std::size_t d) const { return static_cast<long>(d); }

        // ----------------------------------------------------------- criteria

        void minimiser_counts()
        {
            for (std::size_t d = opts_.dmin; d <= opts_.dmax; ++d) {
                const long        D = d_l(d);
                const std::string want = triple(2 * D + 2, D * D + 2 * D - 3, 2 * D - 6);
                add_eq("c01.A.counts", "minimiser A_d with 2d+2 vertices", d_param(d), want, triple(get(rec("a", d))));
                add_eq("c01.B.counts", "minimiser B_d with 2d+2 vertices", d_param(d), want, triple(get(rec("b", d))));
                const MinEdges m = min_edges_2dplus2(D);
                const std::string formula = std::to_string(m.value) + (m.special ? " (special)" : "");
                add_eq("c01.min-edges", "minimum edges for 2d+2 vertices", d_param(d),
                       d == 5 ? "30 (special)" : std::to_string(D * D + 2 * D - 3), formula);
            }
        }

        void minimiser_censuses()
        {
            for (std::size_t d = std::max<std::size_t>(4, opts_.dmin); d <= opts_.dmax; ++d) {
                const std::string prism_r = rec("prism", d - 1), m2 = rec("triplex", 2, d - 3), simp = rec("simplex", d - 1);
                add_eq("c02.A.census", "facets of A_d", d_param(d),
                       expected_census({{rec("a", d - 1), static_cast<int>(d - 3)}, {prism_r, 4}, {m2, 2}}),
                       census_of(get(rec("a", d))));
                add_eq("c02.B.census", "facets of B_d", d_param(d),
                       expected_census({{rec("b", d - 1), static_cast<int>(d - 3)},
                                        {simp, 2},
                                        {prism_r, 1},
                                        {m2, 1},
                                        {rec("pentasm", d - 1), 2}}),
                       census_of(get(rec("b", d))));
            }
        }

        void sporadic_minimisers()
        {
            add_eq("c03.C4.counts", "sporadic minimiser C_4", d_param(4), "(v,e)=(10,21)", ve(get("c(4)")));
            add_eq("c03.Sigma4.counts", "sporadic minimiser Sigma_4", d_param(4), "(v,e)=(10,21)", ve(get("sigma(4)")));
            add_eq("c03.pyramid-delta24.counts", "sporadic minimiser pyramid over Delta_{2,4}", d_param(7),
                   triple(16, 60, 8), triple(get("pyramid(delta(2,4),1)")));
            const Polytope& d23 = get("delta(2,3)");
            add_eq("c03.delta23.counts", "Delta_{2,3} with 2d+2 vertices at d=5", d_param(5), triple(12, 30, 0), triple(d23));
            add("c03.delta23.below-formula", "Delta_{2,3} beats d^2+2d-3 at d=5", d_param(5), "30 < 32",
                std::to_string(d23.num_edges()) + " < " + std::to_string(5 * 5 + 2 * 5 - 3), d23.num_edges() < 32);
        }

        std::string ve(const Polytope& p) const
        {
            return "(v,e)=(" + std::to_string(p.num_vertices()) + "," + std::to_string(p.num_edges()) + ")";
        }

        static std::string sig(std::size_t v, long xi, std::size_t nonsimple)
        {
            return "v=" + std::to_string(v) + " xi=" + std::to_string(xi) + " nonsimple=" + std::to_string(nonsimple);
        }

        static std::string sig(const Polytope& p) { return sig(p.num_vertices(), p.excess(), p.nonsimple_vertices().size()); }

        static std::string sig_no_count(const Polytope& p)
        {
            return "v=" + std::to_string(p.num_vertices()) + " xi=" + std::to_string(p.excess());
        }

        void family_signatures()
        {
            for (std::size_t d = opts_.dmin; d <= opts_.dmax; ++d) {
                const long D = d_l(d);
                add_eq("c04.pentasm.signature", "pentasm: 2d+1 vertices, d^2+d-1 edges", d_param(d),
                       triple(2 * D + 1, D * D + D - 1, D - 2), triple(get(rec("pentasm", d))));
                add_eq("c04.Sigma.signature", "Sigma_d: 3d-2 vertices, one nonsimple vertex", d_param(d),
                       sig(3 * d - 2, D - 2, 1), sig(get(rec("sigma", d))));
                add_eq("c04.N.signature", "N_d: 3d-2 vertices, one nonsimple vertex", d_param(d), sig(3 * d - 2, D - 2, 1),
                       sig(get(rec("n", d))));
                add_eq("c04.C.signature", "C_d: 3d-2 vertices, excess d-2", d_param(d),
                       "v=" + std::to_string(3 * d - 2) + " xi=" + std::to_string(D - 2), sig_no_count(get(rec("c", d))));
                add_eq("c04.J.signature", "J_d: simple with 3d-1 vertices", d_param(d), sig(3 * d - 1, 0, 0),
                       sig(get(rec("j", d))));
                add_eq("c04.J.census", "facets of J_d", d_param(d),
                       expected_census({{rec("j", d - 1), static_cast<int>(d - 1)}, {rec("prism", d - 1), 2}, {rec("simplex", d - 1), 2}}),
                       census_of(get(rec("j", d))));
            }
            const std::size_t dlow = opts_.dmin == 3 ? 1 : opts_.dmin;
            for (std::size_t d = dlow; d <= opts_.dmax; ++d)
                for (std::size_t k = 1; k <= d; ++k) {
                    const Polytope& m = get(rec("triplex", k, d - k));
                    const long      want = phi(d_l(d + k), d_l(d));
                    add_eq("c04.triplex.phi", "triplex M_{k,d-k} has phi(d+k,d) edges",
                           "k=" + std::to_string(k) + " d=" + std::to_string(d), "e=" + std::to_string(want),
                           "e=" + std::to_string(m.num_edges()));
                }
        }

        void table1_models()
        {
            for (int which : {1, 2}) {
                const std::string recipe = which == 1 ? "table1(1,1/2)" : "table1(2)";
                const std::string id = "c05.table1-" + std::to_string(which);
                const Polytope&   p = get(recipe);
                add_eq(id + ".counts", "4-polytope with 8 vertices and 18 edges", recipe, "(v,e)=(8,18)", ve(p));
                const bool iso = isomorphic(p.comb(), table1_column(which));
                add(id + ".incidences", "vertex-facet incidences of the tabulated column", recipe, "isomorphic",
                    iso ? "isomorphic" : "not isomorphic", iso);
                add_eq(id + ".nonsimple", "nonsimple vertex count", recipe, "nonsimple=" + std::to_string(which == 1 ? 3 : 4),
                       "nonsimple=" + std::to_string(p.nonsimple_vertices().size()));
            }
        }

        void iso_claim(const std::string& id, const std::string& locus, const std::string& a, const std::string& b, bool want)
        {
            const bool iso = isomorphic(get(a).comb(), get(b).comb());
            add(id, locus, a + " vs " + b, want ? "isomorphic" : "not isomorphic", iso ? "isomorphic" : "not isomorphic",
                iso == want);
        }

        void isomorphism_identities()
        {
            iso_claim("c06.B3-J3", "B_3 coincides with J_3", "b(3)", "j(3)", true);
            iso_claim("c06.N3-pentasm3", "N_3 is a pentasm", "n(3)", "pentasm(3)", true);
            iso_claim("c06.N4-B4", "N_4 equals B_4", "n(4)", "b(4)", true);
            for (std::size_t d = opts_.dmin; d <= opts_.dmax; ++d)
                iso_claim("c06.A-not-B", "A_d and B_d are distinct", rec("a", d), rec("b", d), false);
            for (std::size_t d = std::max<std::size_t>(4, opts_.dmin); d <= opts_.dmax; ++d)
                iso_claim("c06.A-two-ways", "A_d by truncation equals the prism over M_{2,d-3}", rec("a", d), rec("a_prism", d), true);
        }

        /// Every polytope built so far in this run, plus the basic shapes for each dimension.
        void property_suite()
        {
            for (std::size_t d = opts_.dmin; d <= opts_.dmax; ++d) {
                for (const char* f : {"simplex", "prism", "a", "b", "c", "sigma", "j", "n", "pentasm"})
                    get(rec(f, d));
                for (std::size_t k = 2; k < d; ++k)
                    get(rec("triplex", k, d - k));
                for (std::size_t n = 1; 2 * n <= d; ++n)
                    get(rec("delta", d - n, n));
                if (d <= 6)
                    get(rec("cross", d));
            }
            get("table1(1,1/2)");
            get("table1(2)");
            get("pyramid(delta(2,4),1)");
            get("delta(2,3)");
            for (const auto& [recipe, p] : cache_) {
                const LemmaReport lr = check_lemma_suite(p.structure());
                std::map<std::string, std::pair<std::size_t, std::size_t>> per; // lemma -> (instances, failures)
                for (const auto& c : lr.checks) {
                    auto& slot = per[c.lemma];
                    ++slot.first;
                    slot.second += c.pass ? 0 : 1;
                }
                for (const auto& [lemma, counts] : per)
                    add("c07." + lemma, "necessary condition evaluated on a constructed polytope", recipe, "0 failures",
                        std::to_string(counts.second) + " failures of " + std::to_string(counts.first), counts.second == 0);
            }
        }

        static std::size_t first_simple(const Polytope& p)
        {
            const auto s = p.simple_vertices();
            if (s.empty())
                throw std::logic_error("no simple vertex on " + p.provenance());
            return s.front();
        }

        void truncation_arithmetic()
        {
            for (std::size_t d = opts_.dmin; d <= opts_.dmax; ++d) {
                const long D = d_l(d);
                std::vector<std::string> bases{rec("simplex", d), rec("prism", d), rec("triplex", 3, d - 3)};
                std::vector<std::string> edge_bases{rec("prism", d), rec("triplex", d - 1, 1)};
                if (d >= 4) {
                    bases.push_back(rec("delta", d - 2, 2));
                    edge_bases.push_back(rec("delta", d - 2, 2));
                }
                for (const auto& base : bases) {
                    const Polytope&   p = get(base);
                    const std::size_t u = first_simple(p);
                    const std::string r = "truncate_vertex(" + base + "," + std::to_string(u) + ")";
                    const Polytope&   q = get(r);
                    add_eq("c08.truncate-vertex", "truncating a simple vertex", r,
                           "(dv,de,dxi)=(" + std::to_string(D - 1) + "," + std::to_string(binomial(D, 2)) + ",0)",
                           "(dv,de,dxi)=(" + std::to_string(d_l(q.num_vertices()) - d_l(p.num_vertices())) + ","
                               + std::to_string(d_l(q.num_edges()) - d_l(p.num_edges())) + ","
                               + std::to_string(q.excess() - p.excess()) + ")");
                }
                for (const auto& base : edge_bases) {
                    const Polytope& p = get(base);
                    const auto      e = detail::first_simple_edge(p);
                    const std::string r =
                        "truncate_edge(" + base + "," + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
                    const Polytope& q = get(r);
                    add_eq("c08.truncate-edge", "truncating a simple edge", r,
                           "(dv,dxi)=(" + std::to_string(2 * D - 4) + ",0)",
                           "(dv,dxi)=(" + std::to_string(d_l(q.num_vertices()) - d_l(p.num_vertices())) + ","
                               + std::to_string(q.excess() - p.excess()) + ")");
                }
            }
            for (std::size_t d = std::max<std::size_t>(5, opts_.dmin); d <= opts_.dmax; ++d)
                for (std::size_t k = 2; k + 1 <= d; ++k) {
                    const long        D = d_l(d), K = d_l(k);
                    const std::string base = rec("triplex", k, d - k);
                    const std::string r = "truncate_vertex(" + base + "," + std::to_string(first_simple(get(base))) + ")";
                    const Polytope&   q = get(r);
                    const long        v = 2 * D + K - 1;
                    add_eq("c08.f-witness", "truncated triplex attains the excess upper bound",
                           "k=" + std::to_string(k) + " d=" + std::to_string(d),
                           "v=" + std::to_string(v) + " xi=" + std::to_string((K - 1) * (D - K)) + " bound="
                               + std::to_string(f_upper(v, D)),
                           "v=" + std::to_string(q.num_vertices()) + " xi=" + std::to_string(q.excess()) + " bound="
                               + std::to_string(f_upper(d_l(q.num_vertices()), D)));
                }
        }

        void excess_d_minus_2()
        {
            for (std::size_t d = std::max<std::size_t>(4, opts_.dmin); d <= opts_.dmax; ++d) {
                const long D = d_l(d);
                auto claim = [&](const char* label, const std::string& recipe, long v) {
                    add_eq(std::string("c09.") + label, "polytope with excess exactly d-2", recipe + " " + d_param(d),
                           "v=" + std::to_string(v) + " xi=" + std::to_string(D - 2), sig_no_count(get(recipe)));
                };
                claim("M2", rec("triplex", 2, d - 2), D + 2);
                claim("M(d-1,1)", rec("triplex", d - 1, 1), 2 * D - 1);
                claim("pentasm", rec("pentasm", d), 2 * D + 1);
                claim("C", rec("c", d), 3 * D - 2);
                claim("Sigma", rec("sigma", d), 3 * D - 2);
                claim("N", rec("n", d), 3 * D - 2);
            }
        }

        void verdict_claim(const std::string& recipe, Verdict want)
        {
            const Polytope&     p = get(recipe);
            const DecompVerdict v = decide(p);
            add_eq("c10.verdict", "decomposability verdict", recipe, to_string(want), to_string(v.verdict));
            bool        ok = false;
            std::string what = "no certificate";
            if (v.certificate) {
                try {
                    ok = replay(p.structure(), parse_certificate(to_string(*v.certificate)), &p.points().points());
                    what = to_string(*v.certificate);
                } catch (const std::exception& e) {
                    what = std::string("malformed: ") + e.what();
                }
            }
            add("c10.replay", "certificate re-validates after a text round trip", recipe, "replay accepts", ok ? what : "rejected: " + what,
                ok);
            std::string fired;
            for (auto r : v.fired)
                fired += (fired.empty() ? "" : ",") + std::string(to_string(r));
            add("c10.consistent", "no instance is both decomposable and indecomposable", recipe, "no contradiction",
                (v.contradiction ? "contradiction: " : "fired: ") + fired, !v.contradiction);
        }

        void decomposability()
        {
            for (std::size_t d = opts_.dmin; d <= opts_.dmax; ++d) {
                verdict_claim(rec("prism", d), Verdict::Decomposable);
                for (std::size_t n = 1; 2 * n <= d; ++n)
                    verdict_claim(rec("delta", d - n, n), Verdict::Decomposable);
                verdict_claim(rec("a", d), Verdict::Decomposable);
                verdict_claim(rec("b", d), Verdict::Decomposable);
                verdict_claim(rec("simplex", d), Verdict::Indecomposable);
                for (std::size_t k = 1; k < d; ++k)
                    verdict_claim(rec("triplex", k, d - k), Verdict::Indecomposable);
            }
            report_.add({"c10.uniqueness", "A_d and B_d are the only minimisers", "",
                         "classification over all polytopes", "not reproducible by construction; constructive content is covered by c01-c03",
                         true, true});
        }

        // --------------------------------------------------------------- notes

        /**
         * A_d and B_d as the hull of two disjoint (d-4)-simplex faces and a
         * simple 3-face (cube or 5-wedge), with the 3-face split into Q1, Q2
         * so that S_i only meets Q_i.
         */
        bool common_structure(const Polytope& p, const CombPolytope& three_face)
        {
            const Structure& s = p.structure();
            const auto&      lat = s.lattice();
            const std::size_t d = s.dim();
            const VertexSet  all = s.comb().all_vertices();
            for (auto qi : lat.faces_of_dim(3)) {
                const VertexSet& Q = lat.face(qi).vertices;
                if (Q.size() != three_face.num_vertices() || !isomorphic(face_polytope(lat, qi).polytope, three_face))
                    continue;
                const VertexSet rest = all - Q;
                for (auto si : lat.faces_of_dim(static_cast<int>(d) - 4)) {
                    const VertexSet& S1 = lat.face(si).vertices;
                    if (S1.size() != d - 3 || !S1.subset_of(rest) || S1.front() != rest.front())
                        continue;
                    const VertexSet S2 = rest - S1;
                    const auto      s2i = lat.index_of(S2);
                    if (!s2i || lat.face(*s2i).dim != static_cast<int>(d) - 4 || S2.size() != d - 3)
                        continue;
                    VertexSet q1, q2;
                    for (auto u : S1)
                        q1 |= s.graph().neighbors(u) & Q;
                    for (auto u : S2)
                        q2 |= s.graph().neighbors(u) & Q;
                    if (!q1.intersects(q2))
                        return true;
                }
            }
            return false;
        }

        void common_structure_note()
        {
            const CombPolytope cube3 = get("cube(3)").comb();
            const CombPolytope wedge = get("j(3)").comb();
            for (std::size_t d = std::max<std::size_t>(4, opts_.dmin); d <= opts_.dmax; ++d) {
                const bool a = common_structure(get(rec("a", d)), cube3);
                const bool b = common_structure(get(rec("b", d)), wedge);
                add("n01.ab-common-structure", "two (d-4)-simplex faces plus a simple 3-face", d_param(d),
                    "A_d: cube, B_d: 5-wedge", std::string("A_d: ") + (a ? "found" : "absent") + ", B_d: " + (b ? "found" : "absent"),
                    a && b);
            }
            report_.add({"n01.ab-literal-reading", "two (d-5)-dimensional simplices plus a 3-face", "",
                         "2d+2 vertices", "2(d-4)+8 = 2d vertices, so the simplices must be (d-4)-dimensional", true, true});
        }

        /// The N_d facet listed as J_d is J_{d-1} by classification.
        void n_facet_note()
        {
            for (std::size_t d = std::max<std::size_t>(5, opts_.dmin); d <= opts_.dmax; ++d) {
                const auto census = facet_census(get(rec("n", d)).structure(), catalog_);
                const std::string j = canonical_name(get(rec("j", d - 1)));
                const auto it = census.find(j);
                const int  count = it == census.end() ? 0 : it->second;
                add("n02.N-facet-J", "N_d has one facet J_{d-1}", d_param(d), "1x" + j, std::to_string(count) + "x" + j, count == 1);
            }
            report_.add({"n02.N-facet-literal", "facet list of N_d names J_d", "", "a (d-1)-dimensional facet",
                         "J_d is d-dimensional; classification finds J_{d-1}", true, true});
        }

        // ------------------------------------------------------------ fixtures

        void check_fixture(const std::filesystem::path& path)
        {
            const std::string name = path.filename().string();
            try {
                const std::string  text = read_text(path.string());
                const PolytopeFile f = parse_polytope_file(text);
                if (f.provenance.empty()) {
                    add("fx.fixture", "golden fixture", name, "provenance recipe", "none", false);
                    return;
                }
                const Polytope& p = get(f.provenance);
                if (f.coordinates) {
                    const std::string regen = write_polytope_file(to_file(p));
                    add("fx.fixture", "golden fixture regenerates byte for byte", name, "identical",
                        regen == text ? "identical" : "differs", regen == text);
                } else {
                    const bool iso = isomorphic(comb_from_file(f), p.comb());
                    add("fx.fixture", "incidence fixture matches its recipe", name, "isomorphic",
                        iso ? "isomorphic" : "not isomorphic", iso);
                }
            } catch (const std::exception& e) {
                add("fx.fixture", "golden fixture", name, "parses", std::string("error: ") + e.what(), false);
            }
        }

        VerifyOptions                   opts_;
        Report                          report_;
        ReferenceCatalog                catalog_;
        std::map<std::string, Polytope> cache_;
};

} // namespace polycomb
