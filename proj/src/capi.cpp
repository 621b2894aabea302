#include "afg.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <set>
#include <string>

#include "error.hpp"
#include "export.hpp"
#include "flaggraph.hpp"
#include "invariants.hpp"
#include "verify.hpp"

using nlohmann::ordered_json;

struct afg_graph {
    afg::Geometry geom;
    afg::FlagGraph fg;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
afg_status guarded(F&& fn) {
    g_last_error.clear();
    try {
        fn();
        return AFG_OK;
    } catch (const afg::error& e) {
        g_last_error = e.what();
        return (afg_status)(int)e.code;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return AFG_INTERNAL;
    }
}

void require(bool ok, const char* what) {
    if (!ok) afg::fail(afg::errc::invalid, what);
}

char* dup_string(const std::string& s) {
    char* out = (char*)std::malloc(s.size() + 1);
    if (!out) afg::fail(afg::errc::internal, "out of memory");
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

long long regular_valency(const afg::FlagGraph& fg) {
    if (fg.adj.empty()) return 0;
    size_t d = fg.adj.front().size();
    for (const auto& row : fg.adj)
        if (row.size() != d) return -1;
    return (long long)d;
}

long long meta_int(const ordered_json& meta, const char* key) {
    auto it = meta.find(key);
    if (it == meta.end() || !it->is_number_integer())
        afg::fail(afg::errc::invalid,
                  std::string("meta block lacks integer field '") + key + "'");
    return it->get<long long>();
}

int multiplicative_order(const afg::Field& f, int c) {
    int ord = 1, x = c;
    while (x != 1) {
        x = f.mul(x, c);
        ++ord;
    }
    return ord;
}

// Family-driven verification: re-derives every closed-form claim that applies
// to the graph and records each comparison.  Returns true iff all hold.
bool verify_into(const afg::Geometry& g, const afg::FlagGraph& fg, ordered_json& rep) {
    using namespace afg;
    const long long qn = g.num_points();
    const long long q = g.q();
    const long long per_point = (qn - 1) / (q - 1);  // lines through a point
    bool all = true;
    ordered_json checks = ordered_json::array();
    auto check = [&](const std::string& name, const ordered_json& expected,
                     const ordered_json& actual) {
        bool ok = expected == actual;
        checks.push_back({{"name", name}, {"expected", expected}, {"actual", actual}, {"ok", ok}});
        all = all && ok;
        return ok;
    };

    auto finite = [](int x) {
        return x == kInfinite ? ordered_json() : ordered_json(x);
    };
    InvariantReport inv = invariant_report(fg.adj);
    rep["meta"] = fg.meta;
    rep["invariants"] = invariant_json(inv);

    check("order is q^n (q^n - 1)/(q - 1)", qn * per_point, (long long)inv.order);
    long long val = regular_valency(fg);
    if (fg.meta.contains("order"))
        check("meta order matches the graph", fg.meta["order"], (long long)inv.order);
    if (fg.meta.contains("valency"))
        check("meta valency matches the graph", fg.meta["valency"], val);

    std::string family = fg.meta.value("family", "");
    bool run_quotient = true;
    Group closure_group{"trivial", {}};
    if (family == "relation") {
        closure_group = agammal(g);
        std::string rel = fg.meta.value("relation", "");
        if (rel == "intersecting") {
            check("valency is (q^n - q)(q - 1)", (qn - q) * (q - 1), val);
            check("girth is 3", 3, finite(inv.girth));
            check("diameter is 2", 2, finite(inv.diameter));
        } else if (rel == "parallel") {
            check("valency is q^n - q", qn - q, val);
            check("component count is (q^n - 1)/(q - 1)", per_point,
                  (long long)inv.components.size());
            long long parts = qn / q;  // q^(n-1)
            bool shapes = true;
            std::string note;
            for (const auto& comp : inv.components) {
                try {
                    MultipartiteShape sh = check_complete_multipartite(fg.adj, comp);
                    shapes = shapes && sh.parts == parts && sh.part_size == q;
                } catch (const error& e) {
                    shapes = false;
                    note = e.what();
                }
            }
            if (!check("components are complete q^(n-1)-partite with parts of size q", true,
                       shapes) &&
                !note.empty())
                checks.back()["message"] = note;
        } else if (rel == "skew") {
            check("valency is (q^n - q)(q^n - q^2)/(q - 1)", (qn - q) * (qn - q * q) / (q - 1),
                  val);
            if (g.n() >= 3) {
                check("girth is 3", 3, finite(inv.girth));
                check("diameter is 2", 2, finite(inv.diameter));
            } else {
                run_quotient = false;  // edgeless on planes
            }
        } else {
            fail(errc::invalid, "meta names no known relation: '" + rel + "'");
        }
    } else if (family == "gamma_gc") {
        StdParams sp{(int)meta_int(fg.meta, "t"), (int)meta_int(fg.meta, "e"),
                     (int)meta_int(fg.meta, "s")};
        int r = (int)meta_int(fg.meta, "r");
        closure_group = sl2_semidirect_h(g, sp);
        ValencyPrediction pr = predict_valency(g.field(), sp, r);
        check("valency is i q (q - 1)^2/(t s) by the divisibility rule", pr.valency, val);
        check("graph is connected", 1, (long long)inv.components.size());
    } else if (family == "orbital") {
        // Quotient-form claims below are the whole content for these graphs.
    } else {
        fail(errc::invalid, "meta names no known family: '" + family + "'");
    }

    if (run_quotient) {
        try {
            QuotientReport qr = quotient_analysis(g, fg);
            rep["quotient"] = quotient_json(qr);
            check("quotient is complete", true, qr.quotient_complete);
            check("almost multicover", true, qr.almost_multicover);
            check("multiplicity m is q - 1", q - 1, qr.multiplicity);
            check("block size is (q^n - 1)/(q - 1)", per_point, qr.block_size);
            IncidenceStructure d = design_recover(g, fg, closure_group);
            rep["design"] = design_json(g, d);
            check("design is 2-(q^n, q, 1)", ordered_json{qn, q, 1},
                  ordered_json{d.v, d.k, d.lambda});
            std::set<std::vector<int>> lines;
            for (int l = 0; l < (int)g.lines().size(); ++l) {
                std::vector<int> pts = g.line_points(l);
                std::sort(pts.begin(), pts.end());
                lines.insert(pts);
            }
            std::set<std::vector<int>> blocks(d.blocks.begin(), d.blocks.end());
            check("design blocks are the lines of the geometry", true, lines == blocks);
        } catch (const error& e) {
            if (e.code != errc::verify && e.code != errc::precondition) throw;
            checks.push_back(
                {{"name", "quotient and design recovery"}, {"ok", false}, {"message", e.what()}});
            all = false;
        }
    } else {
        rep["quotient_skipped"] = "graph has no edges";
    }
    if (closure_group.gens.empty())
        rep["design_group_closure"] = "skipped: no group recorded for this family";
    rep["checks"] = checks;
    rep["ok"] = all;
    return all;
}

afg::Rel parse_relation(const char* name) {
    require(name != nullptr, "null relation name");
    std::string s = name;
    if (s == "plus" || s == "intersecting") return afg::Rel::Intersecting;
    if (s == "par" || s == "parallel") return afg::Rel::Parallel;
    if (s == "skew") return afg::Rel::Skew;
    afg::fail(afg::errc::invalid,
              "unknown relation '" + s + "': expected plus, par or skew");
}

}  // namespace

extern "C" {

const char* afg_last_error(void) { return g_last_error.c_str(); }

void afg_graph_free(afg_graph* g) { delete g; }

void afg_string_free(char* s) { std::free(s); }

afg_status afg_set_caps(long long orbit, long long elements, long long vertices,
                        long long field) {
    return guarded([&] {
        require(orbit >= 0 && elements >= 0 && vertices >= 0 && field >= 0,
                "caps must be positive (zero leaves a cap unchanged)");
        if (orbit) afg::caps().orbit = orbit;
        if (elements) afg::caps().elements = elements;
        if (vertices) afg::caps().vertices = vertices;
        if (field) afg::caps().field = field;
    });
}

afg_status afg_build_relation(int n, int p, int ell, const char* relation, afg_graph** out) {
    return guarded([&] {
        require(out != nullptr, "null output pointer");
        afg::Rel rel = parse_relation(relation);
        afg::Geometry g(n, afg::Field(p, ell));
        afg::FlagGraph fg = relation_graph(g, rel);
        *out = new afg_graph{std::move(g), std::move(fg)};
    });
}

afg_status afg_build_gc(int p, int ell, int t, int e, int s, int r, afg_graph** out) {
    return guarded([&] {
        require(out != nullptr, "null output pointer");
        afg::Geometry g(2, afg::Field(p, ell));
        afg::FlagGraph fg = gamma_gc(g, afg::StdParams{t, e, s}, r);
        *out = new afg_graph{std::move(g), std::move(fg)};
    });
}

afg_status afg_build_census_member(int p, int ell_order, int index, afg_graph** out) {
    return guarded([&] {
        require(out != nullptr, "null output pointer");
        afg::Field f(p, 1);
        require(p > 2, "the census group needs an odd prime");
        require(ell_order >= 1 && (p - 1) % ell_order == 0,
                "no subgroup of that order: the order must divide p - 1");
        int elem = f.pow(f.omega(), (p - 1) / ell_order);
        afg::Geometry g(2, std::move(f));
        afg::Group G = sl2p_c(g, elem);
        std::vector<afg::Orbital> census = selfpaired_orbital_census(g, G);
        if (index < 0 || index >= (int)census.size())
            afg::fail(afg::errc::invalid,
                      "index out of range: the census has " + std::to_string(census.size()) +
                          " self-paired orbitals");
        afg::FlagGraph fg = graph_from_orbital(g, census[index]);
        *out = new afg_graph{std::move(g), std::move(fg)};
    });
}

afg_status afg_graph_from_text(const char* text, afg_graph** out) {
    return guarded([&] {
        require(out != nullptr, "null output pointer");
        require(text != nullptr, "null input text");
        ordered_json meta = afg::edge_list_meta(text);
        afg::Geometry g = afg::geometry_from_meta(meta);
        afg::FlagGraph fg = afg::from_edge_list(g, text);
        *out = new afg_graph{std::move(g), std::move(fg)};
    });
}

afg_status afg_graph_order(const afg_graph* g, long long* out) {
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        *out = (long long)g->fg.adj.size();
    });
}

afg_status afg_graph_valency(const afg_graph* g, long long* out) {
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        *out = regular_valency(g->fg);
    });
}

afg_status afg_graph_edgelist(const afg_graph* g, char** out) {
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        *out = dup_string(to_edge_list(g->geom, g->fg));
    });
}

afg_status afg_graph_meta_json(const afg_graph* g, char** out) {
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        *out = dup_string(g->fg.meta.dump());
    });
}

afg_status afg_graph_invariants_json(const afg_graph* g, char** out) {
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        *out = dup_string(afg::invariant_json(afg::invariant_report(g->fg.adj)).dump());
    });
}

afg_status afg_verify_graph(const afg_graph* g, char** report_json) {
    bool ok = false;
    afg_status st = guarded([&] {
        require(g != nullptr, "null argument");
        ordered_json rep;
        ok = verify_into(g->geom, g->fg, rep);
        if (report_json) *report_json = dup_string(rep.dump());
        if (!ok) g_last_error = "a closed-form claim failed; see the report's checks";
    });
    if (st != AFG_OK) return st;
    return ok ? AFG_OK : AFG_VERIFY;
}

afg_status afg_census_json(int p, int c, char** report_json) {
    return guarded([&] {
        require(report_json != nullptr, "null output pointer");
        afg::Field f(p, 1);
        require(p > 2, "the census group needs an odd prime");
        require(c >= 1 && c < p, "the element c must lie in the multiplicative group");
        int ord = multiplicative_order(f, c);
        if (ord % 2 != 0)
            afg::fail(afg::errc::invalid,
                      "the subgroup generated by c has odd order " + std::to_string(ord) +
                          "; an even order is required for self-paired orbitals");
        afg::Geometry g(2, std::move(f));
        afg::Group G = sl2p_c(g, c);
        std::vector<afg::Orbital> census = selfpaired_orbital_census(g, G);
        long long expected = (long long)(p - 1) / ord + 1;
        if ((long long)census.size() != expected)
            afg::fail(afg::errc::verify,
                      "census size " + std::to_string(census.size()) +
                          " does not equal (p - 1)/ord(c) + 1 = " + std::to_string(expected));
        ordered_json rep;
        rep["p"] = p;
        rep["c"] = c;
        rep["ell_order"] = ord;
        rep["count"] = (long long)census.size();
        ordered_json members = ordered_json::array();
        std::vector<int> nonpar;
        std::vector<afg::FlagGraph> graphs;
        for (int i = 0; i < (int)census.size(); ++i) {
            const afg::Orbital& o = census[i];
            afg::FlagGraph fg = graph_from_orbital(g, o);
            afg::InvariantReport inv = afg::invariant_report(fg.adj);
            int fa = (int)(o.seed / o.nflags), fb = (int)(o.seed % o.nflags);
            afg::Rel rel = g.classify(g.flags()[fa].line, g.flags()[fb].line);
            ordered_json m;
            m["index"] = i;
            m["seed"] = {g.flag_label(fa), g.flag_label(fb)};
            m["arcs"] = (long long)o.pairs.size();
            m["relation"] = rel_name(rel);
            m["order"] = inv.order;
            m["valency"] = fg.meta["valency"];
            m["girth"] = inv.girth;
            m["components"] = (long long)inv.components.size();
            members.push_back(m);
            if (rel != afg::Rel::Parallel) nonpar.push_back(i);
            graphs.push_back(std::move(fg));
        }
        rep["orbitals"] = members;
        rep["nonparallel_indices"] = nonpar;
        ordered_json matrix = ordered_json::array();
        bool all_iso = true;
        for (size_t a = 0; a < nonpar.size(); ++a) {
            ordered_json row = ordered_json::array();
            for (size_t b = 0; b < nonpar.size(); ++b) {
                bool iso = a == b || afg::are_isomorphic(graphs[nonpar[a]].adj, graphs[nonpar[b]].adj);
                row.push_back(iso);
                all_iso = all_iso && iso;
            }
            matrix.push_back(row);
        }
        rep["pairwise_isomorphism"] = matrix;
        rep["nonparallel_pairwise_isomorphic"] = all_iso;
        *report_json = dup_string(rep.dump());
    });
}

afg_status afg_standard_form(int p, int ell, const int* gen_pairs, int ngens, int* t_out,
                             int* e_out, int* s_out, long long* order_out) {
    return guarded([&] {
        require(t_out && e_out && s_out, "null output pointer");
        require(ngens >= 0 && (ngens == 0 || gen_pairs != nullptr),
                "null generator list with nonzero count");
        afg::Field f(p, ell);
        std::vector<afg::GL1> gens;
        for (int i = 0; i < ngens; ++i)
            gens.push_back(afg::GL1{gen_pairs[2 * i], gen_pairs[2 * i + 1]});
        afg::StdParams sp = standard_form(f, gens);
        *t_out = sp.t;
        *e_out = sp.e;
        *s_out = sp.s;
        if (order_out)
            *order_out = (long long)gl1_closure(f, gl1_generators(f, sp)).size();
    });
}

afg_status afg_feasible(int n, int p, int ell, const char* group, int* feasible_out,
                        char** report_json) {
    return guarded([&] {
        require(group != nullptr, "null group name");
        require(feasible_out != nullptr, "null output pointer");
        afg::Geometry g(n, afg::Field(p, ell));
        std::string name = group;
        afg::Group G;
        if (name == "translations") G = translations(g);
        else if (name == "asl") G = asl(g);
        else if (name == "agl") G = agl(g);
        else if (name == "agammal") G = agammal(g);
        else if (name == "agl1") G = agl1(g);
        else if (name == "agammal1") G = agammal1(g);
        else
            afg::fail(afg::errc::invalid,
                      "unknown group '" + name +
                          "': expected translations, asl, agl, agammal, agl1 or agammal1");
        afg::Feasibility fe = feasibility_check(g, G);
        *feasible_out = fe.feasible() ? 1 : 0;
        if (report_json) *report_json = dup_string(feasibility_json(fe).dump());
    });
}

}  // extern "C"
