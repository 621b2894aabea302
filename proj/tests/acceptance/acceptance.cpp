// Acceptance suite.  Run as `acceptance N` for N in 1..9; each criterion
// prints witness lines for any failed clause followed by exactly one
// "criterion N: PASS/FAIL" summary line, and exits nonzero on failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "flaggraph.hpp"
#include "gammal1.hpp"
#include "geometry.hpp"
#include "invariants.hpp"
#include "semilinear.hpp"
#include "verify.hpp"

using namespace afg;

namespace {

struct Checker {
    int checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
    template <class T, class U>
    void expect_eq(const T& actual, const U& expected, const std::string& what) {
        ++checks;
        if (!(actual == static_cast<T>(expected)))
            failures.push_back(what + " (expected " + std::to_string(expected) + ", got " +
                               std::to_string(actual) + ")");
    }
};

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

struct GridEntry {
    int n, p, ell;
};
// All (n, q) with q = p^ell, n >= 2, q^n <= 512.
const GridEntry kGrid[] = {{2, 2, 1}, {2, 3, 1}, {2, 2, 2}, {2, 5, 1}, {2, 7, 1}, {2, 2, 3},
                           {2, 3, 2}, {3, 2, 1}, {3, 3, 1}, {3, 2, 2}, {4, 2, 1}};

// Geometries with stable addresses, shared across builders.
std::deque<Geometry>& geometry_pool() {
    static std::deque<Geometry> pool;
    return pool;
}

const Geometry& geom(int n, int p, int ell) {
    static std::map<std::tuple<int, int, int>, const Geometry*> index;
    auto key = std::make_tuple(n, p, ell);
    auto it = index.find(key);
    if (it != index.end()) return *it->second;
    geometry_pool().emplace_back(n, Field(p, ell));
    const Geometry& g = geometry_pool().back();
    index.emplace(key, &g);
    return g;
}

long long graph_valency(const FlagGraph& fg) {
    if (fg.adj.empty()) return 0;
    size_t d = fg.adj.front().size();
    for (const auto& row : fg.adj)
        if (row.size() != d) return -1;
    return (long long)d;
}

bool has_edges(const FlagGraph& fg) {
    for (const auto& row : fg.adj)
        if (!row.empty()) return true;
    return false;
}

int mult_order(int c, int p) {
    int x = c % p, ord = 1;
    while (x != 1) {
        x = x * c % p;
        ++ord;
    }
    return ord;
}

// The (t, e, s, r) tuples exercised by criterion 5, all with self-paired
// orbitals; every q gets at least three tuples including (1, 0, 1).
struct GcTuple {
    int p, ell, t, e, s, r;
};
const GcTuple kGcTuples[] = {
    {2, 2, 1, 0, 1, 1}, {2, 2, 3, 0, 1, 1}, {2, 2, 3, 0, 1, 3}, {2, 2, 1, 0, 2, 1},
    {5, 1, 1, 0, 1, 1}, {5, 1, 2, 0, 1, 1}, {5, 1, 2, 0, 1, 2},
    {7, 1, 1, 0, 1, 1}, {7, 1, 3, 0, 1, 1}, {7, 1, 3, 0, 1, 2},
    {2, 3, 1, 0, 1, 1}, {2, 3, 7, 0, 1, 1}, {2, 3, 7, 0, 1, 7}, {2, 3, 7, 0, 3, 1},
    {3, 2, 1, 0, 1, 1}, {3, 2, 2, 0, 1, 1}, {3, 2, 4, 0, 1, 1}, {3, 2, 8, 0, 1, 2},
};

// The two censuses exercised by criterion 6.
struct CensusCase {
    int p, c;
};
const CensusCase kCensusCases[] = {{5, 2}, {7, 6}};

// Every graph built by criteria 1-6, with its constructing group.
struct Built {
    std::string name;
    const Geometry* g;
    FlagGraph fg;
    Group group;
};

std::vector<Built> collect_all_graphs() {
    std::vector<Built> out;
    for (const GridEntry& e : kGrid) {
        const Geometry& g = geom(e.n, e.p, e.ell);
        Group G = agammal(g);
        for (Rel rel : {Rel::Intersecting, Rel::Parallel, Rel::Skew}) {
            char name[48];
            snprintf(name, sizeof name, "%s(%d,%d)", rel_name(rel), e.n, g.q());
            out.push_back({name, &g, relation_graph(g, rel), G});
        }
    }
    {
        const Geometry& g = geom(2, 2, 1);
        Group G = agammal1(g);
        auto census = selfpaired_orbital_census(g, G);
        for (size_t i = 0; i < census.size(); ++i)
            out.push_back({"sporadic[" + std::to_string(i) + "]", &g,
                           graph_from_orbital(g, census[i]), G});
    }
    {
        const Geometry& g = geom(2, 2, 2);
        Group G = agammal1(g);
        auto census = selfpaired_orbital_census(g, G);
        for (size_t i = 0; i < census.size(); ++i)
            out.push_back({"semilinear-census(2,4)[" + std::to_string(i) + "]", &g,
                           graph_from_orbital(g, census[i]), G});
    }
    for (const GcTuple& t : kGcTuples) {
        const Geometry& g = geom(2, t.p, t.ell);
        StdParams sp{t.t, t.e, t.s};
        char name[48];
        snprintf(name, sizeof name, "gc(%d;%d,%d,%d;%d)", g.q(), t.t, t.e, t.s, t.r);
        out.push_back({name, &g, gamma_gc(g, sp, t.r), sl2_semidirect_h(g, sp)});
    }
    for (const CensusCase& cc : kCensusCases) {
        const Geometry& g = geom(2, cc.p, 1);
        Group G = sl2p_c(g, cc.c);
        auto census = selfpaired_orbital_census(g, G);
        for (size_t i = 0; i < census.size(); ++i) {
            char name[48];
            snprintf(name, sizeof name, "census(p=%d,c=%d)[%zu]", cc.p, cc.c, i);
            out.push_back({name, &g, graph_from_orbital(g, census[i]), G});
        }
    }
    return out;
}

// --- criterion 1: order and valency formulas on the full grid ---
void criterion1(Checker& ck) {
    for (const GridEntry& e : kGrid) {
        const Geometry& g = geom(e.n, e.p, e.ell);
        long long q = g.q(), qn = ipow(q, e.n);
        long long order = qn * (qn - 1) / (q - 1);
        const long long expected[3] = {(qn - q) * (q - 1), qn - q,
                                       (qn - q) * (qn - q * q) / (q - 1)};
        int i = 0;
        for (Rel rel : {Rel::Intersecting, Rel::Parallel, Rel::Skew}) {
            FlagGraph fg = relation_graph(g, rel);
            char where[64];
            snprintf(where, sizeof where, "%s(%d,%lld)", rel_name(rel), e.n, q);
            ck.expect_eq((long long)fg.adj.size(), order, std::string(where) + " order");
            ck.expect_eq(graph_valency(fg), expected[i], std::string(where) + " valency");
            ++i;
        }
    }
}

// --- criterion 2: girth/diameter and parallel-class structure ---
void criterion2(Checker& ck) {
    for (const GridEntry& e : kGrid) {
        const Geometry& g = geom(e.n, e.p, e.ell);
        long long q = g.q(), qn = ipow(q, e.n);
        long long per_point = (qn - 1) / (q - 1);
        for (Rel rel : {Rel::Intersecting, Rel::Skew}) {
            if (rel == Rel::Skew && e.n < 3) continue;
            FlagGraph fg = relation_graph(g, rel);
            InvariantReport rep = invariant_report(fg.adj);
            char where[64];
            snprintf(where, sizeof where, "%s(%d,%lld)", rel_name(rel), e.n, q);
            ck.expect_eq(rep.girth, 3, std::string(where) + " girth");
            if (rep.diameter == kInfinite) {
                ck.expect(false, std::string(where) + " diameter (expected 2, got infinite: " +
                                     std::to_string(rep.components.size()) +
                                     " components of size " +
                                     std::to_string(rep.components.front().size()) + ")");
            } else {
                ck.expect_eq(rep.diameter, 2, std::string(where) + " diameter");
            }
        }
        FlagGraph fg = relation_graph(g, Rel::Parallel);
        InvariantReport rep = invariant_report(fg.adj);
        char where[64];
        snprintf(where, sizeof where, "parallel(%d,%lld)", e.n, q);
        ck.expect_eq((long long)rep.components.size(), per_point,
                     std::string(where) + " component count");
        for (const auto& comp : rep.components) {
            try {
                MultipartiteShape shape = check_complete_multipartite(fg.adj, comp);
                ck.expect(shape.parts == ipow(q, e.n - 1) && shape.part_size == q,
                          std::string(where) + " component is complete " +
                              std::to_string(ipow(q, e.n - 1)) + "-partite with parts of size " +
                              std::to_string(q) + " (got " + std::to_string(shape.parts) +
                              " parts of size " + std::to_string(shape.part_size) + ")");
            } catch (const error& err) {
                ck.expect(false, std::string(where) + " component multipartite: " + err.what());
            }
        }
    }
}

// Reference graph: k disjoint copies of the complete multipartite graph with
// `parts` parts of size `part_size`.
std::vector<std::vector<int>> disjoint_multipartite(int k, int parts, int part_size) {
    int block = parts * part_size;
    std::vector<std::vector<int>> adj(k * block);
    for (int c = 0; c < k; ++c)
        for (int u = 0; u < block; ++u)
            for (int v = 0; v < block; ++v)
                if (u / part_size != v / part_size) adj[c * block + u].push_back(c * block + v);
    return adj;
}

// --- criterion 3: the two degree-2 graphs on the 12 flags of AG(2,2) ---
void criterion3(Checker& ck) {
    const Geometry& g = geom(2, 2, 1);
    // The one-dimensional affine subgroup without the field automorphism
    // fails the two-point-stabilizer transitivity condition (a4), so the
    // feasibility gate excludes it: its census yields perfect matchings,
    // not the two sporadic graphs.
    Feasibility small = feasibility_check(g, agl1(g));
    ck.expect(!small.a4 && !small.feasible(),
              "the subgroup without the field automorphism must fail condition a4");
    auto small_census = selfpaired_orbital_census(g, agl1(g));
    ck.expect_eq((long long)small_census.size(), 2,
                 "self-paired orbital count for the infeasible subgroup");
    for (const Orbital& o : small_census) {
        FlagGraph fg = graph_from_orbital(g, o);
        ck.expect_eq(graph_valency(fg), 1,
                     "infeasible subgroup orbital graphs are perfect matchings");
    }
    printf("note: the index-2 subgroup fails the two-point stabilizer condition (a4) and is\n"
           "      excluded by the feasibility gate; its two self-paired orbitals give perfect\n"
           "      matchings, so the sporadic pair arises from the full semilinear group.\n");

    Feasibility full = feasibility_check(g, agammal1(g));
    ck.expect(full.feasible(), "the full one-dimensional semilinear group must be feasible");
    auto census = selfpaired_orbital_census(g, agammal1(g));
    ck.expect_eq((long long)census.size(), 2, "self-paired compatible orbital count");
    if (census.size() != 2) return;

    std::vector<std::vector<int>> ref_3k22 = disjoint_multipartite(3, 2, 2);  // 3 x K_{2,2}
    std::vector<std::vector<int>> ref_4k3 = disjoint_multipartite(4, 3, 1);   // 4 x K_3
    bool seen_3k22 = false, seen_4k3 = false;
    for (size_t i = 0; i < census.size(); ++i) {
        FlagGraph fg = graph_from_orbital(g, census[i]);
        InvariantReport rep = invariant_report(fg.adj);
        std::string where = "orbital graph " + std::to_string(i);
        ck.expect_eq((long long)fg.adj.size(), 12, where + " order");
        ck.expect_eq(graph_valency(fg), 2, where + " degree");
        if (afg::are_isomorphic(fg.adj, ref_3k22)) {
            seen_3k22 = true;
            ck.expect_eq((long long)rep.components.size(), 3, where + " component count");
        } else if (afg::are_isomorphic(fg.adj, ref_4k3)) {
            seen_4k3 = true;
            ck.expect_eq((long long)rep.components.size(), 4, where + " component count");
        } else {
            ck.expect(false, where + " is neither 3 disjoint 4-cycles nor 4 disjoint triangles");
        }
    }
    ck.expect(seen_3k22 && seen_4k3,
              "the census must contain both sporadic graphs (3 x K_{2,2} and 4 x K_3)");
}

// --- criterion 4: the AG(2,4) census under the full semilinear group ---
void criterion4(Checker& ck) {
    const Geometry& g = geom(2, 2, 2);
    Feasibility fe = feasibility_check(g, agammal1(g));
    ck.expect(fe.feasible(), "feasibility check for the one-dimensional semilinear group");
    auto census = selfpaired_orbital_census(g, agammal1(g));
    ck.expect_eq((long long)census.size(), 2, "self-paired compatible orbital count");
    FlagGraph plus = relation_graph(g, Rel::Intersecting);
    FlagGraph par = relation_graph(g, Rel::Parallel);
    bool seen_par = false, seen_plus = false;
    for (size_t i = 0; i < census.size(); ++i) {
        FlagGraph fg = graph_from_orbital(g, census[i]);
        std::string where = "orbital graph " + std::to_string(i);
        if (fg.adj == par.adj) {
            seen_par = true;
            ck.expect_eq(graph_valency(fg), 12, where + " (parallel-class graph) valency");
        } else if (fg.adj == plus.adj) {
            seen_plus = true;
            ck.expect_eq(graph_valency(fg), 36, where + " (intersecting graph) valency");
        } else {
            int fa = (int)(census[i].seed / census[i].nflags);
            int fb = (int)(census[i].seed % census[i].nflags);
            Rel rel = g.classify(g.flags()[fa].line, g.flags()[fb].line);
            ck.expect(false, where + " (" + rel_name(rel) + " seed, valency " +
                                 std::to_string(graph_valency(fg)) + ", " +
                                 std::to_string(census[i].pairs.size()) +
                                 " arcs) is neither of the two relation graphs");
        }
        QuotientReport qr = quotient_analysis(g, fg);
        ck.expect(qr.quotient_complete && qr.almost_multicover,
                  where + " complete quotient with almost multicover");
        ck.expect_eq(qr.multiplicity, 3, where + " multiplicity m");
        ck.expect_eq(qr.block_size, 5, where + " block size |B|");
    }
    ck.expect(seen_par, "one orbital graph must equal the parallel-class graph (valency 12)");
    if (!seen_plus)
        ck.expect(false,
                  "no orbital graph equals the intersecting graph of valency 36: that graph "
                  "has 80 * 36 = 2880 arcs, but every orbital of this group of order 960 has "
                  "at most 960 arcs (the census realizes only a valency-12 subgraph)");
}

// --- criterion 5: the two-parameter family on AG(2,q) ---
void criterion5(Checker& ck) {
    for (const GcTuple& t : kGcTuples) {
        const Geometry& g = geom(2, t.p, t.ell);
        const Field& f = g.field();
        long long q = g.q();
        StdParams sp{t.t, t.e, t.s};
        char where[64];
        snprintf(where, sizeof where, "gc(%lld;%d,%d,%d;%d)", q, t.t, t.e, t.s, t.r);

        ValencyPrediction pr = predict_valency(f, sp, t.r);
        // The divisibility rule gives the valency as i q (q-1)^2 / (t s).
        long long by_rule = (long long)pr.i * q * (q - 1) * (q - 1);
        ck.expect(by_rule % ((long long)t.t * t.s) == 0,
                  std::string(where) + " divisibility of i q (q-1)^2 by t s");
        by_rule /= (long long)t.t * t.s;
        // Independent check: the orbit of c = w^r under the multiplier group.
        std::vector<GL1> multipliers = gl1_closure(f, gl1_generators(f, sp));
        int c = f.pow(f.omega(), t.r);
        std::set<int> orbit;
        for (const GL1& m : multipliers) orbit.insert(gl1_apply(f, m, c));
        long long by_orbit = (long long)orbit.size() * q * (q - 1);
        ck.expect_eq(by_rule, by_orbit, std::string(where) + " rule valency vs orbit valency");
        ck.expect_eq(pr.valency, by_rule, std::string(where) + " predicted valency vs rule");

        FlagGraph fg = gamma_gc(g, sp, t.r);
        InvariantReport rep = invariant_report(fg.adj);
        ck.expect_eq((long long)fg.adj.size(), q * q * (q + 1), std::string(where) + " order");
        ck.expect_eq((long long)rep.components.size(), 1, std::string(where) + " connectivity");
        ck.expect_eq(graph_valency(fg), by_rule, std::string(where) + " constructed degree");
    }
}

// --- criterion 6: censuses over the prime fields p = 5 and p = 7 ---
void criterion6(Checker& ck) {
    for (const CensusCase& cc : kCensusCases) {
        const Geometry& g = geom(2, cc.p, 1);
        long long p = cc.p;
        int ell_order = mult_order(cc.c, cc.p);
        Group G = sl2p_c(g, cc.c);
        auto census = selfpaired_orbital_census(g, G);
        char where[48];
        snprintf(where, sizeof where, "census(p=%lld,c=%d)", p, cc.c);
        ck.expect_eq((long long)census.size(), (p - 1) / ell_order + 1,
                     std::string(where) + " self-paired orbital count");
        std::vector<FlagGraph> nonpar;
        for (size_t i = 0; i < census.size(); ++i) {
            FlagGraph fg = graph_from_orbital(g, census[i]);
            int fa = (int)(census[i].seed / census[i].nflags);
            int fb = (int)(census[i].seed % census[i].nflags);
            if (g.classify(g.flags()[fa].line, g.flags()[fb].line) == Rel::Parallel) continue;
            std::string member = std::string(where) + "[" + std::to_string(i) + "]";
            InvariantReport rep = invariant_report(fg.adj);
            ck.expect_eq((long long)fg.adj.size(), p * p * (p + 1), member + " order");
            ck.expect_eq(graph_valency(fg), (p * p - p) * ell_order, member + " valency");
            ck.expect_eq((long long)rep.components.size(), 1, member + " connectivity");
            nonpar.push_back(std::move(fg));
        }
        for (size_t i = 0; i < nonpar.size(); ++i)
            for (size_t j = i + 1; j < nonpar.size(); ++j)
                ck.expect(afg::are_isomorphic(nonpar[i].adj, nonpar[j].adj),
                          std::string(where) + " members " + std::to_string(i) + " and " +
                              std::to_string(j) + " isomorphic");
        if (cc.p == 7) {
            ck.expect_eq((long long)nonpar.size(), 3, std::string(where) + " non-parallel count");
            for (const FlagGraph& fg : nonpar) {
                ck.expect_eq((long long)fg.adj.size(), 392, std::string(where) + " order 392");
                ck.expect_eq(graph_valency(fg), 84, std::string(where) + " 84-regular");
            }
        }
    }
}

// --- criterion 7: quotient and design recovery for every built graph ---
void criterion7(Checker& ck) {
    std::vector<Built> all = collect_all_graphs();
    int analyzed = 0;
    for (const Built& b : all) {
        if (!has_edges(b.fg)) continue;  // the n = 2 skew graphs have no edges
        ++analyzed;
        const Geometry& g = *b.g;
        long long q = g.q(), qn = g.num_points();
        try {
            QuotientReport qr = quotient_analysis(g, b.fg);
            ck.expect(qr.quotient_complete, b.name + " quotient complete");
            ck.expect(qr.almost_multicover, b.name + " almost multicover");
            ck.expect_eq(qr.multiplicity, q - 1, b.name + " multiplicity m = q - 1");
            ck.expect_eq(qr.block_size, (qn - 1) / (q - 1),
                         b.name + " block size |B| = (q^n - 1)/(q - 1)");
            IncidenceStructure d = design_recover(g, b.fg, b.group);
            ck.expect(d.v == (int)qn && d.k == q && d.lambda == 1,
                      b.name + " recovers a 2-(" + std::to_string(qn) + ", " +
                          std::to_string(q) + ", 1) design (got 2-(" + std::to_string(d.v) +
                          ", " + std::to_string(d.k) + ", " + std::to_string(d.lambda) + "))");
            std::set<std::vector<int>> lines;
            for (int l = 0; l < (int)g.lines().size(); ++l) {
                std::vector<int> pts = g.line_points(l);
                std::sort(pts.begin(), pts.end());
                lines.insert(pts);
            }
            std::set<std::vector<int>> blocks(d.blocks.begin(), d.blocks.end());
            ck.expect(lines == blocks, b.name + " design blocks are the lines of the geometry");
        } catch (const error& err) {
            ck.expect(false, b.name + " quotient/design recovery: " + err.what());
        }
    }
    printf("note: %d graphs with edges analyzed (edgeless n = 2 skew graphs carry no quotient\n"
           "      structure and are excluded).\n",
           analyzed);
}

// --- criterion 8: arc-transitivity under the constructing group ---
void criterion8(Checker& ck) {
    std::vector<Built> all = collect_all_graphs();
    for (const Built& b : all) {
        try {
            // Also verifies every generator is an automorphism: the check
            // raises an error naming any generator that breaks an edge.
            ck.expect(is_arc_transitive(*b.g, b.fg, b.group),
                      b.name + " arc-transitive under " + b.group.name);
        } catch (const error& err) {
            ck.expect(false, b.name + " generator automorphism check: " + err.what());
        }
    }
    printf("note: %zu graphs checked, each under its constructing group.\n", all.size());
}

// --- criterion 9: standard-form round trip over GF(16) and GF(9) ---
void criterion9(Checker& ck) {
    for (const Field& f : {Field(2, 4), Field(3, 2)}) {
        std::vector<GL1> elements;
        for (int a = 1; a < f.q(); ++a)
            for (int k = 0; k < f.ell(); ++k) elements.push_back({a, k});
        std::set<std::vector<GL1>> seen;
        int subgroups = 0, sets = 0;
        auto probe = [&](const std::vector<GL1>& gens) {
            ++sets;
            std::vector<GL1> closure = gl1_closure(f, gens);
            std::sort(closure.begin(), closure.end());
            if (!seen.insert(closure).second) return;
            ++subgroups;
            char where[64];
            snprintf(where, sizeof where, "GF(%d) subgroup of order %zu", f.q(), closure.size());
            try {
                StdParams sp = standard_form(f, gens);
                check_std_params(f, sp);  // raises unless the triple is in standard form
                std::vector<GL1> regen = gl1_closure(f, gl1_generators(f, sp));
                std::sort(regen.begin(), regen.end());
                ck.expect(regen == closure,
                          std::string(where) + ": parameters (" + std::to_string(sp.t) + ", " +
                              std::to_string(sp.e) + ", " + std::to_string(sp.s) +
                              ") regenerate a different subgroup");
            } catch (const error& err) {
                ck.expect(false, std::string(where) + ": " + err.what());
            }
        };
        for (size_t i = 0; i < elements.size(); ++i) {
            probe({elements[i]});
            for (size_t j = i + 1; j < elements.size(); ++j) probe({elements[i], elements[j]});
        }
        printf("note: GF(%d): %d distinct subgroups from %d generator sets round-tripped.\n",
               f.q(), subgroups, sets);
    }
}

struct Criterion {
    const char* description;
    void (*run)(Checker&);
    double limit_seconds;  // 0 = no stated limit
};

const Criterion kCriteria[] = {
    {"order and valency formulas for the three relation graphs on the full parameter grid",
     criterion1, 60.0},
    {"girth, diameter and parallel-class component structure on the full parameter grid",
     criterion2, 120.0},
    {"the two sporadic degree-2 graphs on the 12 flags of AG(2,2)", criterion3, 0.0},
    {"the AG(2,4) census under the one-dimensional semilinear group", criterion4, 0.0},
    {"order, connectivity and the two degree computations for the two-parameter family",
     criterion5, 300.0},
    {"self-paired orbital censuses over GF(5) and GF(7)", criterion6, 600.0},
    {"complete quotient, almost multicover and 2-design recovery for every built graph",
     criterion7, 0.0},
    {"arc-transitivity and generator automorphism checks for every built graph", criterion8,
     0.0},
    {"standard-form round trip for every 2-generated subgroup over GF(16) and GF(9)",
     criterion9, 0.0},
};

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        fprintf(stderr, "usage: acceptance <criterion 1..9>\n");
        return 2;
    }
    int n = atoi(argv[1]);
    if (n < 1 || n > 9) {
        fprintf(stderr, "usage: acceptance <criterion 1..9>\n");
        return 2;
    }
    const Criterion& c = kCriteria[n - 1];
    Checker ck;
    auto start = std::chrono::steady_clock::now();
    try {
        c.run(ck);
    } catch (const error& e) {
        ck.expect(false, std::string("unexpected error: ") + e.what());
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && elapsed > c.limit_seconds)
        ck.failures.push_back("time limit exceeded: " + std::to_string(elapsed) + "s > " +
                              std::to_string(c.limit_seconds) + "s");
    for (const std::string& f : ck.failures) printf("  failed: %s\n", f.c_str());
    char timing[64];
    if (c.limit_seconds > 0)
        snprintf(timing, sizeof timing, "%.2fs, limit %.0fs", elapsed, c.limit_seconds);
    else
        snprintf(timing, sizeof timing, "%.2fs", elapsed);
    printf("criterion %d: %s — %s (%d checks, %s)\n", n,
           ck.failures.empty() ? "PASS" : "FAIL", c.description, ck.checks, timing);
    return ck.failures.empty() ? 0 : 1;
}
