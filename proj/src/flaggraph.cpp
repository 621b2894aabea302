#include "flaggraph.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"

namespace afg {

namespace {

nlohmann::ordered_json geometry_meta(const Geometry& g) {
    nlohmann::ordered_json m;
    m["n"] = g.n();
    m["p"] = g.field().p();
    m["ell"] = g.field().ell();
    m["q"] = g.field().q();
    return m;
}

// Appends order and, for regular graphs, valency to the meta block.
void finalize_meta(FlagGraph& fg) {
    fg.meta["order"] = (long long)fg.adj.size();
    size_t dmin = fg.adj.empty() ? 0 : fg.adj.front().size();
    size_t dmax = dmin;
    for (const auto& row : fg.adj) {
        dmin = std::min(dmin, row.size());
        dmax = std::max(dmax, row.size());
    }
    if (dmin == dmax) {
        fg.meta["valency"] = (long long)dmin;
    } else {
        fg.meta["degree_min"] = (long long)dmin;
        fg.meta["degree_max"] = (long long)dmax;
    }
}

void sort_adjacency(FlagGraph& fg) {
    for (auto& row : fg.adj) std::sort(row.begin(), row.end());
}

long long pair_code(const Geometry& g, int fa, int fb) {
    return (long long)fa * (long long)g.flags().size() + fb;
}

}  // namespace

bool is_compatible(const Geometry& g, int fa, int fb) {
    const Flag& a = g.flags()[fa];
    const Flag& b = g.flags()[fb];
    return !g.on_line(a.point, b.line) && !g.on_line(b.point, a.line);
}

bool is_compatible(const Geometry& g, const Flag& a, const Flag& b) {
    g.flag_index(a.point, a.line);  // validates incidence
    g.flag_index(b.point, b.line);
    return !g.on_line(a.point, b.line) && !g.on_line(b.point, a.line);
}

FlagGraph relation_graph(const Geometry& g, Rel rel) {
    if (rel == Rel::Equal)
        fail(errc::invalid, "relation graphs are defined for intersecting, parallel and skew lines only");
    int nf = (int)g.flags().size();
    if (nf > caps().vertices) fail(errc::cap, "flag count exceeds the vertex cap");
    int nl = (int)g.lines().size();
    std::vector<char> wanted((size_t)nl * nl, 0);
    for (int l1 = 0; l1 < nl; ++l1)
        for (int l2 = 0; l2 < nl; ++l2)
            wanted[(size_t)l1 * nl + l2] = g.classify(l1, l2) == rel;
    FlagGraph fg;
    fg.adj.resize(nf);
    for (int i = 0; i < nf; ++i)
        for (int j = i + 1; j < nf; ++j) {
            if (!wanted[(size_t)g.flags()[i].line * nl + g.flags()[j].line]) continue;
            if (!is_compatible(g, i, j)) continue;
            fg.adj[i].push_back(j);
            fg.adj[j].push_back(i);
        }
    sort_adjacency(fg);
    fg.meta = geometry_meta(g);
    fg.meta["family"] = "relation";
    fg.meta["relation"] = rel_name(rel);
    finalize_meta(fg);
    return fg;
}

Orbital orbital_of(const Geometry& g, const Group& G, int fa, int fb) {
    if (!is_compatible(g, fa, fb))
        fail(errc::precondition,
             "seed flags are not compatible: a point lies on the other flag's line");
    int nf = (int)g.flags().size();
    Orbital o;
    o.nflags = nf;
    o.group_name = G.name;
    o.pairs = orbit_pairs(flag_perms(g, G), nf, pair_code(g, fa, fb));
    std::sort(o.pairs.begin(), o.pairs.end());
    o.seed = o.pairs.front();
    return o;
}

bool orbital_contains(const Orbital& o, int fa, int fb) {
    long long code = (long long)fa * o.nflags + fb;
    return std::binary_search(o.pairs.begin(), o.pairs.end(), code);
}

bool is_self_paired(const Orbital& o) {
    int fa = (int)(o.seed / o.nflags);
    int fb = (int)(o.seed % o.nflags);
    return orbital_contains(o, fb, fa);
}

FlagGraph graph_from_orbital(const Geometry& g, const Orbital& o) {
    if ((int)g.flags().size() != o.nflags)
        fail(errc::invalid, "orbital was built over a different flag set");
    if (!is_self_paired(o))
        fail(errc::precondition,
             "orbital is not self-paired: the reversed seed pair is not in the orbital");
    FlagGraph fg;
    fg.adj.resize(o.nflags);
    for (long long code : o.pairs) {
        int a = (int)(code / o.nflags), b = (int)(code % o.nflags);
        if (a < b) {
            fg.adj[a].push_back(b);
            fg.adj[b].push_back(a);
        }
    }
    sort_adjacency(fg);
    fg.meta = geometry_meta(g);
    fg.meta["family"] = "orbital";
    fg.meta["group"] = o.group_name;
    fg.meta["seed"] = {g.flag_label((int)(o.seed / o.nflags)),
                       g.flag_label((int)(o.seed % o.nflags))};
    finalize_meta(fg);
    return fg;
}

FlagGraph gamma_gc(const Geometry& g, const StdParams& sp, int r) {
    const Field& f = g.field();
    if (g.n() != 2) fail(errc::invalid, "this family lives on two-dimensional geometries");
    if (r <= 0 || r >= f.q()) fail(errc::invalid, "exponent r must satisfy 0 < r < q");
    check_std_params(f, sp);
    int c = f.pow(f.omega(), r);

    Group G = sl2_semidirect_h(g, sp);

    int zero = g.point_index(std::vector<int>(2, 0));
    int e1 = g.point_index({1, 0});
    int e2 = g.point_index({0, 1});
    int ce2 = g.point_index({0, c});
    int line_e1 = g.line_through(zero, e1);
    int line_e2 = g.line_through(zero, e2);
    int fa = g.flag_index(e1, line_e1);
    int fb = g.flag_index(ce2, line_e2);

    // Algebraic criterion: the orbital is self-paired exactly when some map
    // u -> A u^phi with A = [[0, 1/c^phi], [c, 0]] fixes the origin inside G.
    bool algebraic = false;
    for (int j = 0; j < f.ell() && !algebraic; ++j) {
        int cphi = f.frobenius(c, j);
        Map m = map_make(g, {0, f.inv(cphi), c, 0}, {0, 0}, j);
        if (membership_sl_h(g, m, sp)) algebraic = true;
    }

    Orbital o = orbital_of(g, G, fa, fb);
    bool direct = orbital_contains(o, fb, fa);
    if (algebraic != direct)
        fail(errc::internal,
             "self-paired checks disagree: algebraic stabilizer membership says " +
                 std::string(algebraic ? "yes" : "no") + " but reversed-seed membership says " +
                 std::string(direct ? "yes" : "no"));
    if (!direct)
        fail(errc::precondition,
             "no graph for these parameters: the orbital with c = omega^" + std::to_string(r) +
                 " is not self-paired under this group");

    FlagGraph fg = graph_from_orbital(g, o);

    // The valency must be (q^2 - q) times the orbit length of c under the
    // group of maps x -> a x^phi extracted from the point stabilizer.
    std::vector<GL1> lambda = gl1_closure(f, gl1_generators(f, sp));
    std::set<int> corbit;
    for (const GL1& h : lambda) corbit.insert(gl1_apply(f, h, c));
    long long lc = (long long)corbit.size();
    long long expected = (long long)(f.q() * f.q() - f.q()) * lc;
    for (const auto& row : fg.adj)
        if ((long long)row.size() != expected)
            fail(errc::internal, "graph valency " + std::to_string(row.size()) +
                                     " does not match (q^2-q) times the orbit length of c = " +
                                     std::to_string(expected));

    fg.meta = geometry_meta(g);
    fg.meta["family"] = "gamma_gc";
    fg.meta["t"] = sp.t;
    fg.meta["e"] = sp.e;
    fg.meta["s"] = sp.s;
    fg.meta["r"] = r;
    fg.meta["c"] = c;
    finalize_meta(fg);
    return fg;
}

std::vector<Orbital> selfpaired_orbital_census(const Geometry& g, const Group& G) {
    if (g.n() != 2) fail(errc::invalid, "the census is defined on two-dimensional geometries");
    long long nf = (long long)g.flags().size();
    if (nf * nf > caps().orbit) fail(errc::cap, "flag-pair count exceeds the orbit cap");
    auto perms = flag_perms(g, G);
    std::vector<char> seen(nf * nf, 0);
    std::vector<Orbital> out;
    for (int a = 0; a < (int)nf; ++a)
        for (int b = 0; b < (int)nf; ++b) {
            if (seen[(size_t)a * nf + b] || !is_compatible(g, a, b)) continue;
            Orbital o;
            o.nflags = (int)nf;
            o.group_name = G.name;
            o.pairs = orbit_pairs(perms, nf, (long long)a * nf + b);
            std::sort(o.pairs.begin(), o.pairs.end());
            o.seed = o.pairs.front();
            for (long long code : o.pairs) seen[code] = 1;
            if (is_self_paired(o)) out.push_back(std::move(o));
        }
    return out;
}

std::vector<int> fiber_of_point(const Geometry& g, int point) {
    std::vector<int> out;
    for (int line : g.lines_through(point)) out.push_back(g.flag_index(point, line));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace afg
