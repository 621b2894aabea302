#include "semilinear.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "error.hpp"

namespace afg {
namespace {

int frob_vec(const Field& f, std::vector<int>& v, int k) {
    for (int& x : v) x = f.frobenius(x, k);
    return 0;
}

std::vector<int> mat_mul(const Field& f, int n, const std::vector<int>& A, const std::vector<int>& B) {
    std::vector<int> C(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int kk = 0; kk < n; ++kk) {
            int a = A[i * n + kk];
            if (a == 0) continue;
            for (int j = 0; j < n; ++j) C[i * n + j] = f.add(C[i * n + j], f.mul(a, B[kk * n + j]));
        }
    return C;
}

std::vector<int> mat_vec(const Field& f, int n, const std::vector<int>& A, const std::vector<int>& x) {
    std::vector<int> y(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) y[i] = f.add(y[i], f.mul(A[i * n + j], x[j]));
    return y;
}

}  // namespace

int mat_det(const Field& f, int n, const std::vector<int>& A) {
    std::vector<int> m = A;
    int det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[r * n + col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(m[pivot * n + j], m[col * n + j]);
            det = f.neg(det);
        }
        det = f.mul(det, m[col * n + col]);
        int inv = f.inv(m[col * n + col]);
        for (int r = col + 1; r < n; ++r) {
            int factor = f.mul(m[r * n + col], inv);
            if (factor == 0) continue;
            for (int j = col; j < n; ++j)
                m[r * n + j] = f.sub(m[r * n + j], f.mul(factor, m[col * n + j]));
        }
    }
    return det;
}

std::vector<int> mat_inv(const Field& f, int n, const std::vector<int>& A) {
    std::vector<int> m = A, inv(n * n, 0);
    for (int i = 0; i < n; ++i) inv[i * n + i] = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[r * n + col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) fail(errc::invalid, "matrix is singular");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m[pivot * n + j], m[col * n + j]);
                std::swap(inv[pivot * n + j], inv[col * n + j]);
            }
        int s = f.inv(m[col * n + col]);
        for (int j = 0; j < n; ++j) {
            m[col * n + j] = f.mul(m[col * n + j], s);
            inv[col * n + j] = f.mul(inv[col * n + j], s);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            int factor = m[r * n + col];
            if (factor == 0) continue;
            for (int j = 0; j < n; ++j) {
                m[r * n + j] = f.sub(m[r * n + j], f.mul(factor, m[col * n + j]));
                inv[r * n + j] = f.sub(inv[r * n + j], f.mul(factor, inv[col * n + j]));
            }
        }
    }
    return inv;
}

Map map_make(const Geometry& g, std::vector<int> A, std::vector<int> v, int k) {
    int n = g.n();
    const Field& f = g.field();
    if ((int)A.size() != n * n || (int)v.size() != n)
        fail(errc::invalid, "map dimensions do not match the ambient space");
    k %= f.ell();
    if (k < 0) k += f.ell();
    if (mat_det(f, n, A) == 0) fail(errc::invalid, "linear part is singular");
    return {std::move(A), std::move(v), k};
}

Map map_identity(const Geometry& g) {
    int n = g.n();
    std::vector<int> A(n * n, 0);
    for (int i = 0; i < n; ++i) A[i * n + i] = 1;
    return {std::move(A), std::vector<int>(n, 0), 0};
}

Map map_compose(const Geometry& g, const Map& a, const Map& b) {
    // u -> a(b(u)) = A_a (A_b u^(th_b) + v_b)^(th_a) + v_a
    //             = (A_a A_b^(th_a)) u^(th_a th_b) + A_a v_b^(th_a) + v_a
    const Field& f = g.field();
    int n = g.n();
    std::vector<int> Bf = b.A, vf = b.v;
    frob_vec(f, Bf, a.k);
    frob_vec(f, vf, a.k);
    std::vector<int> A = mat_mul(f, n, a.A, Bf);
    std::vector<int> v = mat_vec(f, n, a.A, vf);
    for (int i = 0; i < n; ++i) v[i] = f.add(v[i], a.v[i]);
    return {std::move(A), std::move(v), (a.k + b.k) % f.ell()};
}

Map map_inverse(const Geometry& g, const Map& m) {
    const Field& f = g.field();
    int n = g.n();
    int kinv = (f.ell() - m.k) % f.ell();
    std::vector<int> Ainv = mat_inv(f, n, m.A);
    std::vector<int> w = mat_vec(f, n, Ainv, m.v);
    std::vector<int> B = Ainv;
    frob_vec(f, B, kinv);
    frob_vec(f, w, kinv);
    for (int& x : w) x = f.neg(x);
    return {std::move(B), std::move(w), kinv};
}

int apply_point(const Geometry& g, const Map& m, int point) {
    const Field& f = g.field();
    std::vector<int> c = g.point_coords(point);
    frob_vec(f, c, m.k);
    std::vector<int> y = mat_vec(f, g.n(), m.A, c);
    for (int i = 0; i < g.n(); ++i) y[i] = f.add(y[i], m.v[i]);
    return g.point_index(y);
}

int apply_line(const Geometry& g, const Map& m, int line) {
    const auto& pts = g.line_points(line);
    return g.line_through(apply_point(g, m, pts[0]), apply_point(g, m, pts[1]));
}

int apply_flag(const Geometry& g, const Map& m, int flag) {
    const Flag& fl = g.flags()[flag];
    return g.flag_index(apply_point(g, m, fl.point), apply_line(g, m, fl.line));
}

std::vector<std::vector<int>> point_perms(const Geometry& g, const Group& G) {
    std::vector<std::vector<int>> perms;
    for (const Map& m : G.gens) {
        std::vector<int> p(g.num_points());
        for (int i = 0; i < g.num_points(); ++i) p[i] = apply_point(g, m, i);
        perms.push_back(std::move(p));
    }
    return perms;
}

std::vector<std::vector<int>> line_perms(const Geometry& g, const Group& G) {
    std::vector<std::vector<int>> perms;
    for (const Map& m : G.gens) {
        std::vector<int> p(g.lines().size());
        for (size_t i = 0; i < g.lines().size(); ++i) p[i] = apply_line(g, m, (int)i);
        perms.push_back(std::move(p));
    }
    return perms;
}

std::vector<std::vector<int>> flag_perms(const Geometry& g, const Group& G) {
    std::vector<std::vector<int>> perms;
    for (const Map& m : G.gens) {
        std::vector<int> p(g.flags().size());
        for (size_t i = 0; i < g.flags().size(); ++i) p[i] = apply_flag(g, m, (int)i);
        perms.push_back(std::move(p));
    }
    return perms;
}

std::vector<int> orbit_ints(const std::vector<std::vector<int>>& perms, int seed) {
    std::vector<int> out = {seed};
    std::unordered_set<int> seen = {seed};
    for (size_t head = 0; head < out.size(); ++head) {
        if ((long long)out.size() > caps().orbit) fail(errc::cap, "orbit exceeds the orbit cap");
        int x = out[head];
        for (const auto& p : perms)
            if (seen.insert(p[x]).second) out.push_back(p[x]);
    }
    return out;
}

std::vector<long long> orbit_pairs(const std::vector<std::vector<int>>& perms, long long domain,
                                   long long seed_code) {
    std::vector<long long> out = {seed_code};
    // flat visited array when the square fits comfortably, hash set otherwise
    if (domain * domain <= (1LL << 26)) {
        std::vector<char> seen(domain * domain, 0);
        seen[seed_code] = 1;
        for (size_t head = 0; head < out.size(); ++head) {
            if ((long long)out.size() > caps().orbit) fail(errc::cap, "orbit exceeds the orbit cap");
            long long code = out[head];
            int x = (int)(code / domain), y = (int)(code % domain);
            for (const auto& p : perms) {
                long long img = (long long)p[x] * domain + p[y];
                if (!seen[img]) {
                    seen[img] = 1;
                    out.push_back(img);
                }
            }
        }
    } else {
        std::unordered_set<long long> seen = {seed_code};
        for (size_t head = 0; head < out.size(); ++head) {
            if ((long long)out.size() > caps().orbit) fail(errc::cap, "orbit exceeds the orbit cap");
            long long code = out[head];
            int x = (int)(code / domain), y = (int)(code % domain);
            for (const auto& p : perms) {
                long long img = (long long)p[x] * domain + p[y];
                if (seen.insert(img).second) out.push_back(img);
            }
        }
    }
    return out;
}

bool is_transitive(const std::vector<std::vector<int>>& perms, const std::vector<int>& domain) {
    if (domain.empty()) fail(errc::invalid, "transitivity on an empty domain");
    std::vector<int> orb = orbit_ints(perms, domain[0]);
    std::unordered_set<int> seen(orb.begin(), orb.end());
    for (int x : domain)
        if (!seen.count(x)) return false;
    return true;
}

std::vector<Map> materialize(const Geometry& g, const Group& G) {
    std::set<Map> seen;
    std::vector<Map> out;
    out.push_back(map_identity(g));
    seen.insert(out[0]);
    for (size_t head = 0; head < out.size(); ++head) {
        if ((long long)out.size() > caps().elements) fail(errc::cap, "group order exceeds the element cap");
        Map x = out[head];
        for (const Map& gen : G.gens) {
            Map y = map_compose(g, gen, x);
            if (seen.insert(y).second) out.push_back(std::move(y));
        }
    }
    return out;
}

long long group_order(const Geometry& g, const Group& G) { return (long long)materialize(g, G).size(); }

Group stabilizer_generic(const Geometry& g, const Group& G, long long seed,
                         const std::function<long long(long long, int)>& step) {
    std::vector<long long> states = {seed};
    std::unordered_map<long long, int> pos = {{seed, 0}};
    std::vector<Map> reps = {map_identity(g)};
    for (size_t head = 0; head < states.size(); ++head) {
        if ((long long)states.size() > caps().orbit) fail(errc::cap, "orbit exceeds the orbit cap");
        for (size_t gi = 0; gi < G.gens.size(); ++gi) {
            long long img = step(states[head], (int)gi);
            if (!pos.count(img)) {
                pos.emplace(img, (int)states.size());
                states.push_back(img);
                reps.push_back(map_compose(g, G.gens[gi], reps[head]));
            }
        }
    }
    std::set<Map> gens;
    Map id = map_identity(g);
    for (size_t i = 0; i < states.size(); ++i)
        for (size_t gi = 0; gi < G.gens.size(); ++gi) {
            long long img = step(states[i], (int)gi);
            Map s = map_compose(g, map_inverse(g, reps[pos.at(img)]),
                                map_compose(g, G.gens[gi], reps[i]));
            if (!(s == id)) gens.insert(std::move(s));
        }
    Group out{"stabilizer", {gens.begin(), gens.end()}};
    if (out.gens.empty()) out.gens.push_back(id);
    return out;
}

Group stabilizer_point(const Geometry& g, const Group& G, int point) {
    auto perms = point_perms(g, G);
    return stabilizer_generic(g, G, point,
                              [perms = std::move(perms)](long long s, int gi) { return (long long)perms[gi][s]; });
}

Group stabilizer_point_pair(const Geometry& g, const Group& G, int u, int v) {
    auto perms = point_perms(g, G);
    long long P = g.num_points();
    return stabilizer_generic(g, G, (long long)u * P + v,
                              [perms = std::move(perms), P](long long s, int gi) {
                                  return (long long)perms[gi][s / P] * P + perms[gi][s % P];
                              });
}

Group stabilizer_flag(const Geometry& g, const Group& G, int flag) {
    auto perms = flag_perms(g, G);
    return stabilizer_generic(g, G, flag,
                              [perms = std::move(perms)](long long s, int gi) { return (long long)perms[gi][s]; });
}

Group stabilizer_line(const Geometry& g, const Group& G, int line) {
    auto perms = line_perms(g, G);
    return stabilizer_generic(g, G, line,
                              [perms = std::move(perms)](long long s, int gi) { return (long long)perms[gi][s]; });
}

Group translations(const Geometry& g) {
    const Field& f = g.field();
    Group G{"Translations", {}};
    Map id = map_identity(g);
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < f.ell(); ++j) {
            Map m = id;
            m.v[i] = f.pow(f.omega(), j);
            G.gens.push_back(std::move(m));
        }
    return G;
}

Group asl(const Geometry& g) {
    const Field& f = g.field();
    Group G = translations(g);
    G.name = "ASL";
    int n = g.n();
    if (n < 2) fail(errc::invalid, "SL(n,q) requires dimension at least 2");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int k = 0; k < f.ell(); ++k) {
                Map m = map_identity(g);
                m.A[i * n + j] = f.pow(f.omega(), k);
                G.gens.push_back(std::move(m));
            }
        }
    return G;
}

Group agl(const Geometry& g) {
    Group G = asl(g);
    G.name = "AGL";
    if (g.q() > 2) {
        Map m = map_identity(g);
        m.A[0] = g.field().omega();
        G.gens.push_back(std::move(m));
    }
    return G;
}

Group agammal(const Geometry& g) {
    Group G = agl(g);
    G.name = "AGammaL";
    if (g.field().ell() > 1) {
        Map m = map_identity(g);
        m.k = 1;
        G.gens.push_back(std::move(m));
    }
    return G;
}

namespace {

// The coordinate bridge between F_{q^n} and AG(n,q): big-field element codes
// <-> points, with the lift of x -> a x^(p^kb) + b to a semi-affine map.
struct SubfieldBridge {
    Field big;
    std::vector<int> to_point;    // big code -> point index
    std::vector<int> from_point;  // point index -> big code

    SubfieldBridge(const Geometry& g) : big(g.field().p(), g.field().ell() * g.n()) {
        const Field& small = g.field();
        int p = small.p();
        // embed GF(q) into GF(q^n): send the residue class of x to the least
        // root of the small modulus in the big field
        int z = -1;
        for (int cand = 0; cand < big.q(); ++cand) {
            int acc = 0, power = 1;
            for (int ci = 0; ci <= small.ell(); ++ci) {
                acc = big.add(acc, big.mul(small.modulus()[ci] % p, power));
                power = big.mul(power, cand);
            }
            if (acc == 0) {
                z = cand;
                break;
            }
        }
        if (z < 0) fail(errc::internal, "small modulus has no root in the extension field");
        embed.assign(small.q(), 0);
        for (int a = 0; a < small.q(); ++a) {
            int acc = 0, power = 1, rest = a;
            for (int d = 0; d < small.ell(); ++d) {
                acc = big.add(acc, big.mul(rest % p, power));
                rest /= p;
                power = big.mul(power, z);
            }
            embed[a] = acc;
        }
        // basis 1, W, ..., W^(n-1) over the embedded subfield
        int W = big.omega();
        std::vector<int> basis(g.n());
        for (int j = 0; j < g.n(); ++j) basis[j] = big.pow(W, j);
        to_point.assign(big.q(), -1);
        from_point.assign(big.q(), -1);
        for (int pt = 0; pt < g.num_points(); ++pt) {
            std::vector<int> c = g.point_coords(pt);
            int acc = 0;
            for (int j = 0; j < g.n(); ++j) acc = big.add(acc, big.mul(embed[c[j]], basis[j]));
            if (to_point[acc] != -1) fail(errc::internal, "subfield basis is not a basis");
            to_point[acc] = pt;
            from_point[pt] = acc;
        }
    }

    // lift x -> a x^(p^kb) + b to a semi-affine map on AG(n,q)
    Map lift(const Geometry& g, int a, int b, int kb) const {
        const Field& small = g.field();
        int n = g.n();
        int ks = kb % small.ell();
        std::vector<int> A(n * n), v(n);
        for (int j = 0; j < n; ++j) {
            // column j: coordinates of a * W^(j p^kb)
            long long pk = 1;
            for (int i = 0; i < kb; ++i) pk = pk * small.p() % (big.q() - 1);
            int img = big.mul(a, big.pow(big.omega(), (int)((long long)j * pk % (big.q() - 1))));
            std::vector<int> c = g.point_coords(to_point[img]);
            for (int i = 0; i < n; ++i) A[i * n + j] = c[i];
        }
        std::vector<int> bc = g.point_coords(to_point[b]);
        for (int i = 0; i < n; ++i) v[i] = bc[i];
        Map m = map_make(g, std::move(A), std::move(v), ks);
        // exactness check: the lift must act exactly as the 1-dim map
        for (int x = 0; x < big.q(); ++x) {
            int img = big.add(big.mul(a, big.frobenius(x, kb)), b);
            if (apply_point(g, m, to_point[x]) != to_point[img])
                fail(errc::internal, "subfield lift does not reproduce the one-dimensional action");
        }
        return m;
    }

    std::vector<int> embed;  // small code -> big code
};

Group one_dim_affine(const Geometry& g, bool with_frobenius) {
    SubfieldBridge bridge(g);
    Group G{with_frobenius ? "AGammaL1" : "AGL1", {}};
    G.gens.push_back(bridge.lift(g, bridge.big.omega(), 0, 0));
    G.gens.push_back(bridge.lift(g, 1, 1, 0));
    if (with_frobenius) G.gens.push_back(bridge.lift(g, 1, 0, 1));
    return G;
}

}  // namespace

Group agl1(const Geometry& g) { return one_dim_affine(g, false); }

Group agammal1(const Geometry& g) { return one_dim_affine(g, true); }

Group sl2_semidirect_h(const Geometry& g, const StdParams& sp) {
    if (g.n() != 2) fail(errc::invalid, "SL(2,q) x| H acts on a plane");
    const Field& f = g.field();
    check_std_params(f, sp);
    Group G = asl(g);
    G.name = "SL2_H";
    auto q_u = [&](int u, int k) {
        Map m = map_identity(g);
        m.A[3] = u;
        m.k = k % f.ell();
        return m;
    };
    G.gens.push_back(q_u(f.pow(f.omega(), sp.t), 0));
    G.gens.push_back(q_u(f.pow(f.omega(), sp.e), sp.s % f.ell()));
    return G;
}

Group sl2p_c(const Geometry& g, int ell_elt) {
    if (g.n() != 2 || g.field().ell() != 1)
        fail(errc::invalid, "SL(2,p) x| <C> acts on a plane over a prime field");
    if (ell_elt < 1 || ell_elt >= g.q())
        fail(errc::invalid, "C = diag(1, l) needs l in the multiplicative group");
    Group G = asl(g);
    G.name = "SL2p_C";
    Map m = map_identity(g);
    m.A[3] = ell_elt;
    G.gens.push_back(std::move(m));
    return G;
}

bool membership_sl_h(const Geometry& g, const Map& m, const StdParams& sp) {
    if (g.n() != 2) fail(errc::invalid, "membership test is for maps on a plane");
    for (int x : m.v)
        if (x != 0) fail(errc::invalid, "membership test requires zero translation part");
    const Field& f = g.field();
    int u = mat_det(f, 2, m.A);
    std::vector<GL1> lambda_h = gl1_closure(f, gl1_generators(f, sp));
    if (!gl1_contains(lambda_h, {u, m.k})) return false;
    // guard: the SL factor really has determinant 1
    std::vector<int> qinv = {1, 0, 0, f.inv(u)};
    if (mat_det(f, 2, mat_mul(f, 2, m.A, qinv)) != 1)
        fail(errc::internal, "determinant factorization failed");
    return true;
}

}  // namespace afg
