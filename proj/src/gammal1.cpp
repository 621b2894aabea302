#include "gammal1.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"

namespace afg {

GL1 gl1_identity() { return {1, 0}; }

GL1 gl1_compose(const Field& f, const GL1& g, const GL1& h) {
    // x -> g.a * (h.a * x^(p^h.k))^(p^g.k) = g.a * h.a^(p^g.k) * x^(p^(g.k+h.k))
    return {f.mul(g.a, f.frobenius(h.a, g.k)), (g.k + h.k) % f.ell()};
}

GL1 gl1_inverse(const Field& f, const GL1& g) {
    int k = (f.ell() - g.k) % f.ell();
    return {f.inv(f.frobenius(g.a, k)), k};
}

int gl1_apply(const Field& f, const GL1& g, int x) { return f.mul(g.a, f.frobenius(x, g.k)); }

std::vector<GL1> gl1_closure(const Field& f, const std::vector<GL1>& gens) {
    for (const GL1& g : gens) {
        if (g.a <= 0 || g.a >= f.q() || g.k < 0 || g.k >= f.ell())
            fail(errc::invalid, "not a subgroup: element outside GammaL(1," + std::to_string(f.q()) + ")");
    }
    if ((long long)(f.q() - 1) * f.ell() > caps().elements)
        fail(errc::cap, "GammaL(1,q) order exceeds the element cap");
    std::set<GL1> seen = {gl1_identity()};
    std::vector<GL1> frontier = {gl1_identity()};
    while (!frontier.empty()) {
        std::vector<GL1> next;
        for (const GL1& x : frontier)
            for (const GL1& g : gens) {
                GL1 y = gl1_compose(f, g, x);
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

bool gl1_contains(const std::vector<GL1>& sorted_group, const GL1& g) {
    return std::binary_search(sorted_group.begin(), sorted_group.end(), g);
}

void check_std_params(const Field& f, const StdParams& sp) {
    int qm1 = f.q() - 1, ell = f.ell();
    auto bad = [&](const std::string& what) {
        fail(errc::invalid, "standard parameters (" + std::to_string(sp.t) + "," + std::to_string(sp.e) +
                                "," + std::to_string(sp.s) + ") violate " + what);
    };
    if (sp.t <= 0 || qm1 % sp.t != 0) bad("t > 0 and t | q-1");
    if (sp.s <= 0 || ell % sp.s != 0) bad("s > 0 and s | ell");
    long long ps = 1;
    for (int i = 0; i < sp.s; ++i) ps *= f.p();
    long long quotient = qm1 / (ps - 1);
    if (sp.e < 0 || sp.e >= sp.t || (sp.e * quotient) % sp.t != 0)
        bad("0 <= e < t and t | e(q-1)/(p^s - 1)");
}

std::vector<GL1> gl1_generators(const Field& f, const StdParams& sp) {
    check_std_params(f, sp);
    return {GL1{f.pow(f.omega(), sp.t), 0}, GL1{f.pow(f.omega(), sp.e), sp.s % f.ell()}};
}

StdParams standard_form(const Field& f, const std::vector<GL1>& gens) {
    std::vector<GL1> M = gl1_closure(f, gens);
    // t: least positive power of omega lying in M (the GL(1) part is cyclic)
    int t = f.q() - 1;
    for (int tp = 1; tp <= f.q() - 1; ++tp)
        if (gl1_contains(M, {f.pow(f.omega(), tp), 0})) {
            t = tp;
            break;
        }
    // s: least positive Frobenius exponent present in M; ell if none
    int s = f.ell(), e = 0;
    bool has_frob = false;
    for (const GL1& g : M)
        if (g.k != 0) {
            has_frob = true;
            if (g.k < s) s = g.k;
        }
    if (has_frob) {
        for (const GL1& g : M)
            if (g.k == s) {
                e = f.dlog(g.a) % t;
                break;
            }
    }
    StdParams sp{t, e, s};
    check_std_params(f, sp);
    std::vector<GL1> regen = gl1_closure(f, gl1_generators(f, sp));
    if (regen != M)
        fail(errc::internal, "standard-form regeneration does not reproduce the subgroup");
    return sp;
}

}  // namespace afg
