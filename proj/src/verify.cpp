#include "verify.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"

namespace afg {

namespace {

std::vector<int> sorted_orbit(const std::vector<std::vector<int>>& perms, int seed) {
    std::vector<int> orb = orbit_ints(perms, seed);
    std::sort(orb.begin(), orb.end());
    return orb;
}

}  // namespace

Feasibility feasibility_check(const Geometry& g, const Group& G) {
    Feasibility out;
    std::string& diag = out.diagnostics;
    int nf = (int)g.flags().size();
    auto fperms = flag_perms(g, G);

    out.transitive = (int)orbit_ints(fperms, 0).size() == nf;
    if (!out.transitive) diag += "the group is not transitive on flags\n";

    out.a1 = true;
    for (int pt = 0; pt < g.num_points() && out.a1; ++pt)
        if (g.lines_through(pt).size() < 3) {
            out.a1 = false;
            diag += "point " + g.point_label(pt) + " lies on only " +
                    std::to_string(g.lines_through(pt).size()) + " lines\n";
        }

    out.a2 = true;
    for (int pt = 0; pt < g.num_points() && out.a2; ++pt) {
        const std::vector<int>& through = g.lines_through(pt);
        for (size_t i = 0; i < through.size() && out.a2; ++i)
            for (size_t j = i + 1; j < through.size() && out.a2; ++j) {
                const std::vector<int>&A = g.line_points(through[i]);
                const std::vector<int>&B = g.line_points(through[j]);
                std::vector<int> common;
                std::set_intersection(A.begin(), A.end(), B.begin(), B.end(),
                                      std::back_inserter(common));
                if (common != std::vector<int>{pt}) {
                    out.a2 = false;
                    diag += "lines through point " + g.point_label(pt) +
                            " share more than that point\n";
                }
            }
    }

    // stabilizer of each flag-orbit representative must be transitive on the
    // other points of its line
    out.a3 = true;
    {
        std::vector<char> seen(nf, 0);
        for (int f = 0; f < nf && out.a3; ++f) {
            if (seen[f]) continue;
            for (int x : orbit_ints(fperms, f)) seen[x] = 1;
            int sigma = g.flags()[f].point, line = g.flags()[f].line;
            Group stab = stabilizer_flag(g, G, f);
            std::vector<int> rest;
            for (int pt : g.line_points(line))
                if (pt != sigma) rest.push_back(pt);
            std::vector<int> orb = sorted_orbit(point_perms(g, stab), rest[0]);
            if (orb != rest) {
                out.a3 = false;
                diag += "the stabilizer of flag " + g.flag_label(f) + " reaches only " +
                        std::to_string(orb.size()) + " of the " + std::to_string(rest.size()) +
                        " other points of its line\n";
            }
        }
    }

    // stabilizer of each ordered point-pair representative must be transitive
    // on the flags at the first point avoiding the joining line
    out.a4 = true;
    {
        int np = g.num_points();
        auto pperms = point_perms(g, G);
        std::vector<char> seen((size_t)np * np, 0);
        for (int sigma = 0; sigma < np && out.a4; ++sigma)
            for (int tau = 0; tau < np && out.a4; ++tau) {
                if (sigma == tau || seen[(size_t)sigma * np + tau]) continue;
                for (long long code : orbit_pairs(pperms, np, (long long)sigma * np + tau))
                    seen[code] = 1;
                int join = g.line_through(sigma, tau);
                Group stab = stabilizer_point_pair(g, G, sigma, tau);
                std::vector<int> target;
                for (int line : g.lines_through(sigma))
                    if (line != join) target.push_back(g.flag_index(sigma, line));
                std::sort(target.begin(), target.end());
                std::vector<int> orb = sorted_orbit(flag_perms(g, stab), target[0]);
                if (orb != target) {
                    out.a4 = false;
                    diag += "the stabilizer of points " + g.point_label(sigma) + ", " +
                            g.point_label(tau) + " reaches only " + std::to_string(orb.size()) +
                            " of the " + std::to_string(target.size()) +
                            " flags at the first point avoiding their joining line\n";
                }
            }
    }
    return out;
}

ValencyPrediction predict_valency(const Field& f, const StdParams& sp, int r) {
    check_std_params(f, sp);
    if (r <= 0 || r >= f.q()) fail(errc::invalid, "exponent r must satisfy 0 < r < q");
    int q = f.q(), t = sp.t, e = sp.e, s = sp.s;
    long long ps = 1;
    for (int u = 0; u < s; ++u) ps *= f.p();

    // smallest j with t dividing (e + r(p^s - 1)) (p^{sj} - 1)/(p^s - 1),
    // equivalently: the multiplier group returns c = omega^r to itself after
    // j Frobenius steps of width s
    int jmax = f.ell() / s;
    long long factor = (e % t + (long long)(r % t) * ((ps - 1) % t)) % t;
    int j0 = jmax;
    long long geom = 0, pw = 1;  // geom = (p^{sj}-1)/(p^s-1) mod t
    for (int j = 1; j <= jmax; ++j) {
        geom = (geom + pw) % t;
        pw = pw * (ps % t) % t;
        if (factor * geom % t == 0) {
            j0 = j;
            break;
        }
    }
    ValencyPrediction out;
    out.t = t;
    out.e = e;
    out.s = s;
    out.r = r;
    out.i = s * j0;
    out.ell_c = (long long)j0 * ((q - 1) / t);
    out.valency = (long long)(q * (long long)q - q) * out.ell_c;
    long long closed = (long long)out.i * q * (q - 1) * (q - 1) / ((long long)t * s);
    if (closed != out.valency)
        fail(errc::internal, "valency closed form " + std::to_string(closed) +
                                 " disagrees with (q^2-q) times the orbit length " +
                                 std::to_string(out.valency));

    // cross-check the divisibility rule against a direct orbit enumeration
    std::vector<GL1> lambda = gl1_closure(f, gl1_generators(f, sp));
    int c = f.pow(f.omega(), r);
    std::set<int> orbit;
    for (const GL1& h : lambda) orbit.insert(gl1_apply(f, h, c));
    if ((long long)orbit.size() != out.ell_c)
        fail(errc::internal, "divisibility rule predicts orbit length " +
                                 std::to_string(out.ell_c) + " for c = omega^" + std::to_string(r) +
                                 " but direct enumeration gives " + std::to_string(orbit.size()));
    return out;
}

}  // namespace afg
