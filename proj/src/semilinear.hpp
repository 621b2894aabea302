#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gammal1.hpp"
#include "geometry.hpp"

namespace afg {

// t(A, v, theta^k): u -> A u^(theta^k) + v, the Frobenius applied first.
// A is n x n row-major, invertible; v a coordinate vector.
struct Map {
    std::vector<int> A;
    std::vector<int> v;
    int k;
    friend bool operator==(const Map&, const Map&) = default;
    friend auto operator<=>(const Map&, const Map&) = default;
};

struct Group {
    std::string name;
    std::vector<Map> gens;
};

Map map_make(const Geometry& g, std::vector<int> A, std::vector<int> v, int k);
Map map_identity(const Geometry& g);
Map map_compose(const Geometry& g, const Map& a, const Map& b);  // apply b first
Map map_inverse(const Geometry& g, const Map& m);

int apply_point(const Geometry& g, const Map& m, int point);
int apply_line(const Geometry& g, const Map& m, int line);
int apply_flag(const Geometry& g, const Map& m, int flag);

int mat_det(const Field& f, int n, const std::vector<int>& A);
std::vector<int> mat_inv(const Field& f, int n, const std::vector<int>& A);

// Per-generator permutations of points / lines / flags.
std::vector<std::vector<int>> point_perms(const Geometry& g, const Group& G);
std::vector<std::vector<int>> line_perms(const Geometry& g, const Group& G);
std::vector<std::vector<int>> flag_perms(const Geometry& g, const Group& G);

// BFS closure of seed under the permutations, in discovery order.
std::vector<int> orbit_ints(const std::vector<std::vector<int>>& perms, int seed);

// Orbit on ordered pairs (x, y) encoded as x * domain + y, acting diagonally.
std::vector<long long> orbit_pairs(const std::vector<std::vector<int>>& perms, long long domain,
                                   long long seed_code);

bool is_transitive(const std::vector<std::vector<int>>& perms, const std::vector<int>& domain);

// Full element list / order of the generated group (cap-checked).
std::vector<Map> materialize(const Geometry& g, const Group& G);
long long group_order(const Geometry& g, const Group& G);

// Schreier-generator stabilizers.  `state` is an integer code; `step` applies
// generator i to a state.  The seed's orbit is closed with a transversal and
// the Schreier generators of the stabilizer are returned, deduplicated.
Group stabilizer_generic(const Geometry& g, const Group& G, long long seed,
                         const std::function<long long(long long, int)>& step);
Group stabilizer_point(const Geometry& g, const Group& G, int point);
Group stabilizer_point_pair(const Geometry& g, const Group& G, int u, int v);
Group stabilizer_flag(const Geometry& g, const Group& G, int flag);
Group stabilizer_line(const Geometry& g, const Group& G, int line);

// Named constructions.
Group translations(const Geometry& g);
Group asl(const Geometry& g);
Group agl(const Geometry& g);
Group agammal(const Geometry& g);
// One-dimensional affine groups over GF(q^n) acting on AG(n,q) through the
// coordinate bijection F_{q^n} = F_q-span of {1, W, ..., W^{n-1}}.
Group agl1(const Geometry& g);
Group agammal1(const Geometry& g);
// G with G_0 = SL(2,q) x| H, Lambda(H) = <w^t, theta^s w^e> (standard form).
Group sl2_semidirect_h(const Geometry& g, const StdParams& sp);
// G with G_0 = SL(2,p) x| <C>, C = diag(1, ell_elt), q = p prime.
Group sl2p_c(const Geometry& g, int ell_elt);

// Membership of t(A, 0, k) in SL(2,q) x| H: true iff (det A, k) lies in
// Lambda(H).  Errors on nonzero translation part.
bool membership_sl_h(const Geometry& g, const Map& m, const StdParams& sp);

}  // namespace afg
