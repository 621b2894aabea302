#pragma once

#include <string>

#include "gammal1.hpp"
#include "geometry.hpp"
#include "semilinear.hpp"

namespace afg {

// Feasibility of the full flag set as a G-orbit of flags:
//   transitive: G is transitive on flags;
//   a1: every point lies on at least three lines;
//   a2: distinct lines through a common point meet only there;
//   a3: the stabilizer of a flag (s,L) is transitive on L minus s;
//   a4: the stabilizer of two distinct points s,t is transitive on the flags
//       at s whose line is not the line joining s and t.
struct Feasibility {
    bool transitive = false;
    bool a1 = false, a2 = false, a3 = false, a4 = false;
    std::string diagnostics;
    bool feasible() const { return transitive && a1 && a2 && a3 && a4; }
};

Feasibility feasibility_check(const Geometry& g, const Group& G);

struct ValencyPrediction {
    int t = 0, e = 0, s = 0, r = 0;
    int i = 0;             // smallest index satisfying the divisibility rule
    long long ell_c = 0;   // predicted orbit length of c = omega^r
    long long valency = 0;
};

// Predicted valency of the two-parameter family graph: the divisibility rule
// gives the orbit length of c = omega^r under the multiplier group, which is
// also computed by direct enumeration; the two must agree.
ValencyPrediction predict_valency(const Field& f, const StdParams& sp, int r);

}  // namespace afg
