#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gammal1.hpp"
#include "geometry.hpp"
#include "semilinear.hpp"

namespace afg {

// Graph on the full flag set of a geometry.  Vertex i is g.flags()[i];
// adjacency lists are sorted.  `meta` records how the graph was built.
struct FlagGraph {
    std::vector<std::vector<int>> adj;
    nlohmann::ordered_json meta;
};

// Orbital of a group acting diagonally on ordered flag pairs.  Pairs are
// stored as sorted codes a * nflags + b; `seed` is the least pair.
struct Orbital {
    long long seed;
    std::vector<long long> pairs;
    std::string group_name;
    int nflags;
};

// Two flags are compatible when neither point lies on the other's line
// (which forces distinct points and distinct lines).
bool is_compatible(const Geometry& g, int fa, int fb);
bool is_compatible(const Geometry& g, const Flag& a, const Flag& b);

// Graph joining compatible flags whose lines are in the given relation.
// `rel` must be Intersecting, Parallel or Skew.
FlagGraph relation_graph(const Geometry& g, Rel rel);

Orbital orbital_of(const Geometry& g, const Group& G, int fa, int fb);

bool orbital_contains(const Orbital& o, int fa, int fb);

// True when the reversed seed (hence every reversed pair) lies in the orbital.
bool is_self_paired(const Orbital& o);

FlagGraph graph_from_orbital(const Geometry& g, const Orbital& o);

// The flag graph of T.(SL(2,q) x| H) with seed pair ((e1,<e1>),(c e2,<e2>)),
// c = omega^r.  Self-pairedness is established twice -- algebraically via
// membership of an antidiagonal map in the point stabilizer, and directly via
// reversed-seed membership -- and the two answers must agree.
FlagGraph gamma_gc(const Geometry& g, const StdParams& sp, int r);

// All self-paired orbitals of G on compatible ordered flag pairs, in
// increasing order of least seed.
std::vector<Orbital> selfpaired_orbital_census(const Geometry& g, const Group& G);

// Number of flags sharing their point with flag f, excluding f itself.
// Helper shared by the quotient analysis.
std::vector<int> fiber_of_point(const Geometry& g, int point);

}  // namespace afg
