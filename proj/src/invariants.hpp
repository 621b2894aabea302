#pragma once

#include <map>
#include <vector>

#include "flaggraph.hpp"
#include "geometry.hpp"
#include "semilinear.hpp"

namespace afg {

// Sentinel for girth/diameter of graphs with no cycle / no connecting path.
inline constexpr int kInfinite = -1;

struct InvariantReport {
    int order = 0;
    std::map<int, int> degree_multiset;  // degree -> vertex count
    int girth = kInfinite;
    int diameter = kInfinite;  // infinite when disconnected
    std::vector<std::vector<int>> components;
    std::vector<int> component_diameters;
};

InvariantReport invariant_report(const std::vector<std::vector<int>>& adj);

struct MultipartiteShape {
    int parts;
    int part_size;
};

// Succeeds iff non-adjacency restricted to the component is an equivalence
// relation with equal class sizes (cross-class pairs are then adjacent by
// definition).  Fails with a witness otherwise.
MultipartiteShape check_complete_multipartite(const std::vector<std::vector<int>>& adj,
                                              const std::vector<int>& component);

// True iff one arc orbit under G covers all arcs.  Every generator must map
// edges to edges, otherwise an error naming the offending generator and edge
// is raised.
bool is_arc_transitive(const Geometry& g, const FlagGraph& fg, const Group& G);

struct QuotientReport {
    std::vector<std::vector<int>> fibers;        // indexed by point
    std::vector<std::vector<int>> quotient_adj;  // graph on points
    bool quotient_complete = false;
    bool almost_multicover = false;
    long long multiplicity = 0;  // blocks sharing a trace with a given one
    long long block_size = 0;
};

// Quotient of a flag graph relative to the partition into point fibers.
// Errors when a fiber contains an edge, when some adjacent block pair covers
// fewer than |B|-1 vertices, or when the multiplicity is not constant.
QuotientReport quotient_analysis(const Geometry& g, const FlagGraph& fg);

struct IncidenceStructure {
    int v = 0;
    long long k = 0;
    long long lambda = 0;
    std::vector<std::vector<int>> blocks;  // sorted point-index sets
};

// Recovers the incidence structure on points whose blocks collect, for each
// vertex a of a fiber B, the fibers whose trace on B misses exactly a,
// together with B itself.  Verifies the result is a 2-design.
IncidenceStructure design_recover(const Geometry& g, const FlagGraph& fg, const Group& G);

// Exact isomorphism test: colour refinement first, then backtracking search.
bool are_isomorphic(const std::vector<std::vector<int>>& a,
                    const std::vector<std::vector<int>>& b);

}  // namespace afg
