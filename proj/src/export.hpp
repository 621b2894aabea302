#pragma once

#include <string>

#include <json.hpp>

#include "flaggraph.hpp"
#include "invariants.hpp"
#include "verify.hpp"

namespace afg {

// Text form of a flag graph: a "# {json meta}" header line followed by one
// "label<TAB>label" line per edge, lexicographically sorted.  The labels are
// the flag serialization of the geometry, so the file is self-describing.
std::string to_edge_list(const Geometry& g, const FlagGraph& fg);

// Meta header of an edge-list text.
nlohmann::ordered_json edge_list_meta(const std::string& text);

// Geometry described by a meta block (keys n, p, ell).
Geometry geometry_from_meta(const nlohmann::ordered_json& meta);

// Inverse of to_edge_list over the given geometry.  Rejects text whose meta
// disagrees with g and lines that are not tab-separated pairs of distinct
// flag labels; duplicate edges are rejected too.
FlagGraph from_edge_list(const Geometry& g, const std::string& text);

// JSON forms of the report structs, with stable key order.
nlohmann::ordered_json invariant_json(const InvariantReport& rep);
nlohmann::ordered_json quotient_json(const QuotientReport& rep);
nlohmann::ordered_json design_json(const Geometry& g, const IncidenceStructure& d);
nlohmann::ordered_json feasibility_json(const Feasibility& f);

}  // namespace afg
