#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "error.hpp"
#include "export.hpp"
#include "flaggraph.hpp"
#include "invariants.hpp"
#include "verify.hpp"

using namespace afg;

namespace {

bool sorted_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) lines.push_back(line);
    return std::is_sorted(lines.begin(), lines.end());
}

}  // namespace

TEST_CASE("edge list round trip") {
    Geometry g(2, Field(3, 1));
    for (Rel rel : {Rel::Intersecting, Rel::Parallel}) {
        FlagGraph fg = relation_graph(g, rel);
        std::string text = to_edge_list(g, fg);
        CHECK(sorted_lines(text));
        FlagGraph back = from_edge_list(g, text);
        CHECK(back.adj == fg.adj);
        CHECK(back.meta == fg.meta);
        CHECK(to_edge_list(g, back) == text);  // byte-identical re-export
    }

    // Edge count matches the text line count.
    FlagGraph plus = relation_graph(g, Rel::Intersecting);
    std::string text = to_edge_list(g, plus);
    long long edges = 0;
    for (const auto& row : plus.adj) edges += (long long)row.size();
    edges /= 2;
    CHECK((long long)std::count(text.begin(), text.end(), '\n') == edges + 1);
}

TEST_CASE("edgeless graph exports as a bare header") {
    Geometry g(2, Field(3, 1));
    FlagGraph skew = relation_graph(g, Rel::Skew);
    std::string text = to_edge_list(g, skew);
    CHECK(text.substr(0, 2) == "# ");
    CHECK(std::count(text.begin(), text.end(), '\n') == 1);
    FlagGraph back = from_edge_list(g, text);
    CHECK(back.adj == skew.adj);
}

TEST_CASE("meta carries order and valency") {
    Geometry g(2, Field(3, 1));
    FlagGraph plus = relation_graph(g, Rel::Intersecting);
    CHECK(plus.meta["order"] == 36);
    CHECK(plus.meta["valency"] == 12);
    CHECK(relation_graph(g, Rel::Skew).meta["valency"] == 0);

    nlohmann::ordered_json meta = edge_list_meta(to_edge_list(g, plus));
    CHECK(meta == plus.meta);
    Geometry g2 = geometry_from_meta(meta);
    CHECK(g2.n() == 2);
    CHECK(g2.q() == 3);

    Geometry g94(2, Field(3, 2));
    FlagGraph gc = gamma_gc(g94, StdParams{2, 0, 1}, 1);
    CHECK(gc.meta["order"] == 810);
    CHECK(gc.meta["valency"] == 288);
    FlagGraph back = from_edge_list(g94, to_edge_list(g94, gc));
    CHECK(back.adj == gc.adj);
}

TEST_CASE("malformed edge lists are rejected") {
    Geometry g(2, Field(3, 1));
    FlagGraph plus = relation_graph(g, Rel::Intersecting);
    std::string text = to_edge_list(g, plus);
    std::string header = text.substr(0, text.find('\n') + 1);

    auto code = [&](const std::string& t) {
        try {
            from_edge_list(g, t);
            return 0;
        } catch (const error& e) {
            return (int)e.code;
        }
    };
    const int invalid = (int)errc::invalid;

    CHECK(code("hello\nworld\n") == invalid);          // no header
    CHECK(code("# [1,2]\n") == invalid);               // meta not an object
    CHECK(code("# {\"n\":2}\n") == invalid);           // missing fields
    CHECK(code(header + "garbage\n") == invalid);      // no tab
    CHECK(code(header + "a\tb\tc\n") == invalid);      // two tabs
    CHECK(code(header + "0,0|0,0;0,1\t9,9|0,0;1,0\n") == invalid);  // bad coordinate
    CHECK(code(header + "0,0|0,0;0,1\t0,0|0,0;0,1\n") == invalid);  // loop
    std::string dup = header + "0,0|0,0;0,1\t1,0|1,0;0,1\n0,0|0,0;0,1\t1,0|1,0;0,1\n";
    CHECK(code(dup) == invalid);  // repeated edge

    // Meta describing a different geometry is rejected.
    Geometry g4(2, Field(2, 2));
    std::string other = to_edge_list(g4, relation_graph(g4, Rel::Parallel));
    CHECK(code(other) == invalid);

    // Reader accepts unsorted input and canonicalizes on re-export.
    std::istringstream in(text);
    std::vector<std::string> lines;
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) lines.push_back(line);
    std::reverse(lines.begin(), lines.end());
    std::string shuffled = header;
    for (const auto& l : lines) shuffled += l + "\n";
    FlagGraph back = from_edge_list(g, shuffled);
    CHECK(to_edge_list(g, back) == text);
}

TEST_CASE("report serialization has stable keys") {
    Geometry g(2, Field(2, 2));
    FlagGraph par = relation_graph(g, Rel::Parallel);
    InvariantReport rep = invariant_report(par.adj);
    nlohmann::ordered_json j = invariant_json(rep);
    CHECK(j["order"] == 80);
    CHECK(j["degrees"] == nlohmann::ordered_json({{"12", 80}}));
    CHECK(j["girth"] == 3);
    CHECK(j["diameter"].is_null());
    CHECK(j["components"] == 5);
    CHECK(j["component_sizes"][0] == 16);
    CHECK(j["component_diameters"][4] == 2);

    // Key order is fixed by construction.
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"order", "degrees", "girth", "diameter", "components",
                                           "component_sizes", "component_diameters"});

    FlagGraph plus = relation_graph(g, Rel::Intersecting);
    QuotientReport qr = quotient_analysis(g, plus);
    nlohmann::ordered_json qj = quotient_json(qr);
    CHECK(qj["fibers"] == 16);
    CHECK(qj["fiber_size"] == 5);
    CHECK(qj["quotient_complete"] == true);
    CHECK(qj["almost_multicover"] == true);
    CHECK(qj["multiplicity"] == 3);
    CHECK(qj["block_size"] == 5);

    Group G = agammal(g);
    IncidenceStructure d = design_recover(g, plus, G);
    nlohmann::ordered_json dj = design_json(g, d);
    CHECK(dj["v"] == 16);
    CHECK(dj["k"] == 4);
    CHECK(dj["lambda"] == 1);
    CHECK(dj["b"] == 20);
    CHECK(dj["blocks"].size() == 20);
    CHECK(dj["blocks"][0].size() == 4);
    CHECK(dj["blocks"][0][0].is_string());

    Feasibility fe = feasibility_check(g, G);
    nlohmann::ordered_json fj = feasibility_json(fe);
    CHECK(fj["feasible"] == true);
    CHECK(fj["a4"] == true);
}

TEST_CASE("exports are deterministic") {
    Geometry g(2, Field(5, 1));
    FlagGraph a = gamma_gc(g, StdParams{2, 0, 1}, 1);
    FlagGraph b = gamma_gc(g, StdParams{2, 0, 1}, 1);
    CHECK(to_edge_list(g, a) == to_edge_list(g, b));
}
