#include "export.hpp"

#include <algorithm>
#include <unordered_set>

#include "error.hpp"

namespace afg {

std::string to_edge_list(const Geometry& g, const FlagGraph& fg) {
    int nf = (int)g.flags().size();
    if ((int)fg.adj.size() != nf)
        fail(errc::invalid, "graph was built over a different flag set");
    std::vector<std::string> labels(nf);
    for (int i = 0; i < nf; ++i) labels[i] = g.flag_label(i);
    std::vector<std::string> lines;
    for (int u = 0; u < nf; ++u)
        for (int v : fg.adj[u]) {
            if (v <= u) continue;
            const std::string& a = labels[u];
            const std::string& b = labels[v];
            lines.push_back(a <= b ? a + '\t' + b : b + '\t' + a);
        }
    std::sort(lines.begin(), lines.end());
    std::string out = "# " + fg.meta.dump() + "\n";
    for (const std::string& ln : lines) {
        out += ln;
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json edge_list_meta(const std::string& text) {
    size_t eol = text.find('\n');
    std::string first = text.substr(0, eol);
    if (first.size() < 2 || first[0] != '#' || first[1] != ' ')
        fail(errc::invalid, "edge list has no '# {json}' meta header line");
    nlohmann::ordered_json meta =
        nlohmann::ordered_json::parse(first.substr(2), nullptr, /*allow_exceptions=*/false);
    if (meta.is_discarded() || !meta.is_object())
        fail(errc::invalid, "meta header is not a json object");
    return meta;
}

namespace {
long long meta_int(const nlohmann::ordered_json& meta, const char* key) {
    auto it = meta.find(key);
    if (it == meta.end() || !it->is_number_integer())
        fail(errc::invalid, std::string("meta header lacks integer field '") + key + "'");
    return it->get<long long>();
}
}  // namespace

Geometry geometry_from_meta(const nlohmann::ordered_json& meta) {
    long long n = meta_int(meta, "n");
    long long p = meta_int(meta, "p");
    long long ell = meta_int(meta, "ell");
    if (n < 2 || n > 16 || p < 2 || ell < 1)
        fail(errc::invalid, "meta header describes no geometry: need n >= 2, p >= 2, ell >= 1");
    Geometry g((int)n, Field((int)p, (int)ell));
    if (meta.contains("q") && meta_int(meta, "q") != g.q())
        fail(errc::invalid, "meta header is inconsistent: q does not equal p^ell");
    return g;
}

FlagGraph from_edge_list(const Geometry& g, const std::string& text) {
    nlohmann::ordered_json meta = edge_list_meta(text);
    if (meta_int(meta, "n") != g.n() || meta_int(meta, "p") != g.field().p() ||
        meta_int(meta, "ell") != g.field().ell())
        fail(errc::invalid, "meta header describes a different geometry");
    int nf = (int)g.flags().size();
    FlagGraph fg;
    fg.adj.resize(nf);
    fg.meta = meta;
    std::unordered_set<long long> seen;
    size_t pos = text.find('\n');
    pos = pos == std::string::npos ? text.size() : pos + 1;
    int lineno = 1;
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        std::string line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineno;
        if (line.empty()) continue;
        size_t tab = line.find('\t');
        if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
            fail(errc::invalid, "line " + std::to_string(lineno) +
                                    " is not a tab-separated pair of flag labels");
        int a = g.parse_flag_label(line.substr(0, tab));
        int b = g.parse_flag_label(line.substr(tab + 1));
        if (a == b)
            fail(errc::invalid,
                 "line " + std::to_string(lineno) + " joins a flag to itself");
        long long code = (long long)std::min(a, b) * nf + std::max(a, b);
        if (!seen.insert(code).second)
            fail(errc::invalid, "line " + std::to_string(lineno) + " repeats an edge");
        fg.adj[a].push_back(b);
        fg.adj[b].push_back(a);
    }
    for (auto& row : fg.adj) std::sort(row.begin(), row.end());
    return fg;
}

nlohmann::ordered_json invariant_json(const InvariantReport& rep) {
    nlohmann::ordered_json j;
    j["order"] = rep.order;
    nlohmann::ordered_json degs;
    for (const auto& [d, cnt] : rep.degree_multiset) degs[std::to_string(d)] = cnt;
    j["degrees"] = degs;
    j["girth"] = rep.girth == kInfinite ? nlohmann::ordered_json() : nlohmann::ordered_json(rep.girth);
    j["diameter"] =
        rep.diameter == kInfinite ? nlohmann::ordered_json() : nlohmann::ordered_json(rep.diameter);
    j["components"] = (long long)rep.components.size();
    std::vector<long long> sizes;
    for (const auto& comp : rep.components) sizes.push_back((long long)comp.size());
    j["component_sizes"] = sizes;
    j["component_diameters"] = rep.component_diameters;
    return j;
}

nlohmann::ordered_json quotient_json(const QuotientReport& rep) {
    nlohmann::ordered_json j;
    j["fibers"] = (long long)rep.fibers.size();
    j["fiber_size"] = rep.fibers.empty() ? 0LL : (long long)rep.fibers.front().size();
    j["quotient_complete"] = rep.quotient_complete;
    j["almost_multicover"] = rep.almost_multicover;
    j["multiplicity"] = rep.multiplicity;
    j["block_size"] = rep.block_size;
    return j;
}

nlohmann::ordered_json design_json(const Geometry& g, const IncidenceStructure& d) {
    nlohmann::ordered_json j;
    j["v"] = d.v;
    j["k"] = d.k;
    j["lambda"] = d.lambda;
    j["b"] = (long long)d.blocks.size();
    nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
    for (const auto& blk : d.blocks) {
        nlohmann::ordered_json one = nlohmann::ordered_json::array();
        for (int pt : blk) one.push_back(g.point_label(pt));
        blocks.push_back(one);
    }
    j["blocks"] = blocks;
    return j;
}

nlohmann::ordered_json feasibility_json(const Feasibility& f) {
    nlohmann::ordered_json j;
    j["transitive"] = f.transitive;
    j["a1"] = f.a1;
    j["a2"] = f.a2;
    j["a3"] = f.a3;
    j["a4"] = f.a4;
    j["feasible"] = f.feasible();
    j["diagnostics"] = f.diagnostics;
    return j;
}

}  // namespace afg
