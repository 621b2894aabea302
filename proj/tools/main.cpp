#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "afg.h"

namespace {

using json = nlohmann::ordered_json;

// Owns a malloc'd string from the library.
struct cstr {
    char* s = nullptr;
    ~cstr() { afg_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

struct graph_handle {
    afg_graph* g = nullptr;
    ~graph_handle() { afg_graph_free(g); }
};

int report_error(afg_status st) {
    std::cerr << "error: " << afg_last_error() << "\n";
    return (int)st;
}

bool prime_power(long long q, int& p, int& ell) {
    if (q < 2) return false;
    long long d = 2;
    while (d * d <= q && q % d != 0) ++d;
    if (d * d > q) d = q;
    long long m = q;
    ell = 0;
    while (m % d == 0) {
        m /= d;
        ++ell;
    }
    if (m != 1) return false;
    p = (int)d;
    return true;
}

int write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    f << content;
    if (!f.good()) {
        std::cerr << "error: cannot write '" << path << "'\n";
        return 2;
    }
    return 0;
}

std::string render_value(const json& v) {
    if (v.is_null()) return "infinite";
    return v.dump();
}

std::string verify_human(const json& rep) {
    std::ostringstream out;
    out << "meta: " << rep["meta"].dump() << "\n";
    const json& inv = rep["invariants"];
    out << "order " << inv["order"] << "; girth " << render_value(inv["girth"]) << "; diameter "
        << render_value(inv["diameter"]) << "; components " << inv["components"] << "\n";
    if (rep.contains("quotient"))
        out << "quotient: multiplicity " << rep["quotient"]["multiplicity"] << ", block size "
            << rep["quotient"]["block_size"] << "\n";
    if (rep.contains("design"))
        out << "design: 2-(" << rep["design"]["v"] << ", " << rep["design"]["k"] << ", "
            << rep["design"]["lambda"] << ") with " << rep["design"]["b"] << " blocks\n";
    if (rep.contains("quotient_skipped"))
        out << "quotient: skipped (" << rep["quotient_skipped"].get<std::string>() << ")\n";
    for (const json& c : rep["checks"]) {
        if (c["ok"] == true) {
            out << "check ok: " << c["name"].get<std::string>() << "\n";
        } else {
            out << "check FAILED: " << c["name"].get<std::string>();
            if (c.contains("expected"))
                out << " (expected " << render_value(c["expected"]) << ", actual "
                    << render_value(c["actual"]) << ")";
            if (c.contains("message")) out << " -- " << c["message"].get<std::string>();
            out << "\n";
        }
    }
    out << "verdict: " << (rep["ok"] == true ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string census_human(const json& rep) {
    std::ostringstream out;
    out << "p=" << rep["p"] << " c=" << rep["c"] << " order-of-c=" << rep["ell_order"]
        << " self-paired-orbitals=" << rep["count"] << "\n";
    for (const json& m : rep["orbitals"]) {
        out << "[" << m["index"] << "] relation=" << m["relation"].get<std::string>()
            << " arcs=" << m["arcs"] << " order=" << m["order"] << " valency=" << m["valency"]
            << " girth=" << render_value(m["girth"]) << " components=" << m["components"]
            << " seed=" << m["seed"].dump() << "\n";
    }
    out << "nonparallel members pairwise isomorphic: "
        << (rep["nonparallel_pairwise_isomorphic"] == true ? "yes" : "no") << "\n";
    return out.str();
}

std::string feasible_human(const json& rep) {
    std::ostringstream out;
    auto line = [&](const char* label, const char* key) {
        out << label << ": " << (rep[key] == true ? "yes" : "no") << "\n";
    };
    line("transitive on flags", "transitive");
    line("at least three lines per point", "a1");
    line("lines through a point meet only there", "a2");
    line("flag stabilizer transitive on the rest of the line", "a3");
    line("point-pair stabilizer transitive on flags avoiding the join", "a4");
    std::string diag = rep["diagnostics"].get<std::string>();
    if (!diag.empty()) out << "diagnostics: " << diag << "\n";
    out << "feasible: " << (rep["feasible"] == true ? "yes" : "no") << "\n";
    return out.str();
}

struct options {
    std::string family_or_file;
    int n = 2;
    long long q = 0;
    int t = 1, e = 0, s = 1, r = 0;
    int p = 0, ell_order = 0, index = 0;
    int c = 0;
    std::vector<std::string> gens;
    std::string group;
    std::string output;
    bool as_json = false;
    long long cap_orbit = 0, cap_elements = 0, cap_vertices = 0, cap_field = 0;
};

bool is_family(const std::string& s) {
    return s == "plus" || s == "par" || s == "skew" || s == "gc" || s == "census-member";
}

// Builds the graph named by a family spec; exits via return code on failure.
int build_from_spec(const options& o, const std::string& family, graph_handle& h) {
    if (family == "census-member") {
        if (o.p == 0 || o.ell_order == 0) {
            std::cerr << "error: census-member needs --p and --ell-order\n";
            return 2;
        }
        afg_status st = afg_build_census_member(o.p, o.ell_order, o.index, &h.g);
        return st == AFG_OK ? 0 : report_error(st);
    }
    if (o.q == 0) {
        std::cerr << "error: " << family << " needs -q\n";
        return 2;
    }
    int p = 0, ell = 0;
    if (!prime_power(o.q, p, ell)) {
        std::cerr << "error: " << o.q << " is not a prime power\n";
        return 2;
    }
    afg_status st = family == "gc" ? afg_build_gc(p, ell, o.t, o.e, o.s, o.r, &h.g)
                                   : afg_build_relation(o.n, p, ell, family.c_str(), &h.g);
    return st == AFG_OK ? 0 : report_error(st);
}

int cmd_build(const options& o) {
    graph_handle h;
    if (int rc = build_from_spec(o, o.family_or_file, h)) return rc;
    cstr text;
    afg_status st = afg_graph_edgelist(h.g, &text.s);
    if (st != AFG_OK) return report_error(st);
    return write_output(o.output, text.str());
}

int cmd_verify(const options& o) {
    graph_handle h;
    if (is_family(o.family_or_file)) {
        if (int rc = build_from_spec(o, o.family_or_file, h)) return rc;
    } else {
        std::ifstream f(o.family_or_file, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot read '" << o.family_or_file << "'\n";
            return 2;
        }
        std::ostringstream buf;
        buf << f.rdbuf();
        afg_status st = afg_graph_from_text(buf.str().c_str(), &h.g);
        if (st != AFG_OK) return report_error(st);
    }
    cstr rep;
    afg_status st = afg_verify_graph(h.g, &rep.s);
    if (st != AFG_OK && st != AFG_VERIFY) return report_error(st);
    json j = json::parse(rep.str());
    int rc = write_output(o.output, o.as_json ? rep.str() + "\n" : verify_human(j));
    return rc ? rc : (int)st;
}

int cmd_census(const options& o) {
    if (o.p == 0) {
        std::cerr << "error: census needs --p\n";
        return 2;
    }
    cstr rep;
    afg_status st = afg_census_json(o.p, o.c, &rep.s);
    if (st != AFG_OK) return report_error(st);
    json j = json::parse(rep.str());
    return write_output(o.output, o.as_json ? rep.str() + "\n" : census_human(j));
}

int cmd_standard_form(const options& o) {
    if (o.q == 0) {
        std::cerr << "error: standard-form needs -q\n";
        return 2;
    }
    int p = 0, ell = 0;
    if (!prime_power(o.q, p, ell)) {
        std::cerr << "error: " << o.q << " is not a prime power\n";
        return 2;
    }
    std::vector<int> pairs;
    for (const std::string& g : o.gens) {
        size_t comma = g.find(',');
        try {
            if (comma == std::string::npos) throw std::invalid_argument("no comma");
            size_t used_a = 0, used_k = 0;
            std::string astr = g.substr(0, comma), kstr = g.substr(comma + 1);
            int a = std::stoi(astr, &used_a);
            int k = std::stoi(kstr, &used_k);
            if (used_a != astr.size() || used_k != kstr.size())
                throw std::invalid_argument("trailing characters");
            pairs.push_back(a);
            pairs.push_back(k);
        } catch (const std::exception&) {
            std::cerr << "error: generator '" << g << "' is not an 'a,k' pair\n";
            return 2;
        }
    }
    int t = 0, e = 0, s = 0;
    long long order = 0;
    afg_status st = afg_standard_form(p, ell, pairs.data(), (int)pairs.size() / 2, &t, &e, &s,
                                      &order);
    if (st != AFG_OK) return report_error(st);
    std::ostringstream out;
    if (o.as_json) {
        json j{{"t", t}, {"e", e}, {"s", s}, {"order", order}};
        out << j.dump() << "\n";
    } else {
        out << "t=" << t << " e=" << e << " s=" << s << " order=" << order << "\n";
    }
    return write_output(o.output, out.str());
}

int cmd_feasible(const options& o) {
    if (o.q == 0 || o.group.empty()) {
        std::cerr << "error: feasible needs -q and --group\n";
        return 2;
    }
    int p = 0, ell = 0;
    if (!prime_power(o.q, p, ell)) {
        std::cerr << "error: " << o.q << " is not a prime power\n";
        return 2;
    }
    int ok = 0;
    cstr rep;
    afg_status st = afg_feasible(o.n, p, ell, o.group.c_str(), &ok, &rep.s);
    if (st != AFG_OK) return report_error(st);
    json j = json::parse(rep.str());
    int rc = write_output(o.output, o.as_json ? rep.str() + "\n" : feasible_human(j));
    if (rc) return rc;
    return ok ? 0 : (int)AFG_VERIFY;
}

}  // namespace

int main(int argc, char** argv) {
    options o;
    CLI::App app{"Affine flag graphs: construction, census and verification"};
    app.require_subcommand(1);

    auto add_caps = [&](CLI::App* sub) {
        sub->add_option("--cap-orbit", o.cap_orbit, "max states in an orbit closure");
        sub->add_option("--cap-elements", o.cap_elements, "max group elements materialized");
        sub->add_option("--cap-vertices", o.cap_vertices, "max graph vertices");
        sub->add_option("--cap-field", o.cap_field, "max field size");
        sub->add_option("-o,--output", o.output, "write to a file instead of standard output");
    };

    CLI::App* build = app.add_subcommand("build", "construct a graph and print its edge list");
    build->add_option("family", o.family_or_file, "plus, par, skew, gc or census-member")
        ->required();
    build->add_option("-n", o.n, "affine dimension (plus/par/skew)");
    build->add_option("-q", o.q, "field size, a prime power");
    build->add_option("--t", o.t, "multiplier subgroup index parameter");
    build->add_option("--e", o.e, "multiplier subgroup twist parameter");
    build->add_option("--s", o.s, "Frobenius step parameter");
    build->add_option("--r", o.r, "seed scalar c = omega^r (gc)");
    build->add_option("--p", o.p, "prime (census-member)");
    build->add_option("--ell-order", o.ell_order, "order of the cyclic multiplier (census-member)");
    build->add_option("--index", o.index, "0-based orbital index (census-member)");
    add_caps(build);

    CLI::App* verify = app.add_subcommand("verify", "re-derive and test every closed-form claim");
    verify->add_option("target", o.family_or_file, "edge-list file, or a family spec as in build")
        ->required();
    verify->add_option("-n", o.n, "affine dimension (family spec)");
    verify->add_option("-q", o.q, "field size (family spec)");
    verify->add_option("--t", o.t, "multiplier subgroup index parameter");
    verify->add_option("--e", o.e, "multiplier subgroup twist parameter");
    verify->add_option("--s", o.s, "Frobenius step parameter");
    verify->add_option("--r", o.r, "seed scalar exponent (gc)");
    verify->add_option("--p", o.p, "prime (census-member)");
    verify->add_option("--ell-order", o.ell_order, "order of the cyclic multiplier");
    verify->add_option("--index", o.index, "0-based orbital index");
    verify->add_flag("--json", o.as_json, "print the machine report");
    add_caps(verify);

    CLI::App* census = app.add_subcommand("census", "list self-paired compatible orbitals");
    census->add_option("--p", o.p, "odd prime")->required();
    census->add_option("--c", o.c, "element of the multiplicative group, of even order")
        ->required();
    census->add_flag("--json", o.as_json, "print the machine report");
    add_caps(census);

    CLI::App* sform = app.add_subcommand("standard-form",
                                         "standard parameters of a subgroup of semilinear maps");
    sform->add_option("-q", o.q, "field size, a prime power")->required();
    sform->add_option("--gen", o.gens, "generator 'a,k' for x -> a x^(p^k); repeatable");
    sform->add_flag("--json", o.as_json, "print the machine report");
    add_caps(sform);

    CLI::App* feas = app.add_subcommand("feasible", "flag-transitivity and local conditions");
    feas->add_option("-n", o.n, "affine dimension");
    feas->add_option("-q", o.q, "field size, a prime power")->required();
    feas->add_option("--group", o.group, "translations, asl, agl, agammal, agl1 or agammal1")
        ->required();
    feas->add_flag("--json", o.as_json, "print the machine report");
    add_caps(feas);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (o.cap_orbit || o.cap_elements || o.cap_vertices || o.cap_field) {
        afg_status st = afg_set_caps(o.cap_orbit, o.cap_elements, o.cap_vertices, o.cap_field);
        if (st != AFG_OK) return report_error(st);
    }

    if (build->parsed()) return cmd_build(o);
    if (verify->parsed()) return cmd_verify(o);
    if (census->parsed()) return cmd_census(o);
    if (sform->parsed()) return cmd_standard_form(o);
    if (feas->parsed()) return cmd_feasible(o);
    return 2;
}
