#pragma once

#include <stdexcept>
#include <string>

namespace afg {

// Error categories; values double as CLI exit codes / C API status codes.
enum class errc {
    invalid = 2,       // bad parameters, parse failures, unknown names
    precondition = 3,  // construction precondition not met (e.g. orbital not self-paired)
    verify = 4,        // a checked claim failed on the computed object
    cap = 5,           // configured size cap exceeded
    internal = 9,      // cross-validation mismatch: a bug, never expected
};

struct error : std::runtime_error {
    errc code;
    error(errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

// Size limits for group/orbit/graph computations, overridable from the CLI.
struct caps_t {
    long long orbit = 10'000'000;     // max states in any orbit closure
    long long elements = 10'000'000;  // max group elements materialized
    long long vertices = 10'000'000;  // max vertices in a constructed graph
    long long field = 1 << 20;        // max field size q
};

inline caps_t& caps() {
    static caps_t c;
    return c;
}

}  // namespace afg
