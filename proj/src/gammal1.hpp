#pragma once

#include <vector>

#include "field.hpp"

namespace afg {

// An element a*x^(p^k) of GammaL(1, p^ell), a != 0, 0 <= k < ell.
struct GL1 {
    int a;
    int k;
    friend bool operator==(const GL1&, const GL1&) = default;
    friend auto operator<=>(const GL1&, const GL1&) = default;
};

// Standard parameters (t, e, s) for a subgroup M <= GammaL(1, p^ell):
// M = <w^t, theta^s w^e> with t | p^ell - 1, s | ell, 0 <= e < t and
// t | e (p^ell - 1)/(p^s - 1).
struct StdParams {
    int t;
    int e;
    int s;
    friend bool operator==(const StdParams&, const StdParams&) = default;
};

GL1 gl1_identity();
GL1 gl1_compose(const Field& f, const GL1& g, const GL1& h);  // apply h first
GL1 gl1_inverse(const Field& f, const GL1& g);
int gl1_apply(const Field& f, const GL1& g, int x);

// Closure of the given elements under composition, sorted by (k, a).
// Errors if any element is invalid for the field.
std::vector<GL1> gl1_closure(const Field& f, const std::vector<GL1>& gens);

bool gl1_contains(const std::vector<GL1>& sorted_group, const GL1& g);

// Generators <w^t, theta^s w^e> for given standard parameters (validated).
std::vector<GL1> gl1_generators(const Field& f, const StdParams& sp);

// Validate (F1)-(F3); error errc::invalid when violated.
void check_std_params(const Field& f, const StdParams& sp);

// The unique standard parameters of the subgroup generated by `gens`;
// cross-checked by regenerating the subgroup from the result.
StdParams standard_form(const Field& f, const std::vector<GL1>& gens);

}  // namespace afg
