/* C interface to the affine flag graph library.
 *
 * Every function returns an afg_status; on failure afg_last_error() holds a
 * message for the calling thread.  Strings returned through char** are
 * malloc'd and must be released with afg_string_free; graphs with
 * afg_graph_free.  All output is deterministic for identical inputs.
 */
#pragma once

#ifdef __cplusplus
extern "C" {
#endif

typedef enum afg_status {
    AFG_OK = 0,
    AFG_INVALID = 2,      /* bad parameters, parse failures, unknown names */
    AFG_PRECONDITION = 3, /* construction precondition not met */
    AFG_VERIFY = 4,       /* a checked claim failed on the computed object */
    AFG_CAP = 5,          /* configured size cap exceeded */
    AFG_INTERNAL = 9      /* cross-validation mismatch inside the library */
} afg_status;

/* Opaque handle owning a geometry and a graph on its flag set. */
typedef struct afg_graph afg_graph;

/* Message of the calling thread's most recent failure ("" after success).
 * The pointer stays valid until the thread's next library call. */
const char* afg_last_error(void);

void afg_graph_free(afg_graph* g);
void afg_string_free(char* s);

/* Override size caps (orbit states, group elements, graph vertices, field
 * size).  Zero leaves a cap unchanged.  Defaults: 10000000 for the first
 * three, 1048576 for the field. */
afg_status afg_set_caps(long long orbit, long long elements, long long vertices,
                        long long field);

/* Flag graph of AG(n, p^ell) joining compatible flags whose lines are in the
 * named relation: "plus" (intersecting), "par" (parallel) or "skew". */
afg_status afg_build_relation(int n, int p, int ell, const char* relation, afg_graph** out);

/* Two-parameter family graph on AG(2, q), q = p^ell: the orbital graph of
 * the group with point stabilizer SL(2,q) extended by the subgroup of field
 * multipliers with standard parameters (t, e, s), seeded with the flag pair
 * ((e1, <e1>), (c e2, <e2>)), c = omega^r, 0 < r < q. */
afg_status afg_build_gc(int p, int ell, int t, int e, int s, int r, afg_graph** out);

/* index-th (0-based) self-paired compatible orbital graph of the group over
 * AG(2, p) whose point stabilizer is SL(2,p) extended by diag(1, l), where l
 * generates the subgroup of F_p* of order ell_order. */
afg_status afg_build_census_member(int p, int ell_order, int index, afg_graph** out);

/* Parse an exported edge list (meta header + label pairs) back to a graph. */
afg_status afg_graph_from_text(const char* text, afg_graph** out);

afg_status afg_graph_order(const afg_graph* g, long long* out);
/* Common degree, or -1 when the graph is not regular. */
afg_status afg_graph_valency(const afg_graph* g, long long* out);
/* Edge list text: "# {json meta}" line, then sorted "label\tlabel" lines. */
afg_status afg_graph_edgelist(const afg_graph* g, char** out);
afg_status afg_graph_meta_json(const afg_graph* g, char** out);
/* Order, degree multiset, girth, diameter, component data as JSON. */
afg_status afg_graph_invariants_json(const afg_graph* g, char** out);

/* Re-derive and test every closed-form claim for the graph's family (order
 * and valency formulas; girth/diameter or component shape; connectedness;
 * quotient completeness, almost multicover, multiplicity q-1, block size;
 * recovered 2-(q^n, q, 1) design).  *report_json gets a JSON account of each
 * check.  Returns AFG_OK when all hold, AFG_VERIFY when any fails. */
afg_status afg_verify_graph(const afg_graph* g, char** report_json);

/* Census of self-paired compatible orbitals over AG(2, p) for the group
 * whose point stabilizer is SL(2,p) extended by diag(1, c); c must have even
 * multiplicative order.  The listing includes each orbital's seed, arc
 * count, graph invariants, and the pairwise-isomorphism matrix of the
 * non-parallel members; the count is checked against (p-1)/ord(c) + 1. */
afg_status afg_census_json(int p, int c, char** report_json);

/* Standard parameters (t, e, s) of the subgroup of semilinear maps
 * x -> a x^(p^k) of GF(p^ell) generated by gen_pairs = [a0,k0,a1,k1,...];
 * *order_out gets the subgroup order regenerated from the parameters. */
afg_status afg_standard_form(int p, int ell, const int* gen_pairs, int ngens,
                             int* t_out, int* e_out, int* s_out, long long* order_out);

/* Feasibility of the named group ("translations", "asl", "agl", "agammal",
 * "agl1", "agammal1") acting on the flags of AG(n, p^ell): flag
 * transitivity plus the four local conditions.  *feasible_out is 1 when all
 * hold; *report_json gets the per-condition JSON account. */
afg_status afg_feasible(int n, int p, int ell, const char* group, int* feasible_out,
                        char** report_json);

#ifdef __cplusplus
}
#endif
