/* C interface to the binary-sextic invariant library.
 *
 * Conventions:
 *   - Forms are opaque handles created by the g2_form_* constructors and
 *     released with g2_form_free.
 *   - Every query returns a g2_status; results are heap-allocated JSON
 *     strings written to *out, released with g2_string_free.  Rationals
 *     appear as "p/q" strings inside the JSON.
 *   - On a non-OK status, *out is left untouched and g2_last_error()
 *     returns a message describing the failure (thread-local storage).
 *   - Input lists are comma-separated decimals/rationals, e.g.
 *     "1,0,0,0,0,0,1" or "-3,1/2,5,7/3,-1,2".
 */
#ifndef GENUS2_H
#define GENUS2_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct g2_form g2_form;

typedef enum g2_status {
  G2_OK = 0,
  G2_PARSE = 2,    /* malformed input text */
  G2_DOMAIN = 3,   /* input outside the operation's mathematical domain */
  G2_INTERNAL = 4, /* invariant violation or unexpected failure */
} g2_status;

const char* g2_version(void);
const char* g2_last_error(void);
void g2_string_free(char* s);
void g2_form_free(g2_form* f);

/* Constructors.  raw: coefficients c0..c6 of x^(6-k) y^k; classical:
 * a..g with the binomial convention; roots: six entries, rationals or
 * "inf", plus a nonzero leading coefficient. */
g2_status g2_form_parse_raw(const char* csv, g2_form** out);
g2_status g2_form_parse_classical(const char* csv, g2_form** out);
g2_status g2_form_from_roots(const char* roots_csv, const char* leading, g2_form** out);

/* Substitution action by a rational 2x2 matrix "m11,m12,m21,m22"
 * (normalized by det^-2); the branch construction with an extra
 * involution takes three parameters "a1,a2,a3". */
g2_status g2_act(const g2_form* f, const char* matrix_csv, g2_form** out);
g2_status g2_bielliptic_construct(const char* alphas_csv, g2_form** out);

/* Queries returning JSON. */
g2_status g2_form_json(const g2_form* f, char** out);
g2_status g2_invariants(const g2_form* f, char** out);
g2_status g2_classify(const g2_form* f, char** out);
g2_status g2_moduli_point(const g2_form* f, char** out);
g2_status g2_stable_model(const g2_form* f, char** out);
g2_status g2_igusa_coords(const g2_form* f, char** out);
g2_status g2_involutions(const g2_form* f, char** out);
g2_status g2_is_bielliptic(const g2_form* f, char** out);
g2_status g2_equivalent(const g2_form* f, const g2_form* g, char** out);

/* Fits the weight-30 relation polynomial G with E^2 = G(A,B,C,D) from
 * seeded random samples; *text_out receives the plain-text monomial table,
 * *json_out a summary. */
g2_status g2_derive_relation(int samples, uint64_t seed, char** text_out, char** json_out);

/* Divisor-class layer on the moduli space; classes are given by their
 * rational coefficients on the two boundary divisors. */
g2_status g2_divisor_nef(const char* q0, const char* q1, char** out);
g2_status g2_divisor_ample(const char* q0, const char* q1, char** out);
g2_status g2_divisor_slope(const char* a, const char* b, char** out);
g2_status g2_log_model(const char* alpha, char** out);
g2_status g2_divisor_identities(char** out);
g2_status g2_reid_tai(long n, const char* weights_csv, char** out);
g2_status g2_wps_degree(const char* weights_csv, const char* hypersurface_degree_or_null,
                        char** out);

#ifdef __cplusplus
}
#endif

#endif /* GENUS2_H */
