/* C interface to libtwistgrp.
 *
 * Every fallible call returns a twg_status. On failure the message is
 * available from twg_last_error() until the next call on the same thread.
 * Handles are opaque and owned by the caller; strings returned through
 * `char** out` are released with twg_string_free().
 */
#ifndef TWISTGRP_H
#define TWISTGRP_H

#include <stddef.h>
#include <stdint.h>

#if defined(TWISTGRP_BUILDING)
#define TWG_API __attribute__((visibility("default")))
#else
#define TWG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum twg_status {
  TWG_OK = 0,
  TWG_ERR_NULL_ARGUMENT = 1,
  TWG_ERR_PARSE = 2,
  TWG_ERR_INVALID_ARGUMENT = 3,
  TWG_ERR_SPEC_MISMATCH = 4,
  TWG_ERR_PRECONDITION = 5,
  TWG_ERR_BALL_TOO_SMALL = 6,
  TWG_ERR_OVERFLOW = 7,
  TWG_ERR_INTERNAL = 8
} twg_status;

TWG_API const char* twg_last_error(void);
TWG_API const char* twg_status_name(twg_status status);
TWG_API const char* twg_version(void);
TWG_API void twg_string_free(char* s);

/* ---- Heisenberg group ---------------------------------------------------- */

typedef struct twg_heis twg_heis;

/* `((m,k),s)` or a word such as `c a c^-1 a^-1`. */
TWG_API twg_status twg_heis_parse(const char* text, twg_heis** out);
TWG_API twg_status twg_heis_from_triple(int64_t m, int64_t k, int64_t s, twg_heis** out);
TWG_API void twg_heis_free(twg_heis* h);
TWG_API twg_status twg_heis_components(const twg_heis* h, int64_t* m, int64_t* k, int64_t* s);
TWG_API twg_status twg_heis_to_string(const twg_heis* h, char** out);
TWG_API twg_status twg_heis_mul(const twg_heis* a, const twg_heis* b, twg_heis** out);
TWG_API twg_status twg_heis_inv(const twg_heis* h, twg_heis** out);
/* a b a^-1 b^-1 */
TWG_API twg_status twg_heis_comm(const twg_heis* a, const twg_heis* b, twg_heis** out);
TWG_API twg_status twg_heis_pow(const twg_heis* h, int64_t n, twg_heis** out);
/* Row-major 3x3 upper unitriangular matrix. */
TWG_API twg_status twg_heis_matrix(const twg_heis* h, int64_t out[9]);

/* ---- Twisted conjugacy on H ---------------------------------------------- */

/* `n` selects phi_N for n >= 1; n == 0 selects the special automorphism
 * ((m,k),s) -> ((s+m, -k + m(m-1)/2 + sm), m). */
TWG_API twg_status twg_phi_apply(int64_t n, const twg_heis* h, twg_heis** out);
TWG_API twg_status twg_phi_apply_inverse(int64_t n, const twg_heis* h, twg_heis** out);
/* Closed-form phi_N class label (n >= 1). */
TWG_API twg_status twg_twisted_classify(int64_t n, const twg_heis* h, int64_t* r, int* parity);
/* Class table over the box of `radius` (0 = min(2N, cap)). */
TWG_API twg_status twg_twisted_reidemeister_json(int64_t n, int64_t radius, char** out);
/* Brute-force partition of the box of `radius` using conjugators from the box
 * of `conjugator_radius`; n == 0 for the special automorphism. */
TWG_API twg_status twg_twisted_partition_json(int64_t n, int64_t radius, int64_t conjugator_radius, char** out);

/* ---- Finite-dimensional irreducibles of H -------------------------------- */

typedef struct twg_rep twg_rep;

/* xi, eta, alpha are `num/den` strings; eta must have denominator exactly p. */
TWG_API twg_status twg_rep_create(const char* xi, const char* eta, const char* alpha, int64_t p, twg_rep** out);
TWG_API void twg_rep_free(twg_rep* r);
TWG_API twg_status twg_rep_params_json(const twg_rep* r, char** out);
/* {"dim", "perm", "phases"}: e_j -> exp(2 pi i phases[j]) e_{perm[j]}. */
TWG_API twg_status twg_rep_apply_json(const twg_rep* r, const twg_heis* h, char** out);
TWG_API twg_status twg_rep_character_json(const twg_rep* r, const twg_heis* h, char** out);
TWG_API twg_status twg_rep_character_table_json(const twg_rep* r, int64_t radius, char** out);
/* Compares the character with its precomposition by the special automorphism on the box of `radius`. */
TWG_API twg_status twg_rep_is_fixed(const twg_rep* r, int64_t radius, int* fixed);
TWG_API twg_status twg_rep_fixed_search_json(int64_t p, int64_t max_den, int64_t radius, char** out);
TWG_API twg_status twg_rep_commutant_dimension(const twg_rep* r, size_t* dim);

/* ---- Wreath products A wr Z ---------------------------------------------- */

typedef struct twg_wreath_spec twg_wreath_spec;
typedef struct twg_wreath twg_wreath;

/* A = Z^k + Z/torsion[0] + ... */
TWG_API twg_status twg_wreath_spec_create(int64_t k, const int64_t* torsion, size_t n_torsion, twg_wreath_spec** out);
TWG_API void twg_wreath_spec_free(twg_wreath_spec* spec);

/* {"free": {"exp": coeff} | "3x^-2 - x + 5", "tors": [{"copy","factor","residue"}], "shift"} */
TWG_API twg_status twg_wreath_parse_json(const twg_wreath_spec* spec, const char* json, twg_wreath** out);
TWG_API void twg_wreath_free(twg_wreath* g);
TWG_API twg_status twg_wreath_to_json(const twg_wreath* g, char** out);
TWG_API twg_status twg_wreath_mul(const twg_wreath* a, const twg_wreath* b, twg_wreath** out);
TWG_API twg_status twg_wreath_inv(const twg_wreath* g, twg_wreath** out);
TWG_API twg_status twg_wreath_comm(const twg_wreath* a, const twg_wreath* b, twg_wreath** out);
/* Writes k+1 integers (eps_0..eps_{k-1}, shift); torsion-free specs only. */
TWG_API twg_status twg_wreath_abelianize(const twg_wreath* g, int64_t* out, size_t capacity, size_t* written);
TWG_API twg_status twg_wreath_in_commutant(const twg_wreath* g, int* result);
/* *finite = 0 for elements of infinite order. */
TWG_API twg_status twg_wreath_order(const twg_wreath* g, int* finite, int64_t* order);
/* Both commutation routes: direct multiplication and the polynomial identity. */
TWG_API twg_status twg_wreath_commute(const twg_wreath* a, const twg_wreath* b, int* direct, int* identity);
/* Builds the automorphism described by `aut_json` (NULL or "" draws a random
 * one from `seed`) and reports generator shifts, the induced matrix and
 * subgroup preservation over `samples` random elements. */
TWG_API twg_status twg_wreath_check_aut_json(const twg_wreath_spec* spec, const char* aut_json, uint64_t seed,
                                             int samples, char** out);

/* ---- Laurent polynomials ------------------------------------------------- */

TWG_API twg_status twg_poly_mul(const char* lhs, const char* rhs, char** out);

#ifdef __cplusplus
}
#endif

#endif
