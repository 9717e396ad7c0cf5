/*
 * surf4 C API: exact numerical classification of smooth rational
 * surfaces in projective four-space.
 *
 * All functions return a surf4_status; results come back through out
 * parameters. Structured results (classification tables, enumeration
 * output, verification reports) are returned as JSON documents owned by
 * an opaque surf4_result handle; the string stays valid until the
 * handle is freed. Handles are created and destroyed by the library,
 * never by the caller's allocator.
 *
 * Every computation is exact 64-bit integer arithmetic; anything that
 * would overflow reports SURF4_ERR_OVERFLOW instead of wrapping.
 */
#ifndef SURF4_H
#define SURF4_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum surf4_status {
  SURF4_OK = 0,
  SURF4_ERR_ARGUMENT = 1,  /* null pointer or malformed argument */
  SURF4_ERR_DOMAIN = 2,    /* input outside an operation's domain */
  SURF4_ERR_DIMENSION = 3, /* divisor classes on mismatched lattices */
  SURF4_ERR_PARITY = 4,    /* adjunction gave a half-integer genus */
  SURF4_ERR_OVERFLOW = 5,  /* checked 64-bit arithmetic overflowed */
  SURF4_ERR_INTERNAL = 6
} surf4_status;

const char *surf4_status_str(surf4_status s);
const char *surf4_version(void);

/* A Hirzebruch surface F_n blown up at r points (fixes the lattice). */
typedef struct surf4_surface surf4_surface;
/* A divisor class a*C_0 + b*f + sum m_i*E_i on such a surface. */
typedef struct surf4_divisor surf4_divisor;
/* A JSON document produced by a table-valued operation. */
typedef struct surf4_result surf4_result;

/* ---- Picard lattice ---------------------------------------------- */

surf4_status surf4_surface_new(int64_t n, int64_t r, surf4_surface **out);
void surf4_surface_free(surf4_surface *s);

/* m may be NULL when m_len is 0; m_len must equal r of the surface. */
surf4_status surf4_divisor_new(const surf4_surface *s, int64_t a, int64_t b,
                               const int64_t *m, size_t m_len,
                               surf4_divisor **out);
/* a*C_0 + b*f - E_1 - ... - E_r (simple base points). */
surf4_status surf4_divisor_hyperplane(const surf4_surface *s, int64_t a,
                                      int64_t b, surf4_divisor **out);
/* K = -2*C_0 - (n+2)*f + E_1 + ... + E_r. */
surf4_status surf4_divisor_canonical(const surf4_surface *s,
                                     surf4_divisor **out);
void surf4_divisor_free(surf4_divisor *d);

/* Intersection number; both classes must come from surfaces with the
 * same (n, r). */
surf4_status surf4_intersect(const surf4_divisor *d1, const surf4_divisor *d2,
                             int64_t *out);
/* 1 + (D.D + D.K)/2 on the divisor's own surface. */
surf4_status surf4_adjunction_genus(const surf4_divisor *d, int64_t *out);

/* ---- Closed-form invariants -------------------------------------- */

surf4_status surf4_degree(int64_t a, int64_t b, int64_t n, int64_t r,
                          int64_t *out);
surf4_status surf4_sectional_genus(int64_t a, int64_t b, int64_t n,
                                   int64_t *out);
surf4_status surf4_double_point_residual(int64_t a, int64_t b, int64_t n,
                                         int64_t r, int64_t *out);
/* JSON object {"d","pi","k_squared","chi","dp_residual"}. */
surf4_status surf4_invariants(int64_t a, int64_t b, int64_t n, int64_t r,
                              surf4_result **out);

/* ---- Genus bounds -------------------------------------------------- */

/* holds iff 4*pi <= (d-2)^2; requires d >= 3. */
surf4_status surf4_castelnuovo_p3(int64_t d, int64_t pi, int *holds);
/* 1 + (d^2 - 3*rho*(4-rho))/8 with d + rho = 0 mod 4; requires d > 12. */
surf4_status surf4_max_genus_g(int64_t d, int64_t *out);
/* holds iff 8*(pi-1) < d^2. */
surf4_status surf4_strict_eighth_bound(int64_t d, int64_t pi, int *holds);
/* excluded iff pi equals the max genus; requires d > 12. */
surf4_status surf4_acm_exclusion(int64_t d, int64_t pi, int *excluded);

/* ---- Classification tables ----------------------------------------- */

/* Rows for a-ruled rational surfaces; requires a >= 1. */
surf4_status surf4_classify_ruled(int64_t a, surf4_result **out);
/* Simple-base-point systems on F_n; b solutions listed for n in
 * [n_lo, n_hi]; strict switches the bound polynomial cutoff to < 0. */
surf4_status surf4_classify_fn_systems(int64_t n_lo, int64_t n_hi, int strict,
                                       surf4_result **out);

/* box = {a_lo, a_hi, b_lo, b_hi, n_lo, n_hi, r_lo, r_hi, d_min}. */
surf4_status surf4_oracle_enumerate(const int64_t box[9], surf4_result **out);
surf4_status surf4_cross_validate(const int64_t box[9], int *pass,
                                  surf4_result **out);

/* Runs the full reproduction suite; all_pass is 1 iff every check
 * passed. The report lists each check with expected/computed values. */
surf4_status surf4_verify_paper(int *all_pass, surf4_result **out);

/* ---- Results -------------------------------------------------------- */

const char *surf4_result_json(const surf4_result *r);
void surf4_result_free(surf4_result *r);

#ifdef __cplusplus
}
#endif

#endif /* SURF4_H */
