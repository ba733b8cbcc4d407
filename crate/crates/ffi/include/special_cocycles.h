#ifndef SPECIAL_COCYCLES_H
#define SPECIAL_COCYCLES_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ScStatus {
  Ok = 0,
  NullPointer = 1,
  InvalidArgument = 2,
  Panic = 3,
  Utf8 = 4,
} ScStatus;

/**
 * Cochain handle.
 */
typedef struct ScCochain ScCochain;

/**
 * Fock polynomial handle, carrying its dimensions.
 */
typedef struct ScFockPoly ScFockPoly;

/**
 * Exterior algebra element handle.
 */
typedef struct ScMultivector ScMultivector;

/**
 * Static description of a status code.
 */
const char *sc_status_message(enum ScStatus status);

/**
 * Release a string returned by this library.
 */
void sc_string_free(char *s);

/**
 * `psi_{bq,aq}` for `U(p,q) x U(a,b)`.
 */
enum ScStatus sc_psi_new(uint32_t b, uint32_t a, uint32_t p, uint32_t q, struct ScCochain **out);

void sc_cochain_free(struct ScCochain *c);

/**
 * Number of (blade, monomial) terms.
 */
enum ScStatus sc_cochain_num_terms(const struct ScCochain *c, uintptr_t *out);

/**
 * Whether the differential of the cochain vanishes.
 */
enum ScStatus sc_cochain_is_closed(const struct ScCochain *c, bool *out);

/**
 * Whether the cochain commutes with every basis element of `k`.
 */
enum ScStatus sc_cochain_is_equivariant(const struct ScCochain *c, bool *out);

enum ScStatus sc_cochain_to_string(const struct ScCochain *c, char **out);

/**
 * The Vogan-Zuckerman vector `e(bq,aq)`.
 */
enum ScStatus sc_vz_vector_new(uint32_t b,
                               uint32_t a,
                               uint32_t p,
                               uint32_t q,
                               struct ScMultivector **out);

/**
 * The Chern element `c_q`.
 */
enum ScStatus sc_chern_element_new(uint32_t p, uint32_t q, struct ScMultivector **out);

void sc_multivector_free(struct ScMultivector *m);

/**
 * Whether every basis element of `k` kills the element.
 */
enum ScStatus sc_multivector_is_invariant(const struct ScMultivector *m, bool *out);

enum ScStatus sc_multivector_to_string(const struct ScMultivector *m, char **out);

/**
 * Evaluate a cochain on a multivector of the same `(p,q)`.
 */
enum ScStatus sc_evaluate(const struct ScCochain *c,
                          const struct ScMultivector *v,
                          struct ScFockPoly **out);

/**
 * `Delta~_a^q Delta_b^q`.
 */
enum ScStatus sc_kv_product_new(uint32_t p,
                                uint32_t q,
                                uint32_t a,
                                uint32_t b,
                                struct ScFockPoly **out);

void sc_fock_poly_free(struct ScFockPoly *f);

enum ScStatus sc_fock_poly_equal(const struct ScFockPoly *f, const struct ScFockPoly *g, bool *out);

/**
 * Annihilated by every Laplacian of its dimensions.
 */
enum ScStatus sc_fock_poly_is_harmonic(const struct ScFockPoly *f, bool *out);

enum ScStatus sc_fock_poly_to_string(const struct ScFockPoly *f, char **out);

/**
 * Littlewood-Richardson coefficient `c^lambda_{mu,nu}`; partitions as part arrays.
 */
enum ScStatus sc_lr_coefficient(const uint32_t *lambda,
                                uintptr_t lambda_len,
                                const uint32_t *mu,
                                uintptr_t mu_len,
                                const uint32_t *nu,
                                uintptr_t nu_len,
                                uint64_t *out);

enum ScStatus sc_special_hom_dimension(uint32_t p,
                                       uint32_t q,
                                       uint32_t a,
                                       uint32_t b,
                                       uint32_t n,
                                       uint64_t *out);

enum ScStatus sc_isotypic_multiplicity(uint32_t p,
                                       uint32_t q,
                                       uint32_t a,
                                       uint32_t b,
                                       uint32_t degree,
                                       uintptr_t *out);

/**
 * Whether the Bargmann image of `psi_{q,0} ^ psi_{0,q}` is `2^q phi_{q,q}`.
 */
enum ScStatus sc_product_formula_check(uint32_t p, uint32_t q, bool *out);

/**
 * Run checks over a grid and return the JSON report. Ranges use the CLI syntax
 * (`N`, `A-B`, `A..B`, `A..=B`); `checks` is `all` or a comma list. `success` reports
 * whether no cell failed.
 */
enum ScStatus sc_run_checks(const char *p,
                            const char *q,
                            const char *a,
                            const char *b,
                            const char *checks,
                            uintptr_t jobs,
                            bool *success,
                            char **out_json);

#endif  /* SPECIAL_COCYCLES_H */
