#ifndef SU3FUSION_H
#define SU3FUSION_H

/* C interface to the su(3) fusion library.
 *
 * Weights are dominant-integral pairs (l1, l2); levels are non-negative
 * integers, with SU3F_LEVEL_INF selecting the classical (tensor) product.
 * Every function returning a string allocates it with malloc; release it
 * with su3f_string_free.  On any status other than SU3F_OK the output
 * pointers are left untouched and su3f_last_error() describes the problem
 * (the message is thread-local and valid until the next call).
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum su3f_status {
    SU3F_OK = 0,
    SU3F_EINVAL = 1,   /* malformed argument */
    SU3F_EDOMAIN = 2,  /* argument outside the mathematical domain */
    SU3F_EVERIFY = 3,  /* a verification run reported failures */
    SU3F_EINTERNAL = 4 /* internal invariant broken */
} su3f_status;

typedef enum su3f_format {
    SU3F_TEXT = 0,
    SU3F_JSON = 1,
    SU3F_TSV = 2,
    SU3F_SVG = 3
} su3f_format;

#define SU3F_LEVEL_INF (-1)

/* Complete set of fusion matrices at one level (opaque). */
typedef struct su3f_table su3f_table;

const char* su3f_version(void);
const char* su3f_last_error(void);
void su3f_string_free(char* s);

/* Fusion coefficient of ((l1,l2),(m1,m2);(n1,n2)) at the level (or the
 * tensor multiplicity for SU3F_LEVEL_INF). */
su3f_status su3f_fusion_coefficient(int l1, int l2, int m1, int m2, int n1, int n2,
                                    int level, int64_t* out);

/* First and last level admitting each coupling of the triple. */
su3f_status su3f_thresholds(int l1, int l2, int m1, int m2, int n1, int n2,
                            int* k0_min, int* k0_max);

su3f_status su3f_table_create(int level, su3f_table** out);
void su3f_table_destroy(su3f_table* t);
int su3f_table_size(const su3f_table* t);

/* Structural invariants of the table.  SU3F_OK on success; SU3F_EVERIFY
 * with *first_violation describing the first broken invariant otherwise.
 * first_violation may be NULL when the caller does not need the text. */
su3f_status su3f_table_verify(const su3f_table* t, char** first_violation);

su3f_status su3f_table_render(const su3f_table* t, su3f_format f, char** out);
su3f_status su3f_table_matrix_render(const su3f_table* t, int l1, int l2, su3f_format f,
                                     char** out);

/* Annotated decomposition of (l1,l2) x (m1,m2); conjugate_rhs != 0 replaces
 * the right factor by its conjugate before multiplying. */
su3f_status su3f_product_render(int level, int l1, int l2, int m1, int m2,
                                int conjugate_rhs, su3f_format f, char** out);

/* Per-level new-coupling table of the pair up to the level (SU3F_LEVEL_INF
 * for the whole window). */
su3f_status su3f_thresholds_table_render(int l1, int l2, int m1, int m2, int level,
                                         su3f_format f, char** out);

/* Image of the triple under the multiplicity-preserving involution. */
su3f_status su3f_psi_render(int l1, int l2, int m1, int m2, int n1, int n2,
                            su3f_format f, char** out);

/* Coupling pictographs of the triple. */
su3f_status su3f_oblades_count(int l1, int l2, int m1, int m2, int n1, int n2,
                               int64_t* out);
su3f_status su3f_oblades_render(int l1, int l2, int m1, int m2, int n1, int n2,
                                su3f_format f, char** out);
/* SVG document for pictograph #index (0-based, enumeration order). */
su3f_status su3f_oblade_render(int l1, int l2, int m1, int m2, int n1, int n2,
                               int index, char** out);

/* Entry-sum rows k=0..max_level with their closed-formula comparisons. */
su3f_status su3f_paths_table_render(int max_level, su3f_format f, char** out);

/* Polynomial-matrix identity report at one level; seed_fault != 0 injects a
 * deliberate generator swap (negative control).  SU3F_EVERIFY on failures,
 * with the report still written. */
su3f_status su3f_genfun_verify_render(int level, int seed_fault, char** out);

/* Numeric-oracle report at one level. */
su3f_status su3f_verlinde_render(int level, su3f_format f, char** out);

/* Named invariant suite: tables, genfun, sums, modular, propP, oblades, all.
 * Negative bounds select per-suite defaults.  flags bit 0 seeds a fault.
 * SU3F_EVERIFY on failures, with the report still written. */
su3f_status su3f_verify_suite(const char* suite, int max_level, int max_weight,
                              unsigned flags, char** report);

#ifdef __cplusplus
}
#endif

#endif /* SU3FUSION_H */
