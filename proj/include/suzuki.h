/* suzuki.h - C interface to the Suzuki-curve code library.
 *
 * Handles are opaque; every function returns a status code (SZ_OK == 0) and
 * writes results through out-parameters.  Field elements travel as uint64_t
 * bitmasks (bit i = coefficient of u^i in the field's polynomial basis); the
 * hex convention is lowercase, most significant nibble first, zero padded to
 * ceil(degree/4) digits.
 *
 * Handles are not internally synchronized: share a handle across threads only
 * for concurrent reads after all lazy construction has happened, or guard it.
 */

#ifndef SUZUKI_H
#define SUZUKI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum sz_status {
    SZ_OK = 0,
    SZ_ERR_INVALID_ARGUMENT = 1,  /* bad parameter or precondition violation */
    SZ_ERR_OUT_OF_RANGE = 2,      /* index beyond a collection */
    SZ_ERR_DOMAIN = 3,            /* math domain error (inverse of zero, ...) */
    SZ_ERR_UNSUPPORTED = 4,       /* operation not available in this mode */
    SZ_ERR_BUDGET = 5,            /* materialization exceeds the memory budget */
    SZ_ERR_RANK_DEFICIENT = 6,    /* linear system is underdetermined */
    SZ_ERR_INCONSISTENT = 7,      /* received word matches no codeword */
    SZ_ERR_SELFTEST_FAILED = 8,
    SZ_ERR_NOMEM = 9,
    SZ_ERR_INTERNAL = 10
};

const char* sz_version(void);
const char* sz_status_name(int status);
/* Thread-local detail message for the most recent failure in this thread. */
const char* sz_last_error_message(void);

/* ------------------------------------------------------------------ */
/* Parameter formulas (no field arithmetic; any m in [1, 7]).          */

typedef struct {
    uint32_t m;
    uint64_t q0, q, genus;
    uint64_t pole_orders[4];
    uint64_t points[5];      /* points[j] = #X(F_{q^j}) for j in 1..4 */
    uint64_t deg_e;          /* points[4] - points[1] */
    uint64_t splitting_count;
    uint64_t ell_max;        /* q^2 - 1 */
    uint64_t isodual_level;  /* q^2/2 + genus - 1 */
} sz_params_info;

int sz_params(uint32_t m, sz_params_info* out);

typedef struct {
    uint32_t m;
    uint64_t ell;
    uint64_t n, k, dstar, t;
    double rate;
    int64_t dual_level;      /* -1 when ell < 2 genus - 1 */
    uint64_t isodual_level;
    int is_isodual;          /* ell == isodual_level */
    int iso_orthogonal;      /* ell <= isodual_level */
} sz_code_info;

int sz_code_params(uint32_t m, uint64_t ell, sz_code_info* out);

/* ------------------------------------------------------------------ */
/* Curve handle: fields plus point enumeration (m in {1, 2}).          */

typedef struct sz_curve sz_curve;

/* table_budget_bits: max field degree that gets log tables; 0 = default. */
int sz_curve_create(uint32_t m, uint32_t table_budget_bits, sz_curve** out);
void sz_curve_destroy(sz_curve* c);

/* which: 1 = F_q, 4 = F_{q^4}. */
int sz_curve_field_info(const sz_curve* c, uint32_t which, uint32_t* degree,
                        uint64_t* modulus, uint32_t* subfield_degree);
int sz_curve_on_curve(const sz_curve* c, uint32_t j, uint64_t x, uint64_t y, int* on);
/* j in {1, 4}; first call enumerates and caches. */
int sz_curve_point_count(sz_curve* c, uint32_t j, uint64_t* count);
/* Point 0 is the point at infinity, the rest ascend by (x, y). */
int sz_curve_point(sz_curve* c, uint32_t j, uint64_t index, int* at_infinity,
                   uint64_t* x, uint64_t* y);
int sz_curve_splitting_count(sz_curve* c, uint64_t* count);

/* ------------------------------------------------------------------ */
/* Code handle.                                                        */

typedef struct sz_code sz_code;

#define SZ_CODE_BASIS_ONLY 1u  /* skip point/matrix materialization */

int sz_code_create(sz_curve* c, uint64_t ell, uint32_t flags, sz_code** out);
void sz_code_destroy(sz_code* k);

int sz_code_info_get(const sz_code* k, sz_code_info* out);
/* Monomial j of the basis, in S form (r = power of the denominator x^q + x);
 * pole is the pole order of the S'-form partner. */
int sz_code_basis_monomial(const sz_code* k, uint64_t j, uint64_t* pole, uint32_t* a,
                           uint32_t* b, uint32_t* c, uint32_t* d, uint32_t* r);
/* Evaluation point i (always affine). */
int sz_code_point(const sz_code* k, uint64_t i, uint64_t* x, uint64_t* y);
/* FNV-1a digest of the canonical point serialization. */
int sz_code_points_hash(const sz_code* k, uint64_t* hash);
/* Row j of the generator matrix; out must hold n values. */
int sz_code_generator_row(const sz_code* k, uint64_t j, uint64_t* out);
/* msg: k symbols; out: n symbols. */
int sz_code_encode(const sz_code* k, const uint64_t* msg, uint64_t* out);
/* received/erased: n entries (erased[i] != 0 marks an erasure; the value at an
 * erased slot is ignored); msg_out: k symbols.  Returns SZ_ERR_RANK_DEFICIENT
 * or SZ_ERR_INCONSISTENT when recovery is impossible. */
int sz_code_decode_erasures(const sz_code* k, const uint64_t* received,
                            const uint8_t* erased, uint64_t* msg_out);
/* Exact rank of the generator matrix. */
int sz_code_rank(const sz_code* k, uint64_t* rank);
/* Dual scaling vector h; out must hold n values.  Needs ell >= 2 genus - 1. */
int sz_code_dual_scaling(sz_code* k, uint64_t* out);
/* Membership via the n - k parity checks. */
int sz_code_contains(sz_code* k, const uint64_t* word, int* contained);

typedef struct {
    uint64_t k, kprime, n;
    int dims_ok;
    uint64_t pairs_checked, failures;
    int full;
    int pass;
} sz_dual_report;

int sz_code_verify_duality(sz_code* k, uint64_t samples, uint64_t seed, int full,
                           sz_dual_report* out);

typedef struct {
    uint64_t auts, words, failures;
    int pass;
    char first_failure[192];
} sz_aut_report;

int sz_code_aut_check(sz_code* k, uint64_t auts, uint64_t words_per_aut, uint64_t seed,
                      sz_aut_report* out);

/* ------------------------------------------------------------------ */
/* Self test.                                                          */

#define SZ_SELFTEST_QUICK 1u          /* skip the large-level matrix checks */
#define SZ_SELFTEST_CORRUPT_FIELD 2u  /* negative-control hook */
#define SZ_SELFTEST_FULL_GRAM 4u      /* full pairwise duality product */

/* emit (may be NULL) receives one formatted line per check; returning nonzero
 * aborts.  Returns SZ_OK when every check passed, SZ_ERR_SELFTEST_FAILED
 * otherwise. */
typedef int (*sz_line_fn)(const char* line, void* user);
int sz_selftest(uint32_t m, uint64_t seed, uint32_t flags, sz_line_fn emit, void* user);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SUZUKI_H */
