/* C interface to the parenthesis-distance library.
 *
 * All functions return PD_OK (0) on success or a pd_status error code;
 * pd_last_error() describes the most recent failure on the calling thread.
 * Strings are opaque handles created by the pd_string_* constructors and
 * released with pd_string_free.
 */
#ifndef PARENDIST_H
#define PARENDIST_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pd_string pd_string;

typedef enum pd_status {
    PD_OK = 0,
    PD_EINVAL = 2,      /* bad parameter */
    PD_EPARSE = 3,      /* malformed input text */
    PD_ECAP = 4,        /* exact-algorithm size cap exceeded */
    PD_EINTERNAL = 5
} pd_status;

const char* pd_version(void);
const char* pd_last_error(void);

/* ---- strings ---------------------------------------------------------- */

/* Parses the text input format ("pairs: ..." / "types: ..." header). */
pd_status pd_string_parse(const char* text, size_t len, pd_string** out);

/* Builds a string over a plain integer alphabet: +k opens, -k closes type k. */
pd_status pd_string_from_ints(int32_t type_count, const int32_t* symbols, size_t count,
                              pd_string** out);

void pd_string_free(pd_string* s);

size_t pd_string_length(const pd_string* s);

/* Length after the dyck (kind = 0) or folding (kind = 1) reduction. */
pd_status pd_string_reduced_length(const pd_string* s, int kind, size_t* out);

/* Serializes to the text format; writes up to cap bytes (NUL-terminated) and
 * stores the full required size (excluding the NUL) in *needed. */
pd_status pd_string_serialize(const pd_string* s, char* buf, size_t cap, size_t* needed);

/* Random instance generators (deterministic in seed). */
pd_status pd_generate(int32_t pair_count, int32_t type_count, uint64_t seed, int32_t edits,
                      pd_string** out);
pd_status pd_generate_hard(int32_t length, int32_t scars, int32_t type_count, uint64_t seed,
                           pd_string** out);

/* ---- dyck edit distance ------------------------------------------------ */

/* method: "cubic" or "pivots". cap bounds the cubic DP (<=0 means default). */
pd_status pd_dyck_exact(const pd_string* s, const char* method, int64_t cap, int64_t* value);

pd_status pd_dyck_ptas(const pd_string* s, double epsilon, int64_t* value);

/* Sets *exceeds = 1 when the distance provably exceeds d (then *value is
 * unset); otherwise *value is a (3+epsilon)-approximation. */
pd_status pd_dyck_small(const pd_string* s, int64_t d, double epsilon, int* exceeds,
                        int64_t* value);

/* Optional parameter overrides for the subquadratic estimators; set any
 * field to a negative value to keep the derived default. */
typedef struct pd_gap_params {
    int64_t s1;
    int64_t s2;
    int64_t delta;
    double k1;
    double k2;
    int32_t threads;
} pd_gap_params;

typedef struct pd_gap_info {
    int64_t n_padded;
    int64_t grid_large;
    int64_t grid_small;
    int64_t certified_entries;
    int64_t s1, s2, delta;
    int32_t phases;
} pd_gap_info;

/* Gap estimator at threshold theta (a power of two in (0,1]). */
pd_status pd_gap_est(const pd_string* s, double theta, uint64_t seed,
                     const pd_gap_params* params, int64_t* value, pd_gap_info* info);

/* Constant-factor estimator; *used_gap reports which path produced the
 * value (0 = bounded-distance path, 1 = gap ladder). */
pd_status pd_dyck_est(const pd_string* s, uint64_t seed, const pd_gap_params* params,
                      int64_t* value, int* used_gap);

/* ---- folding distance --------------------------------------------------- */

pd_status pd_fold_exact(const pd_string* s, int64_t cap, int64_t* value);
pd_status pd_fold_approx(const pd_string* s, int64_t tau, int64_t* value);

#ifdef __cplusplus
}
#endif

#endif /* PARENDIST_H */
