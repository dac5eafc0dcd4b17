/* stirmode — exact Stirling-number mode location and bound verification.
 *
 * C interface to the stirmode core. Big integers cross this boundary as
 * decimal strings; every string or handle returned by the library has a
 * matching sm_*_free. Functions returning sm_status leave a thread-local
 * message readable through sm_last_error() on failure.
 *
 * All computations are exact or certified: integer decisions never rest on
 * an unchecked floating-point value.
 */
#ifndef STIRMODE_H
#define STIRMODE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SM_API __declspec(dllexport)
#elif defined(__GNUC__)
#define SM_API __attribute__((visibility("default")))
#else
#define SM_API
#endif

typedef enum sm_status {
  SM_OK = 0,
  SM_ERR_USAGE = 1,     /* argument outside an operation's domain */
  SM_ERR_LIMIT = 2,     /* request past the configured row maximum */
  SM_ERR_PRECISION = 3, /* certified comparison hit its precision cap */
  SM_ERR_THEOREM = 4,   /* a proved statement failed; see sm_last_error() */
  SM_ERR_INTERNAL = 5
} sm_status;

SM_API const char* sm_version(void);

/* Thread-local message from the most recent failing call; "" when none. */
SM_API const char* sm_last_error(void);

/* Largest n for which Stirling rows may be built (default 5000). */
SM_API long sm_max_row_n(void);
SM_API sm_status sm_set_max_row_n(long n);

SM_API void sm_string_free(char* s);

/* ---------- Stirling rows ---------- */

typedef struct sm_row sm_row; /* opaque: one exact row S(n, 1..n) */

SM_API sm_status sm_row_compute(long n, sm_row** out);
SM_API void sm_row_free(sm_row* row);
SM_API long sm_row_n(const sm_row* row);
/* Decimal S(n,k); "0" for k <= 0 or k > n. NULL only on allocation failure. */
SM_API char* sm_row_entry(const sm_row* row, long k);
/* Decimal row sum, the Bell number B_n. */
SM_API char* sm_row_bell(const sm_row* row);
/* K_n (leftmost maximum) and whether S(n,K_n) == S(n,K_n+1). */
SM_API sm_status sm_row_mode(const sm_row* row, long* index, int* ties_right);

/* One-shot variants. *out is malloc'd decimal text. */
SM_API sm_status sm_stirling(long n, long k, char** out);
SM_API sm_status sm_bell(long n, char** out);

/* ---------- Lambert W and the certified floor ---------- */

/* Principal branch for x >= 0: |w*e^w - x| <= tolerance * max(1, x). */
SM_API sm_status sm_lambert_w(double x, double tolerance, double* out);

/* floor(e^{w(n)}) = max{k >= 1 : k*ln k <= n}, decided by enclosure
 * refinement. decision_bits (optional) receives the separating precision. */
SM_API sm_status sm_floor_exp_w(long n, long* value, unsigned* decision_bits);

/* ---------- per-n mode window ---------- */

typedef struct sm_kn_info {
  long n;
  long k_n;    /* leftmost maximum of S(n, .) */
  int ties_right;
  long k_star; /* floor(e^{w(n)}) */
  long corollary_lo;
  long corollary_hi;
  int branch_greater; /* k_*^n/k_*! > (k_*+1)^n/(k_*+1)! */
} sm_kn_info;

SM_API sm_status sm_kn(long n, sm_kn_info* out);

/* ---------- range verification ---------- */

/* Tri-state flags: 1 pass, 0 fail, -1 not applicable at this n. */
typedef struct sm_check_report {
  long n;
  long k_n;
  int ties_right;
  long k_star;
  long corollary_lo;
  long corollary_hi;
  int branch_greater;
  int theorem1_ok;
  int cp_membership_ok;
  int wegner_upper_ok;      /* -1 for n < 3 */
  int wegner_lower_ok;      /* -1 for n < 31 */
  int implication_upper_ok; /* -1 for n < 7 */
  int implication_lower_ok; /* -1 for n < 34 */
  int equality_event;
} sm_check_report;

typedef struct sm_verify_summary {
  long from, to;
  long theorem1_failures;
  long corollary_failures;
  long cp_failures;             /* counted for n <= 1200 only */
  long cp_informational_misses; /* count of misses beyond 1200 */
  long wegner_upper_failures;
  long wegner_lower_failures;
  long implication_upper_failures;
  long implication_lower_failures;
  long equality_count;
  int equality_only_at_2;
} sm_verify_summary;

typedef struct sm_verify_run sm_verify_run; /* opaque */

SM_API sm_status sm_verify_range(long from, long to, sm_verify_run** out);
SM_API void sm_verify_run_free(sm_verify_run* run);
SM_API size_t sm_verify_run_size(const sm_verify_run* run);
SM_API const sm_check_report* sm_verify_run_report(const sm_verify_run* run, size_t i);
SM_API sm_status sm_verify_run_summary(const sm_verify_run* run, sm_verify_summary* out);
/* n values with the equality event; returns the total count, fills up to cap. */
SM_API size_t sm_verify_run_equality_ns(const sm_verify_run* run, long* out, size_t cap);
/* Informational membership misses past 1200, same convention. */
SM_API size_t sm_verify_run_cp_misses(const sm_verify_run* run, long* out, size_t cap);

/* ---------- row-free implication scan ---------- */

typedef struct sm_implication_report {
  long n;
  long k_star;
  int upper_ok;      /* k_*+1 < n/(ln n - ln ln n); -1 for n < 3 */
  int lower_ok;      /* k_*-2 > (n/ln n)(1 + (ln ln n - 1)/ln n); -1 for n < 3 */
  int upper_counted; /* pass/fail window n >= 7 */
  int lower_counted; /* pass/fail window n >= 34 */
} sm_implication_report;

typedef struct sm_implications_run sm_implications_run; /* opaque */

SM_API sm_status sm_verify_implications(long from, long to, sm_implications_run** out);
SM_API void sm_implications_run_free(sm_implications_run* run);
SM_API size_t sm_implications_run_size(const sm_implications_run* run);
SM_API const sm_implication_report* sm_implications_run_report(const sm_implications_run* run,
                                                               size_t i);
SM_API long sm_implications_upper_failures(const sm_implications_run* run);
SM_API long sm_implications_lower_failures(const sm_implications_run* run);

/* ---------- conjecture search ---------- */

typedef struct sm_conjecture_report {
  long n;
  long trials;
  unsigned long long seed;
  long grid; /* 0 = no grid sweep */
  long evaluated_trials;
  long evaluated_grid;
  long skipped_nonunique; /* draws whose shifted mode was not unique */
  long shift_counts[3];
  int max_shift;
  int witness_found; /* 1 iff some draw reached shift 2 */
} sm_conjecture_report;

/* Runs `trials` seeded random draws of n probabilities (denominator 10^4)
 * plus, when grid > 0, an exhaustive sweep of nondecreasing tuples over
 * {0..grid}/grid. If a shift-2 witness exists, *witness (when non-NULL)
 * receives its probabilities as "a/b,c/d,..." (free with sm_string_free);
 * otherwise *witness is set to NULL. */
SM_API sm_status sm_conjecture_search(long n, long trials, unsigned long long seed,
                                      long grid, sm_conjecture_report* out,
                                      char** witness);

#ifdef __cplusplus
}
#endif

#endif /* STIRMODE_H */
