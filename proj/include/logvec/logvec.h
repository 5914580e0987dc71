#ifndef LOGVEC_LOGVEC_H
#define LOGVEC_LOGVEC_H

/* C interface to the logvec engine. All objects are opaque and owned by the
   caller once returned; free them with the matching *_free function.
   Strings returned through char** must be released with logvec_string_free.
   On failure the functions return a nonzero status and logvec_last_error()
   describes it (per thread). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LOGVEC_BUILDING)
#    define LOGVEC_API __declspec(dllexport)
#  else
#    define LOGVEC_API __declspec(dllimport)
#  endif
#else
#  define LOGVEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values match the CLI exit codes for 0..4. */
typedef enum logvec_status {
  LOGVEC_OK = 0,
  LOGVEC_ERROR = 1,
  LOGVEC_PARSE_ERROR = 2,
  LOGVEC_HYPOTHESIS_FAILED = 3,
  LOGVEC_CHECK_FAILED = 4,
  LOGVEC_INVALID_ARGUMENT = 5,
  LOGVEC_RESOURCE_LIMIT = 6
} logvec_status;

typedef struct logvec_poly logvec_poly;
typedef struct logvec_arrangement logvec_arrangement;
typedef struct logvec_report logvec_report;

/* Passed as `prime` to use the file setting (exact rationals if unset). */
#define LOGVEC_PRIME_FROM_FILE 0u
/* Passed as `seed` to use the file setting (1 if unset). */
#define LOGVEC_SEED_FROM_FILE (-1)

LOGVEC_API const char* logvec_version(void);
LOGVEC_API const char* logvec_status_name(logvec_status status);

/* Message of the last failure on this thread; "" if none. */
LOGVEC_API const char* logvec_last_error(void);
/* 1-based position of the last parse error on this thread; 0 otherwise. */
LOGVEC_API void logvec_last_error_position(size_t* line, size_t* column);

LOGVEC_API void logvec_string_free(char* s);

/* Ternary forms over Q in x, y, z. */
LOGVEC_API logvec_status logvec_poly_parse(const char* text, logvec_poly** out);
LOGVEC_API void logvec_poly_free(logvec_poly* p);
LOGVEC_API logvec_status logvec_poly_to_string(const logvec_poly* p, char** out);
LOGVEC_API logvec_status logvec_poly_degree(const logvec_poly* p, int* out);
LOGVEC_API logvec_status logvec_poly_multiply(const logvec_poly* a, const logvec_poly* b, logvec_poly** out);

/* Minimal generator degrees of D0. Writes at most `capacity` degrees and
   the full count to *count. */
LOGVEC_API logvec_status logvec_poly_d0_degrees(const logvec_poly* p, int* degrees, size_t capacity, size_t* count);

/* Global Milnor and Tjurina totals and the number of singular points. */
LOGVEC_API logvec_status logvec_poly_singularities(const logvec_poly* p, uint64_t seed, long long* mu_total,
                                                   long long* tau_total, long long* points);

LOGVEC_API logvec_status logvec_arrangement_load(const char* path, logvec_arrangement** out);
LOGVEC_API logvec_status logvec_arrangement_parse(const char* text, logvec_arrangement** out);
LOGVEC_API void logvec_arrangement_free(logvec_arrangement* a);
/* Replaces the curve to add. */
LOGVEC_API logvec_status logvec_arrangement_set_curve(logvec_arrangement* a, const char* expr);
LOGVEC_API logvec_status logvec_arrangement_render(const logvec_arrangement* a, char** out);

/* Runs the analysis. The return value is the outcome (OK, HYPOTHESIS_FAILED,
   CHECK_FAILED, ...); *out receives a report whenever one was produced,
   including for failed hypotheses and failed checks. */
LOGVEC_API logvec_status logvec_analyze(const logvec_arrangement* a, uint32_t prime, int64_t seed,
                                        logvec_report** out);

/* Degree-d member through the singular points; see logvec_report_curve and
   logvec_report_augmented_file. */
LOGVEC_API logvec_status logvec_find_curve(const logvec_arrangement* a, int degree, uint32_t prime, int64_t seed,
                                           logvec_report** out);

LOGVEC_API void logvec_report_free(logvec_report* r);
LOGVEC_API int logvec_report_exit_code(const logvec_report* r);
LOGVEC_API logvec_status logvec_report_json(const logvec_report* r, int include_timings, char** out);
LOGVEC_API logvec_status logvec_report_text(const logvec_report* r, char** out);
/* Found curve equation; LOGVEC_INVALID_ARGUMENT if the report has none. */
LOGVEC_API logvec_status logvec_report_curve(const logvec_report* r, char** out);
LOGVEC_API logvec_status logvec_report_augmented_file(const logvec_report* r, char** out);

/* Compares against a stored JSON report, ignoring timings. Returns OK when
   equal, CHECK_FAILED otherwise with one difference per line in *differences. */
LOGVEC_API logvec_status logvec_report_compare(const logvec_report* r, const char* expected_json, char** differences);

#ifdef __cplusplus
}
#endif

#endif
