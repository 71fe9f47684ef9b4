/* C API for the conescale shared library.
 *
 * Conventions:
 *   - every function returns a cs_status; CS_OK means success
 *   - output parameters are written only on success (except where noted)
 *   - strings returned through char** are heap-allocated JSON documents and
 *     must be released with cs_string_free
 *   - cs_last_error() returns a thread-local message for the last failing
 *     call on this thread
 *   - sampled checks take an explicit seed and are fully deterministic:
 *     identical inputs and seed produce byte-identical JSON
 */
#ifndef CONESCALE_H
#define CONESCALE_H

#include <stdint.h>

#ifndef CONESCALE_API
#ifdef _WIN32
#define CONESCALE_API __declspec(dllexport)
#else
#define CONESCALE_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cs_status {
    CS_OK = 0,
    CS_ERROR_DIMENSION = 1,
    CS_ERROR_DOMAIN = 2,
    CS_ERROR_NOT_INTERIOR = 3,
    CS_ERROR_NUMERICAL = 4,
    CS_ERROR_PARSE = 5,
    CS_ERROR_RANGE_INCLUSION = 6,
    CS_ERROR_TEMPLATE = 7,
    CS_ERROR_NONCONVERGENCE = 8,
    CS_ERROR_INVALID_ARGUMENT = 9,
    CS_ERROR_INTERNAL = 10
} cs_status;

CONESCALE_API const char* cs_status_name(cs_status status);
CONESCALE_API const char* cs_last_error(void);
CONESCALE_API void cs_string_free(char* s);

/* ---- cones ---- */

typedef struct cs_cone cs_cone;

/* Accepts the cone JSON encoding, e.g. {"kind":"orthant","dim":2}. */
CONESCALE_API cs_status cs_cone_from_json(const char* json, cs_cone** out);
CONESCALE_API void cs_cone_free(cs_cone* cone);
CONESCALE_API int cs_cone_dim(const cs_cone* cone);

CONESCALE_API cs_status cs_cone_contains(const cs_cone* cone, const double* x, int n, int* result);
CONESCALE_API cs_status cs_cone_interior_contains(const cs_cone* cone, const double* x, int n, int* result);
CONESCALE_API cs_status cs_cone_leq(const cs_cone* cone, const double* x, const double* y, int n, int* result);
CONESCALE_API cs_status cs_cone_strictly_less(const cs_cone* cone, const double* x, const double* y, int n,
                                int* result);
CONESCALE_API cs_status cs_cone_find_scale(const cs_cone* cone, const double* c, const double* e, int n,
                             double* delta);
CONESCALE_API cs_status cs_cone_validate(const cs_cone* cone, uint64_t seed, char** report_json);

/* ---- scalarization ---- */

typedef struct cs_scalarization_result {
    double value;
    double bracket_lo;
    double bracket_hi;
    int iterations;
} cs_scalarization_result;

CONESCALE_API cs_status cs_xi(const cs_cone* cone, const double* e, const double* y, int n,
                cs_scalarization_result* out);
CONESCALE_API cs_status cs_norm(const cs_cone* cone, const double* e, const double* x, int n, double* out);
CONESCALE_API cs_status cs_equivalence_constants(const cs_cone* cone, const double* e, const double* e2, int n,
                                   double* lower, double* upper);

/* ---- order and metrics ---- */

/* Samples `samples` interior directions from the seed (canonical witness
 * first). leq_membership is the decision; leq_scalarized cross-validates. */
CONESCALE_API cs_status cs_order_check(const cs_cone* cone, const double* x, const double* y, int n,
                         int samples, uint64_t seed, int* leq_membership, int* leq_scalarized);

/* space_json: {"cone":...,"n_points":N,"d":[[[...],...],...]} */
CONESCALE_API cs_status cs_metric_validate(const char* space_json, int sample_triples, uint64_t seed,
                             char** report_json);

/* ---- solvers ----
 *
 * Both solvers return CS_OK on convergence and CS_ERROR_NONCONVERGENCE when
 * max_iter was reached; report_json is written in both cases. */

CONESCALE_API cs_status cs_solve(const char* problem_json, char** report_json);
CONESCALE_API cs_status cs_solve_tvs(const char* problem_json, char** report_json);

/* ---- selftest ----
 *
 * suite may be NULL to run all suites (cones, scalarization, cone_metric,
 * gauges, fixed_point). Returns CS_OK even when checks fail; *failures
 * carries the count. */
CONESCALE_API cs_status cs_selftest(const char* suite, uint64_t seed, int* failures, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* CONESCALE_H */
