/* C API for the equal-demand capacitated arc routing solver library.
 *
 * All functions follow the same conventions:
 *   - objects are opaque handles created and destroyed by the library;
 *   - every fallible call returns a carp_status, with out-parameters last;
 *   - on failure, carp_last_error() returns a thread-local message;
 *   - strings returned through char** out-parameters are heap-allocated and
 *     must be released with carp_free().
 */
#ifndef CARP_H
#define CARP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CARP_API __declspec(dllexport)
#else
#define CARP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum carp_status {
    CARP_OK = 0,
    CARP_ERROR_INTERNAL = 1,
    CARP_ERROR_PARSE = 2,
    CARP_ERROR_INFEASIBLE = 3,
    CARP_ERROR_SIZE_CAP = 4,
    CARP_ERROR_VERIFICATION = 5,
    CARP_ERROR_INVALID_ARGUMENT = 6
} carp_status;

typedef struct carp_instance carp_instance;
typedef struct carp_solution carp_solution;

CARP_API const char* carp_status_name(carp_status status);
CARP_API const char* carp_last_error(void);
CARP_API void carp_free(void* ptr);

/* ---- instances ------------------------------------------------------- */

/* format: "native" or "classic". The instance is normalized on load. */
CARP_API carp_status carp_instance_load(const char* path, const char* format,
                                        carp_instance** out);

/* mode: "euclidean" or "random-metric". Deterministic for a fixed seed. */
CARP_API carp_status carp_instance_generate(int customers, int capacity, const char* mode,
                                            uint64_t seed, int coord_range,
                                            carp_instance** out);

CARP_API void carp_instance_free(carp_instance* inst);
CARP_API int carp_instance_customers(const carp_instance* inst);
CARP_API int carp_instance_capacity(const carp_instance* inst);
CARP_API carp_status carp_instance_set_capacity(carp_instance* inst, int capacity);
CARP_API carp_status carp_instance_write_native(const carp_instance* inst, const char* path);

/* ---- solving ---------------------------------------------------------- */

/* rpp: "best", "h1" or "h2"; partition: "candidates" or "dp". */
CARP_API carp_status carp_solve(const carp_instance* inst, const char* rpp,
                                const char* partition, carp_solution** out);

/* Exact optimum; fails with CARP_ERROR_SIZE_CAP beyond max_customers. */
CARP_API carp_status carp_solve_exact(const carp_instance* inst, int max_customers,
                                      carp_solution** out);

CARP_API void carp_solution_free(carp_solution* sol);
CARP_API double carp_solution_total_cost(const carp_solution* sol);
CARP_API int carp_solution_route_count(const carp_solution* sol);
CARP_API double carp_solution_route_cost(const carp_solution* sol, int route);
CARP_API int carp_solution_route_length(const carp_solution* sol, int route);

/* Customer served at `position` of `route`; *reversed is 0 or 1. */
CARP_API carp_status carp_solution_route_customer(const carp_solution* sol, int route,
                                                  int position, int* customer, int* reversed);

/* Tour costs behind the solution; -1.0 when the tour was not built. */
CARP_API double carp_solution_tour_cost_h1(const carp_solution* sol);
CARP_API double carp_solution_tour_cost_h2(const carp_solution* sol);
/* "h1" or "h2": the tour the partition consumed. */
CARP_API const char* carp_solution_tour_choice(const carp_solution* sol);

/* Lifted walk of `route` in raw vertex ids (closed at the raw depot). */
CARP_API int carp_solution_route_walk_length(const carp_solution* sol, int route);
CARP_API carp_status carp_solution_route_walk_vertex(const carp_solution* sol, int route,
                                                     int position, int* vertex);
CARP_API double carp_solution_lifted_cost(const carp_solution* sol);

/* Feasibility report; empty string when feasible. */
CARP_API carp_status carp_solution_check(const carp_solution* sol, const carp_instance* inst,
                                         char** report);

/* Machine-readable line-oriented report (one route per line). */
CARP_API carp_status carp_solution_report(const carp_solution* sol, const carp_instance* inst,
                                          char** report);

/* ---- analysis --------------------------------------------------------- */

/* Closed-form approximation ratio for capacity >= 3, with its l parameter. */
CARP_API carp_status carp_ratio_closed_form(int capacity, int* l_out, double* ratio_out);

/* Grid-search oracle over the tau/eta bound functions. */
CARP_API carp_status carp_ratio_grid_search(int capacity, int l_max, int alpha_steps,
                                            double* ratio_out);

/* Lower bounds and the full inequality suite for one instance. */
CARP_API carp_status carp_bounds_report(const carp_instance* inst, char** report,
                                        int* violations);

/* Randomized end-to-end verification sweep. */
CARP_API carp_status carp_verify_sweep(uint64_t seed, int trials, int max_customers,
                                       int max_capacity, int jobs, char** report,
                                       int* violations);

#ifdef __cplusplus
}
#endif

#endif /* CARP_H */
