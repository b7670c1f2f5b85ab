/* fdview.h - C interface to the fdview finite-domain constraint engine.
 *
 * All entry points return FDV_OK (0) on success or a negative error code;
 * results are written through out-parameters. A solver handle owns every
 * variable, view and constraint created through it and is confined to one
 * thread; distinct handles share nothing.
 */
#ifndef FDVIEW_H
#define FDVIEW_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define FDV_OK 0
#define FDV_EINVAL (-1)  /* bad argument, handle or benchmark parameter */
#define FDV_EMODE (-2)   /* operation not available in this engine mode */
#define FDV_ENAME (-3)   /* unknown benchmark name */
#define FDV_ERANGE (-4)  /* index out of range */

/* Propagation regime of a solver instance. */
#define FDV_MODE_NOVIEW 0
#define FDV_MODE_VARVIEW 1
#define FDV_MODE_DOMVIEW 2

typedef struct fdv_solver fdv_solver;

/* Handle to a variable or view, valid for the owning solver only. */
typedef int32_t fdv_var;

typedef struct fdv_stats {
    uint64_t propagations;
    uint64_t nodes;
    uint64_t failures;
    uint64_t solutions;
    uint64_t peak_bytes;
    double cpu_ms;
    double wall_ms;
} fdv_stats;

int fdv_solver_new(int mode, fdv_solver** out);
void fdv_solver_free(fdv_solver* s);

/* Fresh variable with inclusive domain [lo, hi]. */
int fdv_int_var(fdv_solver* s, int64_t lo, int64_t hi, fdv_var* out);

/* Views over a variable or view. Rejected with FDV_EMODE in no-view mode;
 * the literal and modulo views additionally require domain-view mode. */
int fdv_shift_view(fdv_solver* s, fdv_var x, int64_t k, fdv_var* out);
int fdv_affine_view(fdv_solver* s, fdv_var x, int64_t a, int64_t b, fdv_var* out);
int fdv_literal_view(fdv_solver* s, fdv_var x, int64_t i, fdv_var* out);
int fdv_modulo_view(fdv_solver* s, fdv_var x, int64_t k, fdv_var* out);

int fdv_post_alldifferent(fdv_solver* s, const fdv_var* xs, size_t n);
int fdv_post_linear_eq(fdv_solver* s, const fdv_var* xs, size_t n, int64_t rhs);
int fdv_post_linear_leq(fdv_solver* s, const fdv_var* xs, size_t n, int64_t rhs);
int fdv_post_bool_clause(fdv_solver* s, const fdv_var* pos, size_t npos,
    const fdv_var* neg, size_t nneg);

int fdv_var_min(fdv_solver* s, fdv_var x, int64_t* out);
int fdv_var_max(fdv_solver* s, fdv_var x, int64_t* out);
int fdv_var_size(fdv_solver* s, fdv_var x, int64_t* out);
int fdv_var_member(fdv_solver* s, fdv_var x, int64_t v, int* out);

/* Depth-first search branching on `branch` with the first-fail heuristic.
 * max_solutions < 0 enumerates all solutions, 0 runs no search. Stats are
 * written to *stats when non-NULL. Solutions are retained on the solver
 * until the next solve. */
int fdv_solve(fdv_solver* s, const fdv_var* branch, size_t n,
    int64_t max_solutions, fdv_stats* stats);
int fdv_solution_count(fdv_solver* s, uint64_t* out);
/* Value of the i-th branch variable in the sol-th solution. */
int fdv_solution_value(fdv_solver* s, uint64_t sol, size_t i, int64_t* out);

/* Benchmark harness: builds a named desk-scale instance in a fresh solver,
 * runs it, and reports the counters. `limit` = 0 uses the benchmark's
 * conventional solution limit, < 0 enumerates all solutions.
 * Knapsack reads `n` as its item count; bibd reads v/k/lam. */
typedef struct fdv_bench_opts {
    const char* name; /* magicseries | langford | knapsack | bibd | slab */
    int n;            /* 0 = benchmark default */
    int v, k, lam;    /* bibd parameters; 0 = defaults (7, 3, 1) */
    int mode;
    int64_t limit;
} fdv_bench_opts;

int fdv_bench_once(const fdv_bench_opts* opts, fdv_stats* out);

#ifdef __cplusplus
}
#endif

#endif
