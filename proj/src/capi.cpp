#include "fdview.h"

#include <memory>
#include <string>
#include <vector>

#include "fdview/bench.hpp"
#include "fdview/constraints.hpp"
#include "fdview/engine.hpp"
#include "fdview/models.hpp"
#include "fdview/search.hpp"
#include "fdview/var.hpp"

using namespace fdview;

struct fdv_solver {
    explicit fdv_solver(EngineMode mode) : engine(mode) {}

    Engine engine;
    std::vector<Var*> handles;
    std::vector<std::vector<std::int64_t>> solutions;
};

namespace {

    bool mode_ok(int mode)
    {
        return mode == FDV_MODE_NOVIEW || mode == FDV_MODE_VARVIEW
            || mode == FDV_MODE_DOMVIEW;
    }

    EngineMode to_mode(int mode)
    {
        switch (mode) {
        case FDV_MODE_VARVIEW:
            return EngineMode::variable_view;
        case FDV_MODE_DOMVIEW:
            return EngineMode::domain_view;
        default:
            return EngineMode::no_view;
        }
    }

    Var* lookup(fdv_solver* s, fdv_var x)
    {
        if (x < 0 || static_cast<std::size_t>(x) >= s->handles.size())
            return nullptr;
        return s->handles[static_cast<std::size_t>(x)];
    }

    int collect(fdv_solver* s, const fdv_var* xs, size_t n, std::vector<Var*>& out)
    {
        for (size_t i = 0; i < n; ++i) {
            Var* v = lookup(s, xs[i]);
            if (v == nullptr)
                return FDV_EINVAL;
            out.push_back(v);
        }
        return FDV_OK;
    }

    fdv_var adopt(fdv_solver* s, Var& v)
    {
        s->handles.push_back(&v);
        return static_cast<fdv_var>(s->handles.size() - 1);
    }

    void write_stats(const RunStats& in, fdv_stats* out)
    {
        out->propagations = in.propagations;
        out->nodes = in.nodes;
        out->failures = in.failures;
        out->solutions = in.solutions;
        out->peak_bytes = in.peak_bytes;
        out->cpu_ms = in.cpu_ms;
        out->wall_ms = in.wall_ms;
    }

}

extern "C" {

int fdv_solver_new(int mode, fdv_solver** out)
{
    if (out == nullptr || !mode_ok(mode))
        return FDV_EINVAL;
    *out = new fdv_solver(to_mode(mode));
    return FDV_OK;
}

void fdv_solver_free(fdv_solver* s) { delete s; }

int fdv_int_var(fdv_solver* s, int64_t lo, int64_t hi, fdv_var* out)
{
    if (s == nullptr || out == nullptr || lo > hi)
        return FDV_EINVAL;
    *out = adopt(s, s->engine.make_var(lo, hi));
    return FDV_OK;
}

int fdv_shift_view(fdv_solver* s, fdv_var x, int64_t k, fdv_var* out)
{
    return fdv_affine_view(s, x, 1, k, out);
}

int fdv_affine_view(fdv_solver* s, fdv_var x, int64_t a, int64_t b, fdv_var* out)
{
    if (s == nullptr || out == nullptr || a == 0)
        return FDV_EINVAL;
    Var* v = lookup(s, x);
    if (v == nullptr)
        return FDV_EINVAL;
    if (s->engine.mode() == EngineMode::no_view)
        return FDV_EMODE;
    *out = adopt(s, s->engine.affine_view(*v, a, b));
    return FDV_OK;
}

int fdv_literal_view(fdv_solver* s, fdv_var x, int64_t i, fdv_var* out)
{
    if (s == nullptr || out == nullptr)
        return FDV_EINVAL;
    Var* v = lookup(s, x);
    if (v == nullptr)
        return FDV_EINVAL;
    if (s->engine.mode() != EngineMode::domain_view)
        return FDV_EMODE;
    *out = adopt(s, s->engine.literal_view(*v, i));
    return FDV_OK;
}

int fdv_modulo_view(fdv_solver* s, fdv_var x, int64_t k, fdv_var* out)
{
    if (s == nullptr || out == nullptr || k < 1)
        return FDV_EINVAL;
    Var* v = lookup(s, x);
    if (v == nullptr)
        return FDV_EINVAL;
    if (s->engine.mode() != EngineMode::domain_view)
        return FDV_EMODE;
    *out = adopt(s, s->engine.modulo_view(*v, k));
    return FDV_OK;
}

int fdv_post_alldifferent(fdv_solver* s, const fdv_var* xs, size_t n)
{
    if (s == nullptr || (n > 0 && xs == nullptr) || n < 1)
        return FDV_EINVAL;
    std::vector<Var*> scope;
    if (int rc = collect(s, xs, n, scope); rc != FDV_OK)
        return rc;
    s->engine.post(std::make_unique<AllDifferent>(std::move(scope)));
    return FDV_OK;
}

int fdv_post_linear_eq(fdv_solver* s, const fdv_var* xs, size_t n, int64_t rhs)
{
    if (s == nullptr || (n > 0 && xs == nullptr))
        return FDV_EINVAL;
    std::vector<Var*> scope;
    if (int rc = collect(s, xs, n, scope); rc != FDV_OK)
        return rc;
    s->engine.post(std::make_unique<LinearEq>(std::move(scope), rhs));
    return FDV_OK;
}

int fdv_post_linear_leq(fdv_solver* s, const fdv_var* xs, size_t n, int64_t rhs)
{
    if (s == nullptr || (n > 0 && xs == nullptr))
        return FDV_EINVAL;
    std::vector<Var*> scope;
    if (int rc = collect(s, xs, n, scope); rc != FDV_OK)
        return rc;
    s->engine.post(std::make_unique<LinearLeq>(std::move(scope), rhs));
    return FDV_OK;
}

int fdv_post_bool_clause(fdv_solver* s, const fdv_var* pos, size_t npos,
    const fdv_var* neg, size_t nneg)
{
    if (s == nullptr || (npos > 0 && pos == nullptr) || (nneg > 0 && neg == nullptr))
        return FDV_EINVAL;
    std::vector<Var*> p, n;
    if (int rc = collect(s, pos, npos, p); rc != FDV_OK)
        return rc;
    if (int rc = collect(s, neg, nneg, n); rc != FDV_OK)
        return rc;
    s->engine.post(std::make_unique<BoolClause>(std::move(p), std::move(n)));
    return FDV_OK;
}

int fdv_var_min(fdv_solver* s, fdv_var x, int64_t* out)
{
    if (s == nullptr || out == nullptr)
        return FDV_EINVAL;
    Var* v = lookup(s, x);
    if (v == nullptr)
        return FDV_EINVAL;
    *out = v->min();
    return FDV_OK;
}

int fdv_var_max(fdv_solver* s, fdv_var x, int64_t* out)
{
    if (s == nullptr || out == nullptr)
        return FDV_EINVAL;
    Var* v = lookup(s, x);
    if (v == nullptr)
        return FDV_EINVAL;
    *out = v->max();
    return FDV_OK;
}

int fdv_var_size(fdv_solver* s, fdv_var x, int64_t* out)
{
    if (s == nullptr || out == nullptr)
        return FDV_EINVAL;
    Var* v = lookup(s, x);
    if (v == nullptr)
        return FDV_EINVAL;
    *out = v->size();
    return FDV_OK;
}

int fdv_var_member(fdv_solver* s, fdv_var x, int64_t value, int* out)
{
    if (s == nullptr || out == nullptr)
        return FDV_EINVAL;
    Var* v = lookup(s, x);
    if (v == nullptr)
        return FDV_EINVAL;
    *out = v->member(value) ? 1 : 0;
    return FDV_OK;
}

int fdv_solve(fdv_solver* s, const fdv_var* branch, size_t n, int64_t max_solutions,
    fdv_stats* stats)
{
    if (s == nullptr || (n > 0 && branch == nullptr))
        return FDV_EINVAL;
    std::vector<Var*> vars;
    if (int rc = collect(s, branch, n, vars); rc != FDV_OK)
        return rc;
    SearchOptions options;
    options.max_solutions = max_solutions;
    SearchOutcome outcome = dfs_first_fail(s->engine, vars, options);
    s->solutions = std::move(outcome.solutions);
    if (stats != nullptr) {
        outcome.stats.peak_bytes = s->engine.mem().peak();
        write_stats(outcome.stats, stats);
    }
    return FDV_OK;
}

int fdv_solution_count(fdv_solver* s, uint64_t* out)
{
    if (s == nullptr || out == nullptr)
        return FDV_EINVAL;
    *out = s->solutions.size();
    return FDV_OK;
}

int fdv_solution_value(fdv_solver* s, uint64_t sol, size_t i, int64_t* out)
{
    if (s == nullptr || out == nullptr)
        return FDV_EINVAL;
    if (sol >= s->solutions.size() || i >= s->solutions[sol].size())
        return FDV_ERANGE;
    *out = s->solutions[sol][i];
    return FDV_OK;
}

int fdv_bench_once(const fdv_bench_opts* opts, fdv_stats* out)
{
    if (opts == nullptr || out == nullptr || opts->name == nullptr)
        return FDV_EINVAL;
    if (!mode_ok(opts->mode))
        return FDV_EINVAL;
    const std::string name(opts->name);
    if (!known_bench(name))
        return FDV_ENAME;
    if (name == "knapsack" && opts->n != 0 && (opts->n < 1 || opts->n > 6))
        return FDV_EINVAL;
    if (opts->n < 0)
        return FDV_EINVAL;
    BenchInstance instance;
    instance.name = name;
    instance.n = opts->n;
    if (opts->v > 0)
        instance.v = opts->v;
    if (opts->k > 0)
        instance.k = opts->k;
    if (opts->lam > 0)
        instance.lambda = opts->lam;
    const RunStats stats = run_bench_once(instance, to_mode(opts->mode), opts->limit);
    write_stats(stats, out);
    return FDV_OK;
}

} // extern "C"
