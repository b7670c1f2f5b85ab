#include "fdview/search.hpp"

#include <cstdio>
#include <cstdlib>

#include "fdview/engine.hpp"
#include "fdview/var.hpp"

namespace fdview {

namespace {

    struct Dfs {
        Engine& engine;
        std::span<Var* const> vars;
        std::int64_t limit;
        SearchOutcome& out;
        bool stop = false;

        Var* pick() const
        {
            Var* best = nullptr;
            for (Var* v : vars)
                if (!v->is_bound() && (best == nullptr || v->size() < best->size()))
                    best = v;
            return best;
        }

        void record_solution()
        {
            std::vector<std::int64_t> assignment;
            assignment.reserve(vars.size());
            for (Var* v : vars)
                assignment.push_back(v->value());
            if (!engine.all_entailed()) {
                std::fprintf(stderr, "fdview: solution failed post-hoc constraint check\n");
                std::abort();
            }
            out.solutions.push_back(std::move(assignment));
            engine.stats().solutions += 1;
            if (limit >= 0
                && static_cast<std::int64_t>(out.solutions.size()) >= limit)
                stop = true;
        }

        void run()
        {
            Var* x = pick();
            if (x == nullptr) {
                record_solution();
                return;
            }
            for (std::int64_t v : x->domain_values()) {
                engine.push_frame();
                engine.stats().nodes += 1;
                if (x->bind(v) && engine.propagate_fixpoint())
                    run();
                engine.pop_frame();
                if (stop)
                    return;
            }
        }
    };

}

SearchOutcome dfs_first_fail(Engine& engine, std::span<Var* const> vars,
    SearchOptions options)
{
    SearchOutcome out;
    if (options.max_solutions == 0) {
        out.stats = engine.stats();
        out.stats.peak_bytes = engine.mem().peak();
        return out;
    }
    engine.stats().nodes += 1; // root
    if (!engine.root_failed() && engine.propagate_fixpoint()) {
        Dfs dfs{engine, vars, options.max_solutions, out};
        dfs.run();
    }
    out.stats = engine.stats();
    out.stats.peak_bytes = engine.mem().peak();
    return out;
}

}
