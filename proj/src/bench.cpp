#include "fdview/bench.hpp"

#include <chrono>
#include <ctime>

#include "fdview/engine.hpp"
#include "fdview/search.hpp"

namespace fdview {

RunStats run_bench_once(const BenchInstance& instance, EngineMode mode,
    std::int64_t limit)
{
    const auto wall_start = std::chrono::steady_clock::now();
    const std::clock_t cpu_start = std::clock();

    Engine engine(mode);
    BuiltModel model = build_named(engine, instance);
    SearchOptions options;
    options.max_solutions = limit == 0 ? model.default_limit : limit;
    SearchOutcome outcome = dfs_first_fail(engine, model.decision_vars, options);

    const std::clock_t cpu_end = std::clock();
    const auto wall_end = std::chrono::steady_clock::now();
    outcome.stats.cpu_ms = 1000.0 * static_cast<double>(cpu_end - cpu_start)
        / static_cast<double>(CLOCKS_PER_SEC);
    outcome.stats.wall_ms
        = std::chrono::duration<double, std::milli>(wall_end - wall_start).count();
    return outcome.stats;
}

}
