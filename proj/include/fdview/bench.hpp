#ifndef FDVIEW_BENCH_HPP
#define FDVIEW_BENCH_HPP

#include <cstdint>

#include "fdview/models.hpp"
#include "fdview/stats.hpp"
#include "fdview/types.hpp"

namespace fdview {

/// Builds the named instance in a fresh engine, searches (all solutions or
/// the benchmark's conventional limit when `limit` is 0, otherwise at most
/// `limit` solutions), and returns the run counters with cpu/wall timings
/// covering build plus search.
RunStats run_bench_once(const BenchInstance& instance, EngineMode mode,
    std::int64_t limit = 0);

}

#endif
