#ifndef FDVIEW_SEARCH_HPP
#define FDVIEW_SEARCH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "fdview/stats.hpp"

namespace fdview {

class Engine;
class Var;

struct SearchOptions {
    /// Stop after this many solutions; negative means enumerate all, zero
    /// skips the search entirely.
    std::int64_t max_solutions = -1;
};

struct SearchOutcome {
    /// One entry per solution: the branch variables' values in input order.
    std::vector<std::vector<std::int64_t>> solutions;
    RunStats stats;
};

/// Depth-first search branching on an unbound variable of minimum domain
/// size (ties broken by earliest position), trying values in increasing
/// order. Each attempt is push_frame; bind; fixpoint; recurse; pop_frame.
/// Runs the initial fixpoint itself. Every reported assignment is
/// re-checked against all posted constraints.
SearchOutcome dfs_first_fail(Engine& engine, std::span<Var* const> vars,
    SearchOptions options = {});

}

#endif
