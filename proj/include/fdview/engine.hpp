#ifndef FDVIEW_ENGINE_HPP
#define FDVIEW_ENGINE_HPP

#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <unordered_set>
#include <vector>

#include "fdview/stats.hpp"
#include "fdview/trail.hpp"
#include "fdview/types.hpp"
#include "fdview/view_fn.hpp"

namespace fdview {

class Var;
class Constraint;

enum class EventKind : std::uint8_t { variable, value };

/// A unit of pending propagation work: either "constraint c must run
/// because source shrank" or "... because source lost value". The value of
/// a value event is expressed in the coordinate space of its source.
struct Event {
    EventKind kind;
    ConstraintId constraint;
    Var* source;
    std::int64_t value; // meaningful for value events only
};

struct EngineOptions {
    /// Variable-view hosts store composed first-order functions in their
    /// value watch lists instead of using map(). Event-equivalence tests
    /// only; never set by production paths.
    bool stored_fn_watches = false;
};

/// Owns the propagation queue, the fixpoint loop, the trail, and every
/// variable, view and constraint of one model. Single-threaded; one
/// instance is confined to one thread, distinct instances share nothing.
class Engine {
public:
    explicit Engine(EngineMode mode, EngineOptions options = {});
    ~Engine();

    Engine(const Engine&) = delete;
    Engine& operator=(const Engine&) = delete;

    EngineMode mode() const { return mode_; }
    bool stored_fn_watches() const { return options_.stored_fn_watches; }
    Trail& trail() { return trail_; }
    MemCounter& mem() { return mem_; }
    RunStats& stats() { return stats_; }

    /// Fresh plain variable with universe [lo, hi]. The concrete
    /// representation follows the engine mode.
    Var& make_var(std::int64_t lo, std::int64_t hi);

    /// View factories. Registration with the underlying handle (pair
    /// watching or addView) is performed here; views are not constructed
    /// any other way. View creation is rejected in no-view mode, and the
    /// non-injective factories are rejected in variable-view mode.
    Var& shift_view(Var& x, std::int64_t k);
    Var& affine_view(Var& x, std::int64_t a, std::int64_t b);
    Var& literal_view(Var& x, std::int64_t i);
    Var& modulo_view(Var& x, std::int64_t k);
    Var& noninjective_view(Var& x, NonInjFn fn);

    /// Registers and posts a constraint. A post that wipes out a domain
    /// marks the whole model failed at the root.
    ConstraintId post(std::unique_ptr<Constraint> c);
    bool root_failed() const { return root_failed_; }

    Constraint& constraint(ConstraintId c) { return *constraints_[static_cast<std::size_t>(c)]; }
    std::size_t constraint_count() const { return constraints_.size(); }
    std::size_t var_count() const { return vars_.size(); }
    Var& var(VarId id) { return *vars_[static_cast<std::size_t>(id)]; }

    /// Variable events are deduplicated per (constraint, source) while
    /// pending; value events never are.
    void schedule_var_event(ConstraintId c, Var& x);
    void schedule_value_event(ConstraintId c, Var& x, std::int64_t v);

    /// Drains the queue, dispatching each event to its constraint.
    /// Returns false after flushing the queue if a propagator wiped out a
    /// domain; the failure counter is incremented exactly once per flush.
    bool propagate_fixpoint();

    void push_frame() { trail_.push_frame(); }
    void pop_frame() { trail_.pop_frame(); }

    /// True when every posted constraint holds under the current (fully
    /// bound) assignment.
    bool all_entailed() const;

    const std::deque<Event>& pending_events() const { return queue_; }
    std::size_t pending_count() const { return queue_.size(); }

    /// Test instrumentation: observes every popped event.
    std::function<void(const Event&)> pop_hook;

private:
    Var& adopt(std::unique_ptr<Var> v);
    void flush_queue();
    static std::uint64_t flag_key(ConstraintId c, VarId x)
    {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c)) << 32)
            | static_cast<std::uint32_t>(x);
    }

    EngineMode mode_;
    EngineOptions options_;
    MemCounter mem_;
    Trail trail_;
    RunStats stats_;
    std::vector<std::unique_ptr<Var>> vars_;
    std::vector<std::unique_ptr<Constraint>> constraints_;
    std::deque<Event> queue_;
    std::unordered_set<std::uint64_t> pending_var_events_;
    bool root_failed_ = false;
};

}

#endif
