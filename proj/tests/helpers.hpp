// Shared fixtures for the engine test suites.
#ifndef FDVIEW_TESTS_HELPERS_HPP
#define FDVIEW_TESTS_HELPERS_HPP

#include <cstdint>
#include <memory>
#include <tuple>
#include <vector>

#include "fdview/constraints.hpp"
#include "fdview/engine.hpp"
#include "fdview/var.hpp"

namespace testutil {

using fdview::Constraint;
using fdview::ConstraintId;
using fdview::Engine;
using fdview::Event;
using fdview::EventKind;
using fdview::Var;

/// (kind, constraint, source id, value) of a popped or pending event.
using EventTuple = std::tuple<EventKind, ConstraintId, fdview::VarId, std::int64_t>;

inline EventTuple to_tuple(const Event& e)
{
    return {e.kind, e.constraint, e.source->id(),
        e.kind == EventKind::value ? e.value : 0};
}

/// Constraint that does nothing: a target for manually scheduled events
/// and watch registrations.
class Noop final : public Constraint {
public:
    Noop() : Constraint({}) {}
    bool post(Engine&) override { return true; }
    bool entailed() const override { return true; }
};

/// Removes a fixed value from a variable whenever propagated (a one-shot
/// "x != v" propagator driven purely by the queue).
class RemoveValue final : public Constraint {
public:
    RemoveValue(Var& x, std::int64_t v) : Constraint({&x}), v_(v) {}
    bool post(Engine&) override { return true; }
    bool propagate_var(Engine&, Var&) override { return scope_[0]->remove(v_); }
    bool entailed() const override { return scope_[0]->value() != v_; }

private:
    std::int64_t v_;
};

inline ConstraintId add_noop(Engine& e)
{
    return e.post(std::make_unique<Noop>());
}

/// Snapshot of the queue as tuples.
inline std::vector<EventTuple> pending(const Engine& e)
{
    std::vector<EventTuple> out;
    for (const Event& ev : e.pending_events())
        out.push_back(to_tuple(ev));
    return out;
}

/// Runs the fixpoint while recording every pop.
inline std::vector<EventTuple> drain(Engine& e, bool* ok = nullptr)
{
    std::vector<EventTuple> popped;
    e.pop_hook = [&](const Event& ev) { popped.push_back(to_tuple(ev)); };
    const bool result = e.propagate_fixpoint();
    e.pop_hook = nullptr;
    if (ok != nullptr)
        *ok = result;
    return popped;
}

/// Value events among `events`, keyed as (constraint, source, value).
inline std::vector<std::tuple<ConstraintId, fdview::VarId, std::int64_t>> value_events(
    const std::vector<EventTuple>& events)
{
    std::vector<std::tuple<ConstraintId, fdview::VarId, std::int64_t>> out;
    for (const auto& [kind, c, src, v] : events)
        if (kind == EventKind::value)
            out.push_back({c, src, v});
    return out;
}

}

#endif
