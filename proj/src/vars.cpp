#include "fdview/var.hpp"

#include <algorithm>

#include "fdview/engine.hpp"

namespace fdview {

std::vector<std::int64_t> Var::domain_values() const
{
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::int64_t v = min(); v <= max(); ++v)
        if (member(v))
            out.push_back(v);
    return out;
}

// --- DomainVar --------------------------------------------------------

DomainVar::DomainVar(Engine& engine, VarId id, std::int64_t lo, std::int64_t hi)
    : Var(engine, id), dom_(engine.trail(), engine.mem(), lo, hi)
{
    engine.mem().add(sizeof(DomainVar) - sizeof(IntDomain));
}

bool DomainVar::remove(std::int64_t v)
{
    switch (dom_.remove(v)) {
    case IntDomain::RemoveResult::absent:
        return true;
    case IntDomain::RemoveResult::wipeout:
        return false;
    case IntDomain::RemoveResult::removed:
        break;
    }
    scratch_.assign(1, v);
    emit_losses(scratch_);
    return true;
}

bool DomainVar::bind(std::int64_t v)
{
    if (!dom_.bind(v, scratch_))
        return false;
    if (!scratch_.empty())
        emit_losses(scratch_);
    return true;
}

bool DomainVar::update_min(std::int64_t v)
{
    switch (dom_.update_min(v, scratch_)) {
    case IntDomain::UpdateResult::no_change:
        return true;
    case IntDomain::UpdateResult::wipeout:
        return false;
    case IntDomain::UpdateResult::changed:
        break;
    }
    emit_losses(scratch_);
    return true;
}

bool DomainVar::update_max(std::int64_t v)
{
    switch (dom_.update_max(v, scratch_)) {
    case IntDomain::UpdateResult::no_change:
        return true;
    case IntDomain::UpdateResult::wipeout:
        return false;
    case IntDomain::UpdateResult::changed:
        break;
    }
    emit_losses(scratch_);
    return true;
}

void DomainVar::emit_losses(const std::vector<std::int64_t>& lost)
{
    // A batch behaves like a sequence of single-value removals, each waking
    // own watchers first and then informing the registered views of the
    // loss. Variable events deduplicate at the queue, so the repeated
    // wake() calls still yield one pending event per watcher.
    for (std::int64_t v : lost) {
        wake();
        wake_value(v);
        for (Var* y : views_) {
            y->wake();
            y->wake_value(v);
        }
    }
}

void DomainVar::watch(ConstraintId c)
{
    if (std::find(watchers_.begin(), watchers_.end(), c) != watchers_.end())
        return;
    watchers_.push_back(c);
    engine_.mem().add(sizeof(ConstraintId));
}

void DomainVar::watch_value(ConstraintId c)
{
    if (std::find(value_watchers_.begin(), value_watchers_.end(), c) != value_watchers_.end())
        return;
    value_watchers_.push_back(c);
    engine_.mem().add(sizeof(ConstraintId));
}

void DomainVar::wake()
{
    for (ConstraintId c : watchers_)
        engine_.schedule_var_event(c, *this);
}

void DomainVar::wake_value(std::int64_t v)
{
    for (ConstraintId c : value_watchers_)
        engine_.schedule_value_event(c, *this, v);
}

void DomainVar::add_view(Var& y)
{
    if (engine_.mode() != EngineMode::domain_view)
        return;
    if (std::find(views_.begin(), views_.end(), &y) != views_.end())
        return;
    views_.push_back(&y);
    engine_.mem().add(sizeof(Var*));
}

// --- PairVar ----------------------------------------------------------

PairVar::PairVar(Engine& engine, VarId id, std::int64_t lo, std::int64_t hi)
    : Var(engine, id), dom_(engine.trail(), engine.mem(), lo, hi)
{
    engine.mem().add(sizeof(PairVar) - sizeof(IntDomain));
}

bool PairVar::remove(std::int64_t v)
{
    switch (dom_.remove(v)) {
    case IntDomain::RemoveResult::absent:
        return true;
    case IntDomain::RemoveResult::wipeout:
        return false;
    case IntDomain::RemoveResult::removed:
        break;
    }
    scratch_.assign(1, v);
    emit_losses(scratch_);
    return true;
}

bool PairVar::bind(std::int64_t v)
{
    if (!dom_.bind(v, scratch_))
        return false;
    if (!scratch_.empty())
        emit_losses(scratch_);
    return true;
}

bool PairVar::update_min(std::int64_t v)
{
    switch (dom_.update_min(v, scratch_)) {
    case IntDomain::UpdateResult::no_change:
        return true;
    case IntDomain::UpdateResult::wipeout:
        return false;
    case IntDomain::UpdateResult::changed:
        break;
    }
    emit_losses(scratch_);
    return true;
}

bool PairVar::update_max(std::int64_t v)
{
    switch (dom_.update_max(v, scratch_)) {
    case IntDomain::UpdateResult::no_change:
        return true;
    case IntDomain::UpdateResult::wipeout:
        return false;
    case IntDomain::UpdateResult::changed:
        break;
    }
    emit_losses(scratch_);
    return true;
}

void PairVar::emit_losses(const std::vector<std::int64_t>& lost)
{
    for (std::int64_t v : lost) {
        wake();
        wake_value(v);
    }
}

void PairVar::watch_value(ConstraintId c)
{
    if (engine_.stored_fn_watches())
        watch_value_fn(c, *this, [](std::int64_t v) { return v; });
    else
        watch_value_pair(c, *this);
}

void PairVar::watch_pair(ConstraintId c, Var& watcher)
{
    for (const PairWatch& w : watchers_)
        if (w.constraint == c && w.watcher == &watcher)
            return;
    watchers_.push_back({c, &watcher});
    engine_.mem().add(sizeof(PairWatch));
}

void PairVar::watch_value_pair(ConstraintId c, Var& watcher)
{
    for (const PairWatch& w : value_watchers_)
        if (w.constraint == c && w.watcher == &watcher)
            return;
    value_watchers_.push_back({c, &watcher});
    engine_.mem().add(sizeof(PairWatch));
}

void PairVar::watch_value_fn(ConstraintId c, Var& watcher, ValueFn psi)
{
    for (const FnWatch& w : fn_value_watchers_)
        if (w.constraint == c && w.watcher == &watcher)
            return;
    fn_value_watchers_.push_back({c, &watcher, std::move(psi)});
    engine_.mem().add(sizeof(FnWatch));
}

void PairVar::wake()
{
    for (const PairWatch& w : watchers_)
        engine_.schedule_var_event(w.constraint, *w.watcher);
}

void PairVar::wake_value(std::int64_t v)
{
    for (const PairWatch& w : value_watchers_)
        engine_.schedule_value_event(w.constraint, *w.watcher, w.watcher->map(v));
    for (const FnWatch& w : fn_value_watchers_)
        engine_.schedule_value_event(w.constraint, *w.watcher, w.psi(v));
}

}
