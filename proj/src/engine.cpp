#include "fdview/engine.hpp"

#include <cassert>

#include "fdview/constraints.hpp"
#include "fdview/domain_views.hpp"
#include "fdview/noninjective_views.hpp"
#include "fdview/var.hpp"
#include "fdview/variable_views.hpp"

namespace fdview {

Engine::Engine(EngineMode mode, EngineOptions options)
    : mode_(mode), options_(options), trail_(mem_)
{
}

Engine::~Engine() = default;

Var& Engine::adopt(std::unique_ptr<Var> v)
{
    vars_.push_back(std::move(v));
    return *vars_.back();
}

Var& Engine::make_var(std::int64_t lo, std::int64_t hi)
{
    assert(lo <= hi);
    const VarId id = static_cast<VarId>(vars_.size());
    if (mode_ == EngineMode::variable_view)
        return adopt(std::make_unique<PairVar>(*this, id, lo, hi));
    return adopt(std::make_unique<DomainVar>(*this, id, lo, hi));
}

Var& Engine::shift_view(Var& x, std::int64_t k)
{
    return affine_view(x, 1, k);
}

Var& Engine::affine_view(Var& x, std::int64_t a, std::int64_t b)
{
    assert(a != 0);
    const VarId id = static_cast<VarId>(vars_.size());
    switch (mode_) {
    case EngineMode::variable_view:
        return adopt(std::unique_ptr<Var>(new VariableView(*this, id, x, AffineFn{a, b})));
    case EngineMode::domain_view: {
        Var& v = adopt(std::unique_ptr<Var>(new DomainView(*this, id, x, AffineFn{a, b})));
        x.add_view(v);
        return v;
    }
    case EngineMode::no_view:
        break;
    }
    std::abort(); // views are not available in no-view mode
}

Var& Engine::literal_view(Var& x, std::int64_t i)
{
    assert(mode_ == EngineMode::domain_view);
    if (mode_ != EngineMode::domain_view)
        std::abort();
    const VarId id = static_cast<VarId>(vars_.size());
    Var& v = adopt(std::unique_ptr<Var>(new LiteralView(*this, id, x, i)));
    x.add_view(v);
    return v;
}

Var& Engine::modulo_view(Var& x, std::int64_t k)
{
    assert(mode_ == EngineMode::domain_view && k >= 1);
    if (mode_ != EngineMode::domain_view || k < 1)
        std::abort();
    const VarId id = static_cast<VarId>(vars_.size());
    Var& v = adopt(std::unique_ptr<Var>(new ModuloView(*this, id, x, k)));
    x.add_view(v);
    return v;
}

Var& Engine::noninjective_view(Var& x, NonInjFn fn)
{
    assert(mode_ == EngineMode::domain_view);
    if (mode_ != EngineMode::domain_view)
        std::abort();
    const VarId id = static_cast<VarId>(vars_.size());
    Var& v = adopt(std::unique_ptr<Var>(new NonInjectiveView(*this, id, x, std::move(fn))));
    x.add_view(v);
    return v;
}

ConstraintId Engine::post(std::unique_ptr<Constraint> c)
{
    const ConstraintId id = static_cast<ConstraintId>(constraints_.size());
    c->set_id(id);
    constraints_.push_back(std::move(c));
    if (root_failed_)
        return id;
    if (!constraints_.back()->post(*this)) {
        root_failed_ = true;
        stats_.failures += 1;
        flush_queue();
    }
    return id;
}

void Engine::schedule_var_event(ConstraintId c, Var& x)
{
    const std::uint64_t key = flag_key(c, x.id());
    if (!pending_var_events_.insert(key).second)
        return;
    queue_.push_back(Event{EventKind::variable, c, &x, 0});
    mem_.add(sizeof(Event) + sizeof(std::uint64_t));
}

void Engine::schedule_value_event(ConstraintId c, Var& x, std::int64_t v)
{
    queue_.push_back(Event{EventKind::value, c, &x, v});
    mem_.add(sizeof(Event));
}

void Engine::flush_queue()
{
    for (const Event& ev : queue_)
        mem_.sub(sizeof(Event) + (ev.kind == EventKind::variable ? sizeof(std::uint64_t) : 0));
    queue_.clear();
    pending_var_events_.clear();
}

bool Engine::propagate_fixpoint()
{
    while (!queue_.empty()) {
        const Event ev = queue_.front();
        queue_.pop_front();
        stats_.propagations += 1;
        if (ev.kind == EventKind::variable) {
            pending_var_events_.erase(flag_key(ev.constraint, ev.source->id()));
            mem_.sub(sizeof(Event) + sizeof(std::uint64_t));
        } else {
            mem_.sub(sizeof(Event));
        }
        if (pop_hook)
            pop_hook(ev);
        Constraint& c = constraint(ev.constraint);
        const bool ok = ev.kind == EventKind::variable
            ? c.propagate_var(*this, *ev.source)
            : c.propagate_value(*this, *ev.source, ev.value);
        if (!ok) {
            stats_.failures += 1;
            flush_queue();
            return false;
        }
    }
    return true;
}

bool Engine::all_entailed() const
{
    for (const auto& c : constraints_)
        if (!c->entailed())
            return false;
    return true;
}

}
