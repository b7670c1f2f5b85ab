#include "fdview/variable_views.hpp"

#include "fdview/engine.hpp"
#include "fdview/view_ops.hpp"

namespace fdview {

VariableView::VariableView(Engine& engine, VarId id, Var& x, AffineFn fn)
    : Var(engine, id), x_(x), fn_(fn)
{
    engine.mem().add(sizeof(VariableView));
}

bool VariableView::member(std::int64_t v) const { return view_ops::member(x_, fn_, v); }

bool VariableView::remove(std::int64_t v) { return view_ops::remove(x_, fn_, v); }

bool VariableView::bind(std::int64_t v) { return view_ops::bind(x_, fn_, v); }

bool VariableView::update_min(std::int64_t v) { return view_ops::update_min(x_, fn_, v); }

bool VariableView::update_max(std::int64_t v) { return view_ops::update_max(x_, fn_, v); }

std::int64_t VariableView::min() const { return view_ops::min_of(x_, fn_); }

std::int64_t VariableView::max() const { return view_ops::max_of(x_, fn_); }

bool VariableView::is_bound_to(std::int64_t v) const
{
    return view_ops::is_bound_to(x_, fn_, v);
}

void VariableView::watch_value(ConstraintId c)
{
    if (engine_.stored_fn_watches())
        x_.watch_value_fn(c, *this, [f = fn_](std::int64_t v) { return f.forward(v); });
    else
        x_.watch_value_pair(c, *this);
}

void VariableView::watch_value_fn(ConstraintId c, Var& watcher, ValueFn phi)
{
    // Function composition: the outer view's translation wraps ours.
    x_.watch_value_fn(c, watcher,
        [f = fn_, phi = std::move(phi)](std::int64_t v) { return phi(f.forward(v)); });
}

}
