#include "fdview/domain_views.hpp"

#include <algorithm>

#include "fdview/engine.hpp"
#include "fdview/view_ops.hpp"

namespace fdview {

DomainView::DomainView(Engine& engine, VarId id, Var& x, AffineFn fn)
    : Var(engine, id), x_(x), fn_(fn)
{
    engine.mem().add(sizeof(DomainView));
}

bool DomainView::member(std::int64_t v) const { return view_ops::member(x_, fn_, v); }

bool DomainView::remove(std::int64_t v) { return view_ops::remove(x_, fn_, v); }

bool DomainView::bind(std::int64_t v) { return view_ops::bind(x_, fn_, v); }

bool DomainView::update_min(std::int64_t v) { return view_ops::update_min(x_, fn_, v); }

bool DomainView::update_max(std::int64_t v) { return view_ops::update_max(x_, fn_, v); }

std::int64_t DomainView::min() const { return view_ops::min_of(x_, fn_); }

std::int64_t DomainView::max() const { return view_ops::max_of(x_, fn_); }

bool DomainView::is_bound_to(std::int64_t v) const
{
    return view_ops::is_bound_to(x_, fn_, v);
}

void DomainView::watch(ConstraintId c)
{
    if (std::find(watchers_.begin(), watchers_.end(), c) != watchers_.end())
        return;
    watchers_.push_back(c);
    engine_.mem().add(sizeof(ConstraintId));
}

void DomainView::watch_value(ConstraintId c)
{
    if (std::find(value_watchers_.begin(), value_watchers_.end(), c) != value_watchers_.end())
        return;
    value_watchers_.push_back(c);
    engine_.mem().add(sizeof(ConstraintId));
}

void DomainView::wake()
{
    for (ConstraintId c : watchers_)
        engine_.schedule_var_event(c, *this);
    for (Var* y : views_)
        y->wake();
}

void DomainView::wake_value(std::int64_t v)
{
    const std::int64_t w = fn_.forward(v);
    for (ConstraintId c : value_watchers_)
        engine_.schedule_value_event(c, *this, w);
    for (Var* y : views_)
        y->wake_value(w);
}

void DomainView::add_view(Var& y)
{
    if (std::find(views_.begin(), views_.end(), &y) != views_.end())
        return;
    views_.push_back(&y);
    engine_.mem().add(sizeof(Var*));
}

}
