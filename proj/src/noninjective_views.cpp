#include "fdview/noninjective_views.hpp"

#include <algorithm>
#include <cassert>

#include "fdview/engine.hpp"

namespace fdview {

namespace {

    void watch_into(Engine& engine, std::vector<ConstraintId>& list, ConstraintId c)
    {
        if (std::find(list.begin(), list.end(), c) != list.end())
            return;
        list.push_back(c);
        engine.mem().add(sizeof(ConstraintId));
    }

    void add_view_into(Engine& engine, std::vector<Var*>& views, Var& y)
    {
        if (std::find(views.begin(), views.end(), &y) != views.end())
            return;
        views.push_back(&y);
        engine.mem().add(sizeof(Var*));
    }

}

// --- NonInjectiveView -------------------------------------------------

NonInjectiveView::NonInjectiveView(Engine& engine, VarId id, Var& x, NonInjFn fn)
    : Var(engine, id), x_(x), fn_(std::move(fn))
{
    engine.mem().add(sizeof(NonInjectiveView));
}

bool NonInjectiveView::member(std::int64_t v) const
{
    for (std::int64_t w : fn_.inverse_set(v))
        if (x_.member(w))
            return true;
    return false;
}

bool NonInjectiveView::remove(std::int64_t v)
{
    for (std::int64_t w : fn_.inverse_set(v))
        if (!x_.remove(w))
            return false;
    return true;
}

bool NonInjectiveView::bind(std::int64_t v)
{
    if (!member(v))
        return false;
    for (std::int64_t u : image())
        if (u != v && !remove(u))
            return false;
    return true;
}

std::vector<std::int64_t> NonInjectiveView::image() const
{
    std::vector<std::int64_t> out;
    for (std::int64_t w : x_.domain_values()) {
        const std::int64_t v = fn_.forward(w);
        if (std::find(out.begin(), out.end(), v) == out.end())
            out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool NonInjectiveView::update_min(std::int64_t v)
{
    const auto img = image();
    if (img.empty() || img.back() < v)
        return false;
    for (std::int64_t u : img) {
        if (u >= v)
            break;
        if (!remove(u))
            return false;
    }
    return true;
}

bool NonInjectiveView::update_max(std::int64_t v)
{
    const auto img = image();
    if (img.empty() || img.front() > v)
        return false;
    for (auto it = img.rbegin(); it != img.rend() && *it > v; ++it)
        if (!remove(*it))
            return false;
    return true;
}

std::int64_t NonInjectiveView::min() const { return image().front(); }

std::int64_t NonInjectiveView::max() const { return image().back(); }

std::int64_t NonInjectiveView::size() const
{
    return static_cast<std::int64_t>(image().size());
}

bool NonInjectiveView::is_bound_to(std::int64_t v) const
{
    const auto img = image();
    return img.size() == 1 && img.front() == v;
}

void NonInjectiveView::watch(ConstraintId c) { watch_into(engine_, watchers_, c); }

void NonInjectiveView::watch_value(ConstraintId c)
{
    watch_into(engine_, value_watchers_, c);
}

void NonInjectiveView::wake()
{
    for (ConstraintId c : watchers_)
        engine_.schedule_var_event(c, *this);
    for (Var* y : views_)
        y->wake();
}

void NonInjectiveView::enqueue_loss(std::int64_t view_value)
{
    for (ConstraintId c : value_watchers_)
        engine_.schedule_value_event(c, *this, view_value);
    for (Var* y : views_)
        y->wake_value(view_value);
}

void NonInjectiveView::wake_value(std::int64_t v)
{
    // v was just removed from the underlying domain; the view value dies
    // only when no other support remains.
    const std::int64_t w = fn_.forward(v);
    if (!member(w))
        enqueue_loss(w);
}

void NonInjectiveView::add_view(Var& y) { add_view_into(engine_, views_, y); }

// --- LiteralView ------------------------------------------------------

LiteralView::LiteralView(Engine& engine, VarId id, Var& x, std::int64_t lit)
    : Var(engine, id), x_(x), lit_(lit)
{
    engine.mem().add(sizeof(LiteralView));
}

bool LiteralView::member(std::int64_t v) const
{
    if (v == 0)
        return !x_.is_bound_to(lit_);
    if (v == 1)
        return x_.member(lit_);
    return false;
}

bool LiteralView::remove(std::int64_t v)
{
    if (v == 0)
        return x_.bind(lit_);
    if (v == 1)
        return x_.remove(lit_);
    return true;
}

bool LiteralView::bind(std::int64_t v)
{
    if (v == 0)
        return x_.remove(lit_);
    if (v == 1)
        return x_.bind(lit_);
    return false;
}

bool LiteralView::update_min(std::int64_t v)
{
    if (v <= min())
        return true;
    if (v > max())
        return false;
    return remove(0);
}

bool LiteralView::update_max(std::int64_t v)
{
    if (v >= max())
        return true;
    if (v < min())
        return false;
    return remove(1);
}

void LiteralView::watch(ConstraintId c) { watch_into(engine_, watchers_, c); }

void LiteralView::watch_value(ConstraintId c) { watch_into(engine_, value_watchers_, c); }

void LiteralView::wake()
{
    for (ConstraintId c : watchers_)
        engine_.schedule_var_event(c, *this);
    for (Var* y : views_)
        y->wake();
}

void LiteralView::enqueue_loss(std::int64_t view_value)
{
    for (ConstraintId c : value_watchers_)
        engine_.schedule_value_event(c, *this, view_value);
    for (Var* y : views_)
        y->wake_value(view_value);
}

void LiteralView::wake_value(std::int64_t v)
{
    if (v == lit_) {
        // x can no longer equal the literal: view value 1 died.
        enqueue_loss(1);
    } else if (!member(0)) {
        // The removal bound x to the literal: view value 0 died.
        enqueue_loss(0);
    }
}

void LiteralView::add_view(Var& y) { add_view_into(engine_, views_, y); }

// --- ModuloView -------------------------------------------------------

ModuloView::ModuloView(Engine& engine, VarId id, Var& x, std::int64_t k)
    : Var(engine, id), x_(x), k_(k)
{
    assert(k >= 1);
    supports_.reserve(static_cast<std::size_t>(k));
    for (std::int64_t r = 0; r < k; ++r)
        supports_.emplace_back(0);
    for (std::int64_t w : x.domain_values()) {
        RevInt& s = supports_[static_cast<std::size_t>(floor_mod(w, k_))];
        s.set(engine.trail(), s.get() + 1);
    }
    engine.mem().add(sizeof(ModuloView) + static_cast<std::size_t>(k) * sizeof(RevInt));
}

bool ModuloView::member(std::int64_t v) const
{
    return v >= 0 && v < k_ && support_count(v) > 0;
}

bool ModuloView::remove(std::int64_t v)
{
    if (!member(v))
        return true;
    // Materialize the support set before removing; the counter updates ride
    // on the notifications coming back from the underlying variable.
    std::vector<std::int64_t> supports;
    for (std::int64_t w : x_.domain_values())
        if (floor_mod(w, k_) == v)
            supports.push_back(w);
    for (std::int64_t w : supports)
        if (!x_.remove(w))
            return false;
    return true;
}

bool ModuloView::bind(std::int64_t v)
{
    if (!member(v))
        return false;
    for (std::int64_t r = 0; r < k_; ++r)
        if (r != v && member(r) && !remove(r))
            return false;
    return true;
}

bool ModuloView::update_min(std::int64_t v)
{
    if (v > max())
        return false;
    for (std::int64_t r = 0; r < v && r < k_; ++r)
        if (member(r) && !remove(r))
            return false;
    return true;
}

bool ModuloView::update_max(std::int64_t v)
{
    if (v < min())
        return false;
    for (std::int64_t r = k_ - 1; r > v; --r)
        if (member(r) && !remove(r))
            return false;
    return true;
}

std::int64_t ModuloView::min() const
{
    for (std::int64_t r = 0; r < k_; ++r)
        if (member(r))
            return r;
    return 0;
}

std::int64_t ModuloView::max() const
{
    for (std::int64_t r = k_ - 1; r >= 0; --r)
        if (member(r))
            return r;
    return 0;
}

std::int64_t ModuloView::size() const
{
    std::int64_t n = 0;
    for (std::int64_t r = 0; r < k_; ++r)
        if (member(r))
            ++n;
    return n;
}

void ModuloView::watch(ConstraintId c) { watch_into(engine_, watchers_, c); }

void ModuloView::watch_value(ConstraintId c) { watch_into(engine_, value_watchers_, c); }

void ModuloView::wake()
{
    for (ConstraintId c : watchers_)
        engine_.schedule_var_event(c, *this);
    for (Var* y : views_)
        y->wake();
}

void ModuloView::enqueue_loss(std::int64_t view_value)
{
    for (ConstraintId c : value_watchers_)
        engine_.schedule_value_event(c, *this, view_value);
    for (Var* y : views_)
        y->wake_value(view_value);
}

void ModuloView::wake_value(std::int64_t v)
{
    const std::int64_t r = floor_mod(v, k_);
    RevInt& s = supports_[static_cast<std::size_t>(r)];
    s.set(engine_.trail(), s.get() - 1);
    if (!member(r))
        enqueue_loss(r);
}

void ModuloView::add_view(Var& y) { add_view_into(engine_, views_, y); }

}
