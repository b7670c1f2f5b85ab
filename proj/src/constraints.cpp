#include "fdview/constraints.hpp"

#include "fdview/engine.hpp"
#include "fdview/var.hpp"

namespace fdview {

// --- AllDifferent -----------------------------------------------------

AllDifferent::AllDifferent(std::vector<Var*> xs) : Constraint(std::move(xs)) {}

bool AllDifferent::post(Engine&)
{
    for (Var* x : scope_)
        x->watch_value(id());
    for (Var* x : scope_)
        if (x->is_bound() && !prune_others(*x))
            return false;
    return true;
}

bool AllDifferent::prune_others(const Var& bound)
{
    const std::int64_t v = bound.value();
    for (Var* y : scope_)
        if (y != &bound && !y->remove(v))
            return false;
    return true;
}

bool AllDifferent::propagate_value(Engine&, Var& source, std::int64_t)
{
    if (!source.is_bound())
        return true;
    return prune_others(source);
}

bool AllDifferent::entailed() const
{
    for (std::size_t i = 0; i < scope_.size(); ++i)
        for (std::size_t j = i + 1; j < scope_.size(); ++j)
            if (scope_[i]->value() == scope_[j]->value())
                return false;
    return true;
}

// --- LinearEq ---------------------------------------------------------

LinearEq::LinearEq(std::vector<Var*> xs, std::int64_t rhs)
    : Constraint(std::move(xs)), rhs_(rhs)
{
}

bool LinearEq::post(Engine&)
{
    for (Var* x : scope_)
        x->watch(id());
    return sweep();
}

bool LinearEq::propagate_var(Engine&, Var&) { return sweep(); }

bool LinearEq::sweep()
{
    std::int64_t sum_min = 0;
    std::int64_t sum_max = 0;
    for (const Var* x : scope_) {
        sum_min += x->min();
        sum_max += x->max();
    }
    if (sum_min > rhs_ || sum_max < rhs_)
        return false;
    for (Var* x : scope_) {
        // Bounds from the other terms; staleness after an update is fine,
        // the constraint rewakes itself through its own watches.
        if (!x->update_min(rhs_ - (sum_max - x->max())))
            return false;
        if (!x->update_max(rhs_ - (sum_min - x->min())))
            return false;
    }
    return true;
}

bool LinearEq::entailed() const
{
    std::int64_t sum = 0;
    for (const Var* x : scope_)
        sum += x->value();
    return sum == rhs_;
}

// --- LinearLeq --------------------------------------------------------

LinearLeq::LinearLeq(std::vector<Var*> xs, std::int64_t rhs)
    : Constraint(std::move(xs)), rhs_(rhs)
{
}

bool LinearLeq::post(Engine&)
{
    for (Var* x : scope_)
        x->watch(id());
    return sweep();
}

bool LinearLeq::propagate_var(Engine&, Var&) { return sweep(); }

bool LinearLeq::sweep()
{
    std::int64_t sum_min = 0;
    for (const Var* x : scope_)
        sum_min += x->min();
    if (sum_min > rhs_)
        return false;
    for (Var* x : scope_)
        if (!x->update_max(rhs_ - (sum_min - x->min())))
            return false;
    return true;
}

bool LinearLeq::entailed() const
{
    std::int64_t sum = 0;
    for (const Var* x : scope_)
        sum += x->value();
    return sum <= rhs_;
}

// --- BoolClause -------------------------------------------------------

BoolClause::BoolClause(std::vector<Var*> pos, std::vector<Var*> neg)
    : Constraint({}), pos_count_(pos.size())
{
    scope_ = std::move(pos);
    scope_.insert(scope_.end(), neg.begin(), neg.end());
}

bool BoolClause::post(Engine&)
{
    for (Var* x : scope_)
        x->watch_value(id());
    return sweep();
}

bool BoolClause::propagate_value(Engine&, Var&, std::int64_t) { return sweep(); }

bool BoolClause::sweep()
{
    // A literal: scope_[i] at value 1 for i < pos_count_, at 0 afterwards.
    Var* unit = nullptr;
    std::int64_t unit_value = 0;
    for (std::size_t i = 0; i < scope_.size(); ++i) {
        Var* x = scope_[i];
        const std::int64_t sat = i < pos_count_ ? 1 : 0;
        if (x->is_bound_to(sat))
            return true; // entailed
        if (x->member(sat)) {
            if (unit) {
                return true; // two candidates: nothing to propagate yet
            }
            unit = x;
            unit_value = sat;
        }
    }
    if (!unit)
        return false; // every literal falsified
    return unit->bind(unit_value);
}

bool BoolClause::entailed() const
{
    for (std::size_t i = 0; i < scope_.size(); ++i)
        if (scope_[i]->value() == (i < pos_count_ ? 1 : 0))
            return true;
    return false;
}

// --- ReifyEq ----------------------------------------------------------

ReifyEq::ReifyEq(Var& b, Var& x, std::int64_t lit)
    : Constraint({&b, &x}), b_(b), x_(x), lit_(lit)
{
}

bool ReifyEq::post(Engine&)
{
    b_.watch_value(id());
    x_.watch_value(id());
    if (!x_.member(lit_) && !b_.remove(1))
        return false;
    if (x_.is_bound_to(lit_) && !b_.remove(0))
        return false;
    if (b_.is_bound_to(1))
        return x_.bind(lit_);
    if (b_.is_bound_to(0))
        return x_.remove(lit_);
    return true;
}

bool ReifyEq::propagate_value(Engine&, Var& source, std::int64_t v)
{
    if (&source == &b_) {
        if (v == 0)
            return x_.bind(lit_); // b lost 0, so b = 1
        if (v == 1)
            return x_.remove(lit_); // b lost 1, so b = 0
        return true;
    }
    // x lost v; mirror the literal-view loss rules.
    if (v == lit_)
        return b_.remove(1);
    if (x_.is_bound_to(lit_))
        return b_.remove(0);
    return true;
}

bool ReifyEq::entailed() const
{
    return (b_.value() == 1) == (x_.value() == lit_);
}

// --- AffineChannel ----------------------------------------------------

AffineChannel::AffineChannel(Var& y, Var& x, AffineFn fn)
    : Constraint({&y, &x}), y_(y), x_(x), fn_(fn)
{
}

bool AffineChannel::post(Engine&)
{
    y_.watch_value(id());
    x_.watch_value(id());
    for (std::int64_t w : y_.domain_values()) {
        const auto v = fn_.inverse(w);
        if ((!v || !x_.member(*v)) && !y_.remove(w))
            return false;
    }
    for (std::int64_t v : x_.domain_values())
        if (!y_.member(fn_.forward(v)) && !x_.remove(v))
            return false;
    return true;
}

bool AffineChannel::propagate_value(Engine&, Var& source, std::int64_t v)
{
    if (&source == &x_)
        return y_.remove(fn_.forward(v));
    const auto w = fn_.inverse(v);
    return w ? x_.remove(*w) : true;
}

bool AffineChannel::entailed() const
{
    return y_.value() == fn_.forward(x_.value());
}

}
