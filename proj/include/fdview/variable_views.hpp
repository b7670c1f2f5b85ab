#ifndef FDVIEW_VARIABLE_VIEWS_HPP
#define FDVIEW_VARIABLE_VIEWS_HPP

#include "fdview/var.hpp"
#include "fdview/view_fn.hpp"

namespace fdview {

/// Variable view: a stateless adapter that delegates all domain and
/// constraint operations to the underlying handle. Stores neither a domain
/// nor watch lists; constraints watched through it land in the underlying
/// plain variable's paired lists, tagged with this view as the watcher.
class VariableView final : public Var {
public:

    bool member(std::int64_t v) const override;
    bool remove(std::int64_t v) override;
    bool bind(std::int64_t v) override;
    bool update_min(std::int64_t v) override;
    bool update_max(std::int64_t v) override;
    std::int64_t min() const override;
    std::int64_t max() const override;
    std::int64_t size() const override { return x_.size(); }
    bool is_bound_to(std::int64_t v) const override;

    void watch(ConstraintId c) override { x_.watch_pair(c, *this); }
    void watch_value(ConstraintId c) override;
    void watch_pair(ConstraintId c, Var& watcher) override { x_.watch_pair(c, watcher); }
    void watch_value_pair(ConstraintId c, Var& watcher) override
    {
        x_.watch_value_pair(c, watcher);
    }
    void watch_value_fn(ConstraintId c, Var& watcher, ValueFn phi) override;

    // Variable views never appear in a notification chain; the underlying
    // variable enqueues on their behalf.
    void wake() override { std::abort(); }
    void wake_value(std::int64_t) override { std::abort(); }

    std::int64_t map(std::int64_t v) const override { return fn_.forward(x_.map(v)); }
    Var& root() override { return x_.root(); }

    const AffineFn& fn() const { return fn_; }

private:
    friend class Engine; // views are built through the engine factories
    VariableView(Engine& engine, VarId id, Var& x, AffineFn fn);

    Var& x_;
    AffineFn fn_;
};

}

#endif
