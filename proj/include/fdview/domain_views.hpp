#ifndef FDVIEW_DOMAIN_VIEWS_HPP
#define FDVIEW_DOMAIN_VIEWS_HPP

#include <vector>

#include "fdview/var.hpp"
#include "fdview/view_fn.hpp"

namespace fdview {

/// Domain view: delegates only domain operations to the underlying handle
/// and maintains its own constraints to watch. Notified by the underlying
/// variable (or inner view) of every lost value; translates the value
/// through its own function exactly once, enqueues the translated value
/// for its value watchers, and forwards the translated value to dependent
/// views.
class DomainView final : public Var {
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

    void watch(ConstraintId c) override;
    void watch_value(ConstraintId c) override;
    void wake() override;
    void wake_value(std::int64_t v) override;
    void add_view(Var& y) override;

    std::int64_t map(std::int64_t v) const override { return fn_.forward(x_.map(v)); }
    Var& root() override { return x_.root(); }

    const AffineFn& fn() const { return fn_; }
    const std::vector<ConstraintId>& watchers() const { return watchers_; }
    const std::vector<ConstraintId>& value_watchers() const { return value_watchers_; }
    const std::vector<Var*>& views() const { return views_; }

private:
    friend class Engine; // views are built through the engine factories
    DomainView(Engine& engine, VarId id, Var& x, AffineFn fn);

    Var& x_;
    AffineFn fn_;
    std::vector<ConstraintId> watchers_;
    std::vector<ConstraintId> value_watchers_;
    std::vector<Var*> views_;
};

}

#endif
