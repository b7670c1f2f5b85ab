#ifndef FDVIEW_VAR_HPP
#define FDVIEW_VAR_HPP

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <vector>

#include "fdview/domain.hpp"
#include "fdview/types.hpp"

namespace fdview {

class Engine;

using ValueFn = std::function<std::int64_t(std::int64_t)>;

/// Uniform handle to "variable or view": the contract every constraint and
/// every view is written against. Exactly one underlying plain variable is
/// reachable from any instance by following view links.
///
/// Domain mutators return false when they would empty the domain; the
/// domain is left unchanged in that case and no constraint is woken by the
/// emptying operation.
class Var {
public:
    Var(Engine& engine, VarId id) : engine_(engine), id_(id) {}
    virtual ~Var() = default;

    Var(const Var&) = delete;
    Var& operator=(const Var&) = delete;

    VarId id() const { return id_; }
    Engine& engine() const { return engine_; }

    virtual bool member(std::int64_t v) const = 0;
    virtual bool remove(std::int64_t v) = 0;
    virtual bool bind(std::int64_t v) = 0;
    virtual bool update_min(std::int64_t v) = 0;
    virtual bool update_max(std::int64_t v) = 0;
    virtual std::int64_t min() const = 0;
    virtual std::int64_t max() const = 0;
    virtual std::int64_t size() const = 0;
    virtual bool is_bound_to(std::int64_t v) const = 0;

    bool is_bound() const { return size() == 1; }
    std::int64_t value() const { return min(); }

    /// Registers c for variable-based (resp. value-based) propagation.
    /// Construction phase only; watch lists are not trailed.
    virtual void watch(ConstraintId c) = 0;
    virtual void watch_value(ConstraintId c) = 0;

    /// Enqueues the pending events after this variable or view shrank.
    virtual void wake() = 0;
    virtual void wake_value(std::int64_t v) = 0;

    /// Registers a dependent domain view; no-op outside domain-view mode.
    virtual void add_view(Var&) {}

    /// Variable-view support: watch on behalf of a view.
    virtual void watch_pair(ConstraintId, Var&) { std::abort(); }
    virtual void watch_value_pair(ConstraintId, Var&) { std::abort(); }
    /// Stored-function watch path (kept for event-equivalence tests).
    virtual void watch_value_fn(ConstraintId, Var&, ValueFn) { std::abort(); }

    /// Maps a value lost by the underlying variable into this handle's
    /// coordinates (identity on plain variables, recursive on views).
    virtual std::int64_t map(std::int64_t v) const { return v; }

    /// The plain variable at the bottom of the view chain.
    virtual Var& root() { return *this; }

    /// Current members in increasing order (scratch helper).
    std::vector<std::int64_t> domain_values() const;

protected:
    Engine& engine_;
    VarId id_;
};

/// The plain variable of the no-view and domain-view regimes: watch lists
/// hold constraint ids only. In domain-view mode it additionally keeps the
/// views registered on it and notifies them of every lost value.
class DomainVar final : public Var {
public:
    DomainVar(Engine& engine, VarId id, std::int64_t lo, std::int64_t hi);

    bool member(std::int64_t v) const override { return dom_.member(v); }
    bool remove(std::int64_t v) override;
    bool bind(std::int64_t v) override;
    bool update_min(std::int64_t v) override;
    bool update_max(std::int64_t v) override;
    std::int64_t min() const override { return dom_.min(); }
    std::int64_t max() const override { return dom_.max(); }
    std::int64_t size() const override { return dom_.size(); }
    bool is_bound_to(std::int64_t v) const override { return dom_.is_bound_to(v); }

    void watch(ConstraintId c) override;
    void watch_value(ConstraintId c) override;
    void wake() override;
    void wake_value(std::int64_t v) override;
    void add_view(Var& y) override;

    const std::vector<ConstraintId>& watchers() const { return watchers_; }
    const std::vector<ConstraintId>& value_watchers() const { return value_watchers_; }
    const std::vector<Var*>& views() const { return views_; }
    const IntDomain& domain() const { return dom_; }

private:
    void emit_losses(const std::vector<std::int64_t>& lost);

    IntDomain dom_;
    std::vector<ConstraintId> watchers_;
    std::vector<ConstraintId> value_watchers_;
    std::vector<Var*> views_;
    std::vector<std::int64_t> scratch_;
};

/// The plain variable of the variable-view regime: each watch entry pairs
/// the constraint with the variable or view on whose behalf it watches,
/// and value events are translated through the watcher's map().
class PairVar final : public Var {
public:
    PairVar(Engine& engine, VarId id, std::int64_t lo, std::int64_t hi);

    bool member(std::int64_t v) const override { return dom_.member(v); }
    bool remove(std::int64_t v) override;
    bool bind(std::int64_t v) override;
    bool update_min(std::int64_t v) override;
    bool update_max(std::int64_t v) override;
    std::int64_t min() const override { return dom_.min(); }
    std::int64_t max() const override { return dom_.max(); }
    std::int64_t size() const override { return dom_.size(); }
    bool is_bound_to(std::int64_t v) const override { return dom_.is_bound_to(v); }

    void watch(ConstraintId c) override { watch_pair(c, *this); }
    void watch_value(ConstraintId c) override;
    void watch_pair(ConstraintId c, Var& watcher) override;
    void watch_value_pair(ConstraintId c, Var& watcher) override;
    void watch_value_fn(ConstraintId c, Var& watcher, ValueFn psi) override;
    void wake() override;
    void wake_value(std::int64_t v) override;

    struct PairWatch {
        ConstraintId constraint;
        Var* watcher;
    };
    struct FnWatch {
        ConstraintId constraint;
        Var* watcher;
        ValueFn psi;
    };

    const std::vector<PairWatch>& watchers() const { return watchers_; }
    const std::vector<PairWatch>& value_watchers() const { return value_watchers_; }
    const IntDomain& domain() const { return dom_; }

private:
    void emit_losses(const std::vector<std::int64_t>& lost);

    IntDomain dom_;
    std::vector<PairWatch> watchers_;
    std::vector<PairWatch> value_watchers_;
    std::vector<FnWatch> fn_value_watchers_;
    std::vector<std::int64_t> scratch_;
};

}

#endif
