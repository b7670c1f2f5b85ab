#ifndef FDVIEW_NONINJECTIVE_VIEWS_HPP
#define FDVIEW_NONINJECTIVE_VIEWS_HPP

#include <vector>

#include "fdview/trail.hpp"
#include "fdview/var.hpp"
#include "fdview/view_fn.hpp"

namespace fdview {

/// Generic domain view over a non-injective function. A view value is a
/// member while any of its supports remains in the underlying domain;
/// removing a view value removes every support. Membership is computed by
/// scanning the inverse set, so the view carries no state beyond its watch
/// lists.
class NonInjectiveView : public Var {
public:

    bool member(std::int64_t v) const override;
    bool remove(std::int64_t v) override;
    bool bind(std::int64_t v) override;
    bool update_min(std::int64_t v) override;
    bool update_max(std::int64_t v) override;
    std::int64_t min() const override;
    std::int64_t max() const override;
    std::int64_t size() const override;
    bool is_bound_to(std::int64_t v) const override;

    void watch(ConstraintId c) override;
    void watch_value(ConstraintId c) override;
    void wake() override;
    void wake_value(std::int64_t v) override;
    void add_view(Var& y) override;

    std::int64_t map(std::int64_t) const override { std::abort(); }
    Var& root() override { return x_.root(); }

    /// Distinct view values currently supported, in increasing order.
    std::vector<std::int64_t> image() const;

protected:
    friend class Engine; // views are built through the engine factories
    NonInjectiveView(Engine& engine, VarId id, Var& x, NonInjFn fn);

    void enqueue_loss(std::int64_t view_value);

    Var& x_;
    std::vector<ConstraintId> watchers_;
    std::vector<ConstraintId> value_watchers_;
    std::vector<Var*> views_;

private:
    NonInjFn fn_;
};

/// Reified literal b <=> (x = i) as a non-injective domain view with
/// values in {0, 1}. Value 1 is supported while i is in D(x); value 0 is
/// supported while x is not bound to i. Removing 0 binds x to i, removing
/// 1 forbids i.
class LiteralView final : public Var {
public:

    bool member(std::int64_t v) const override;
    bool remove(std::int64_t v) override;
    bool bind(std::int64_t v) override;
    bool update_min(std::int64_t v) override;
    bool update_max(std::int64_t v) override;
    std::int64_t min() const override { return member(0) ? 0 : 1; }
    std::int64_t max() const override { return member(1) ? 1 : 0; }
    std::int64_t size() const override
    {
        return (member(0) ? 1 : 0) + (member(1) ? 1 : 0);
    }
    bool is_bound_to(std::int64_t v) const override { return size() == 1 && member(v); }

    void watch(ConstraintId c) override;
    void watch_value(ConstraintId c) override;
    void wake() override;
    void wake_value(std::int64_t v) override;
    void add_view(Var& y) override;

    std::int64_t map(std::int64_t) const override { std::abort(); }
    Var& root() override { return x_.root(); }

    std::int64_t literal() const { return lit_; }

private:
    friend class Engine; // views are built through the engine factories
    LiteralView(Engine& engine, VarId id, Var& x, std::int64_t lit);

    void enqueue_loss(std::int64_t view_value);

    Var& x_;
    std::int64_t lit_;
    std::vector<ConstraintId> watchers_;
    std::vector<ConstraintId> value_watchers_;
    std::vector<Var*> views_;
};

/// y = x mod k (floor residues in [0, k)). Keeps one reversible support
/// counter per residue instead of materialized support sets; the set of
/// supports of a residue is recovered by scanning D(x) when a removal
/// needs it. A residue's loss event fires exactly when its last support
/// dies.
class ModuloView final : public Var {
public:

    bool member(std::int64_t v) const override;
    bool remove(std::int64_t v) override;
    bool bind(std::int64_t v) override;
    bool update_min(std::int64_t v) override;
    bool update_max(std::int64_t v) override;
    std::int64_t min() const override;
    std::int64_t max() const override;
    std::int64_t size() const override;
    bool is_bound_to(std::int64_t v) const override { return size() == 1 && member(v); }

    void watch(ConstraintId c) override;
    void watch_value(ConstraintId c) override;
    void wake() override;
    void wake_value(std::int64_t v) override;
    void add_view(Var& y) override;

    std::int64_t map(std::int64_t) const override { std::abort(); }
    Var& root() override { return x_.root(); }

    std::int64_t modulus() const { return k_; }
    std::int64_t support_count(std::int64_t residue) const
    {
        return supports_[static_cast<std::size_t>(residue)].get();
    }

private:
    friend class Engine; // views are built through the engine factories
    ModuloView(Engine& engine, VarId id, Var& x, std::int64_t k);

    void enqueue_loss(std::int64_t view_value);

    Var& x_;
    std::int64_t k_;
    std::vector<RevInt> supports_;
    std::vector<ConstraintId> watchers_;
    std::vector<ConstraintId> value_watchers_;
    std::vector<Var*> views_;
};

}

#endif
