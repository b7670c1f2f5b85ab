#ifndef FDVIEW_CONSTRAINTS_HPP
#define FDVIEW_CONSTRAINTS_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "fdview/types.hpp"
#include "fdview/view_fn.hpp"

namespace fdview {

class Engine;
class Var;

/// Propagator written once against the Var contract; the same code drives
/// all three engine modes. Propagators are idempotent at fixpoint:
/// re-running with no domain change makes no change.
class Constraint {
public:
    explicit Constraint(std::vector<Var*> scope) : scope_(std::move(scope)) {}
    virtual ~Constraint() = default;

    ConstraintId id() const { return id_; }
    void set_id(ConstraintId id) { id_ = id; }
    const std::vector<Var*>& scope() const { return scope_; }

    /// Registers watches and performs initial pruning. False on wipeout.
    virtual bool post(Engine& engine) = 0;
    virtual bool propagate_var(Engine&, Var&) { return true; }
    virtual bool propagate_value(Engine&, Var&, std::int64_t) { return true; }

    /// Semantic check under the current assignment; requires every scope
    /// member to be bound.
    virtual bool entailed() const = 0;

protected:
    std::vector<Var*> scope_;

private:
    ConstraintId id_ = -1;
};

/// Value-based forward checking: once a scope member is bound, its value
/// is removed from every other member.
class AllDifferent final : public Constraint {
public:
    explicit AllDifferent(std::vector<Var*> xs);
    bool post(Engine& engine) override;
    bool propagate_value(Engine& engine, Var& source, std::int64_t v) override;
    bool entailed() const override;

private:
    bool prune_others(const Var& bound);
};

/// sum(xs) = rhs with bounds-consistent filtering. Coefficients come from
/// affine views (or auxiliary channeled variables) in the scope.
class LinearEq final : public Constraint {
public:
    LinearEq(std::vector<Var*> xs, std::int64_t rhs);
    bool post(Engine& engine) override;
    bool propagate_var(Engine& engine, Var& source) override;
    bool entailed() const override;

private:
    bool sweep();
    std::int64_t rhs_;
};

/// sum(xs) <= rhs, one-sided bounds filtering.
class LinearLeq final : public Constraint {
public:
    LinearLeq(std::vector<Var*> xs, std::int64_t rhs);
    bool post(Engine& engine) override;
    bool propagate_var(Engine& engine, Var& source) override;
    bool entailed() const override;

private:
    bool sweep();
    std::int64_t rhs_;
};

/// Disjunction over 0/1 handles with unit propagation: pos members satisfy
/// the clause at 1, neg members at 0. Negation views can equally be passed
/// as pos members.
class BoolClause final : public Constraint {
public:
    BoolClause(std::vector<Var*> pos, std::vector<Var*> neg);
    bool post(Engine& engine) override;
    bool propagate_value(Engine& engine, Var& source, std::int64_t v) override;
    bool entailed() const override;

private:
    bool sweep();
    std::size_t pos_count_;
};

/// Two-way channeling b <=> (x = i) posted as an ordinary constraint: the
/// no-view replacement for a literal view, propagating exactly the same
/// prunings through the queue.
class ReifyEq final : public Constraint {
public:
    ReifyEq(Var& b, Var& x, std::int64_t lit);
    bool post(Engine& engine) override;
    bool propagate_value(Engine& engine, Var& source, std::int64_t v) override;
    bool entailed() const override;

private:
    Var& b_;
    Var& x_;
    std::int64_t lit_;
};

/// Two-way channeling y = a*x + b: the no-view replacement for an affine
/// (or shift, or negation) view. Keeps D(y) equal to the image of D(x)
/// value by value.
class AffineChannel final : public Constraint {
public:
    AffineChannel(Var& y, Var& x, AffineFn fn);
    bool post(Engine& engine) override;
    bool propagate_value(Engine& engine, Var& source, std::int64_t v) override;
    bool entailed() const override;

private:
    Var& y_;
    Var& x_;
    AffineFn fn_;
};

}

#endif
