#ifndef FDVIEW_VIEW_OPS_HPP
#define FDVIEW_VIEW_OPS_HPP

#include "fdview/var.hpp"
#include "fdview/view_fn.hpp"

namespace fdview::view_ops {

/// Domain-operation delegation through an injective affine function,
/// shared by variable views and domain views (their delegation is the
/// same; only constraint handling differs).

inline bool member(const Var& x, const AffineFn& fn, std::int64_t v)
{
    const auto w = fn.inverse(v);
    return w ? x.member(*w) : false;
}

inline bool remove(Var& x, const AffineFn& fn, std::int64_t v)
{
    const auto w = fn.inverse(v);
    return w ? x.remove(*w) : true;
}

inline bool bind(Var& x, const AffineFn& fn, std::int64_t v)
{
    const auto w = fn.inverse(v);
    return w ? x.bind(*w) : false;
}

inline bool is_bound_to(const Var& x, const AffineFn& fn, std::int64_t v)
{
    const auto w = fn.inverse(v);
    return w ? x.is_bound_to(*w) : false;
}

inline std::int64_t min_of(const Var& x, const AffineFn& fn)
{
    return fn.a > 0 ? fn.forward(x.min()) : fn.forward(x.max());
}

inline std::int64_t max_of(const Var& x, const AffineFn& fn)
{
    return fn.a > 0 ? fn.forward(x.max()) : fn.forward(x.min());
}

/// Bound updates exploit monotonicity. When the inverse of the requested
/// bound is undefined, the bound is first tightened to the nearest
/// view-representable value in the tightening direction; the floor/ceil
/// divisions below implement exactly that.
inline bool update_min(Var& x, const AffineFn& fn, std::int64_t v)
{
    if (fn.monotonicity() == Monotonicity::monotone)
        return x.update_min(ceil_div(v - fn.b, fn.a));
    return x.update_max(floor_div(v - fn.b, fn.a));
}

inline bool update_max(Var& x, const AffineFn& fn, std::int64_t v)
{
    if (fn.monotonicity() == Monotonicity::monotone)
        return x.update_max(floor_div(v - fn.b, fn.a));
    return x.update_min(ceil_div(v - fn.b, fn.a));
}

}

#endif
