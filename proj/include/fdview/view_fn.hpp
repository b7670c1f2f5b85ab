#ifndef FDVIEW_VIEW_FN_HPP
#define FDVIEW_VIEW_FN_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fdview/types.hpp"

namespace fdview {

enum class Monotonicity { monotone, anti_monotone, neither };

/// Injective integer view function v -> a*v + b with its partial inverse.
/// Shift views are the a == 1 case and never hit the undefined branch of
/// the inverse; boolean negation is (a, b) == (-1, 1).
struct AffineFn {
    std::int64_t a; // non-zero
    std::int64_t b;

    std::int64_t forward(std::int64_t v) const { return a * v + b; }

    /// Absent when no integer preimage exists.
    std::optional<std::int64_t> inverse(std::int64_t w) const
    {
        const std::int64_t d = w - b;
        if (d % a != 0)
            return std::nullopt;
        return d / a;
    }

    Monotonicity monotonicity() const
    {
        return a > 0 ? Monotonicity::monotone : Monotonicity::anti_monotone;
    }
};

/// Non-injective view function: forward image plus the set-valued inverse
/// over the underlying variable's universe (empty set plays the role of an
/// undefined inverse).
struct NonInjFn {
    std::function<std::int64_t(std::int64_t)> forward;
    std::function<std::vector<std::int64_t>(std::int64_t)> inverse_set;
};

}

#endif
