#ifndef FDVIEW_TYPES_HPP
#define FDVIEW_TYPES_HPP

#include <cstdint>

namespace fdview {

using ConstraintId = std::int32_t;
using VarId = std::int32_t;

/// Which propagation regime an engine instance runs. Fixed at construction;
/// every variable, view and constraint of the instance shares it.
enum class EngineMode { no_view, variable_view, domain_view };

/// Floor division (quotient rounded toward negative infinity).
constexpr std::int64_t floor_div(std::int64_t n, std::int64_t d)
{
    std::int64_t q = n / d;
    std::int64_t r = n % d;
    return (r != 0 && ((r < 0) != (d < 0))) ? q - 1 : q;
}

constexpr std::int64_t ceil_div(std::int64_t n, std::int64_t d)
{
    return -floor_div(-n, d);
}

/// Mathematical residue in [0, d) for d > 0, also for negative n.
constexpr std::int64_t floor_mod(std::int64_t n, std::int64_t d)
{
    return n - floor_div(n, d) * d;
}

}

#endif
