#include "fdview/domain.hpp"

#include <algorithm>
#include <cassert>

namespace fdview {

IntDomain::IntDomain(Trail& trail, MemCounter& mem, std::int64_t lo, std::int64_t hi)
    : trail_(trail), lo_(lo), span_(hi - lo + 1), size_(span_), min_(lo), max_(hi)
{
    assert(hi >= lo);
    dense_.resize(static_cast<std::size_t>(span_));
    pos_.resize(static_cast<std::size_t>(span_));
    for (std::int32_t i = 0; i < span_; ++i) {
        dense_[static_cast<std::size_t>(i)] = i;
        pos_[static_cast<std::size_t>(i)] = i;
    }
    mem.add(sizeof(IntDomain) + static_cast<std::size_t>(span_) * (sizeof(std::int32_t) * 2));
}

bool IntDomain::member(std::int64_t v) const
{
    const std::int64_t off = v - lo_;
    return off >= 0 && off < span_ && pos_[static_cast<std::size_t>(off)] < size_.get();
}

void IntDomain::swap_out(std::int32_t offset)
{
    const std::int32_t last = static_cast<std::int32_t>(size_.get()) - 1;
    const std::int32_t p = pos_[static_cast<std::size_t>(offset)];
    const std::int32_t moved = dense_[static_cast<std::size_t>(last)];
    dense_[static_cast<std::size_t>(p)] = moved;
    pos_[static_cast<std::size_t>(moved)] = p;
    dense_[static_cast<std::size_t>(last)] = offset;
    pos_[static_cast<std::size_t>(offset)] = last;
    size_.set(trail_, last);
}

IntDomain::RemoveResult IntDomain::remove(std::int64_t v)
{
    if (!member(v))
        return RemoveResult::absent;
    if (size_.get() == 1)
        return RemoveResult::wipeout;
    swap_out(static_cast<std::int32_t>(v - lo_));
    if (v == min_.get()) {
        std::int64_t m = v + 1;
        while (!member(m))
            ++m;
        min_.set(trail_, m);
    }
    if (v == max_.get()) {
        std::int64_t m = v - 1;
        while (!member(m))
            --m;
        max_.set(trail_, m);
    }
    return RemoveResult::removed;
}

bool IntDomain::bind(std::int64_t v, std::vector<std::int64_t>& removed)
{
    removed.clear();
    if (!member(v))
        return false;
    for (std::int64_t i = 0; i < size_.get(); ++i) {
        const std::int64_t val = lo_ + dense_[static_cast<std::size_t>(i)];
        if (val != v)
            removed.push_back(val);
    }
    std::sort(removed.begin(), removed.end());
    for (std::int64_t val : removed)
        swap_out(static_cast<std::int32_t>(val - lo_));
    min_.set(trail_, v);
    max_.set(trail_, v);
    return true;
}

IntDomain::UpdateResult IntDomain::update_min(std::int64_t v, std::vector<std::int64_t>& removed)
{
    removed.clear();
    if (v <= min_.get())
        return UpdateResult::no_change;
    if (v > max_.get())
        return UpdateResult::wipeout;
    for (std::int64_t u = min_.get(); u < v; ++u)
        if (member(u))
            removed.push_back(u);
    for (std::int64_t u : removed)
        swap_out(static_cast<std::int32_t>(u - lo_));
    std::int64_t m = v;
    while (!member(m))
        ++m;
    min_.set(trail_, m);
    return UpdateResult::changed;
}

IntDomain::UpdateResult IntDomain::update_max(std::int64_t v, std::vector<std::int64_t>& removed)
{
    removed.clear();
    if (v >= max_.get())
        return UpdateResult::no_change;
    if (v < min_.get())
        return UpdateResult::wipeout;
    for (std::int64_t u = v + 1; u <= max_.get(); ++u)
        if (member(u))
            removed.push_back(u);
    for (std::int64_t u : removed)
        swap_out(static_cast<std::int32_t>(u - lo_));
    std::int64_t m = v;
    while (!member(m))
        --m;
    max_.set(trail_, m);
    return UpdateResult::changed;
}

std::vector<std::int64_t> IntDomain::values() const
{
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(size_.get()));
    for (std::int64_t i = 0; i < size_.get(); ++i)
        out.push_back(lo_ + dense_[static_cast<std::size_t>(i)]);
    std::sort(out.begin(), out.end());
    return out;
}

}
