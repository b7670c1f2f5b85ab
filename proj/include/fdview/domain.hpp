#ifndef FDVIEW_DOMAIN_HPP
#define FDVIEW_DOMAIN_HPP

#include <cstdint>
#include <vector>

#include "fdview/stats.hpp"
#include "fdview/trail.hpp"

namespace fdview {

/// Reversible finite set of integers over a universe fixed at creation.
///
/// Sparse-set representation: `dense_` is a permutation of the universe
/// offsets whose first `size()` entries are the current members. Removal
/// swaps a member just past the live window, so restoring the reversible
/// size (plus min/max) restores the set. The permutation itself is never
/// trailed. Values outside the universe are non-members everywhere.
class IntDomain {
public:
    enum class RemoveResult { removed, absent, wipeout };
    enum class UpdateResult { changed, no_change, wipeout };

    IntDomain(Trail& trail, MemCounter& mem, std::int64_t lo, std::int64_t hi);

    bool member(std::int64_t v) const;
    std::int64_t min() const { return min_.get(); }
    std::int64_t max() const { return max_.get(); }
    std::int64_t size() const { return size_.get(); }
    bool is_bound_to(std::int64_t v) const { return size() == 1 && member(v); }

    std::int64_t universe_min() const { return lo_; }
    std::int64_t universe_max() const { return lo_ + span_ - 1; }

    /// On wipeout the domain is left unchanged.
    RemoveResult remove(std::int64_t v);

    /// Reduces the domain to {v}. Returns false (wipeout, domain unchanged)
    /// if v is not a member; otherwise fills `removed` with the discarded
    /// values in increasing order.
    bool bind(std::int64_t v, std::vector<std::int64_t>& removed);

    /// Removes every member < v (resp. > v), reporting the discarded values
    /// in increasing order. Wipeout leaves the domain unchanged.
    UpdateResult update_min(std::int64_t v, std::vector<std::int64_t>& removed);
    UpdateResult update_max(std::int64_t v, std::vector<std::int64_t>& removed);

    /// Current members in increasing order (scratch helper, not tracked).
    std::vector<std::int64_t> values() const;

private:
    void swap_out(std::int32_t offset);

    Trail& trail_;
    std::int64_t lo_;
    std::int64_t span_;
    std::vector<std::int32_t> dense_;
    std::vector<std::int32_t> pos_;
    RevInt size_;
    RevInt min_;
    RevInt max_;
};

}

#endif
