#ifndef FDVIEW_TRAIL_HPP
#define FDVIEW_TRAIL_HPP

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "fdview/stats.hpp"

namespace fdview {

/// Undo log for reversible engine state. Frames delimit speculative
/// changes; popping a frame restores every saved slot in reverse
/// chronological order.
///
/// Frame identifiers increase monotonically across pushes and are never
/// reused, so a stale stamp on a reversible slot can never collide with a
/// later frame.
class Trail {
public:
    explicit Trail(MemCounter& mem) : mem_(mem) {}

    Trail(const Trail&) = delete;
    Trail& operator=(const Trail&) = delete;

    void push_frame()
    {
        frames_.push_back({entries_.size(), era_});
        era_ = ++next_era_;
        mem_.add(sizeof(Frame));
    }

    /// Popping with no open frame is a programming error.
    void pop_frame()
    {
        if (frames_.empty())
            std::abort();
        const Frame f = frames_.back();
        frames_.pop_back();
        while (entries_.size() > f.mark) {
            const Entry& e = entries_.back();
            *e.loc = e.old_value;
            entries_.pop_back();
            mem_.sub(sizeof(Entry));
        }
        mem_.sub(sizeof(Frame));
        era_ = f.prev_era;
    }

    /// Records the current contents of a slot for restoration. The slot
    /// address must stay stable for the lifetime of the enclosing frames.
    void save(std::int64_t& slot)
    {
        entries_.push_back({&slot, slot});
        mem_.add(sizeof(Entry));
    }

    /// Identifier of the active frame; 0 means "no frame open" (root state,
    /// mutations need no saving).
    std::uint64_t era() const { return era_; }

    std::size_t depth() const { return frames_.size(); }
    std::size_t entry_count() const { return entries_.size(); }

private:
    struct Entry {
        std::int64_t* loc;
        std::int64_t old_value;
    };
    struct Frame {
        std::size_t mark;
        std::uint64_t prev_era;
    };

    MemCounter& mem_;
    std::vector<Entry> entries_;
    std::vector<Frame> frames_;
    std::uint64_t era_ = 0;
    std::uint64_t next_era_ = 0;
};

/// A reversible 64-bit integer. Saves itself to the trail at most once per
/// frame (era stamping).
class RevInt {
public:
    explicit RevInt(std::int64_t v) : value_(v) {}

    std::int64_t get() const { return value_; }

    void set(Trail& trail, std::int64_t v)
    {
        if (v == value_)
            return;
        if (stamp_ != trail.era()) {
            if (trail.era() != 0)
                trail.save(value_);
            stamp_ = trail.era();
        }
        value_ = v;
    }

private:
    std::int64_t value_;
    std::uint64_t stamp_ = 0;
};

}

#endif
