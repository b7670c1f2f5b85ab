#ifndef FDVIEW_STATS_HPP
#define FDVIEW_STATS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>

namespace fdview {

/// Per-run counters. All count fields are monotonically non-decreasing
/// within a run; timings are filled in by the benchmark driver.
struct RunStats {
    std::uint64_t propagations = 0; ///< events popped and dispatched
    std::uint64_t nodes = 0;        ///< root + bind attempts
    std::uint64_t failures = 0;     ///< fixpoints that wiped out a domain
    std::uint64_t solutions = 0;
    std::uint64_t peak_bytes = 0;   ///< high-water mark of tracked allocation
    double cpu_ms = 0.0;
    double wall_ms = 0.0;
};

/// Engine-level allocation accounting: domains, watch-list entries, view
/// objects, trail and queue. Not a malloc hook; scratch buffers are not
/// tracked.
class MemCounter {
public:
    void add(std::size_t n)
    {
        current_ += n;
        peak_ = std::max(peak_, current_);
    }

    void sub(std::size_t n) { current_ -= n; }

    std::uint64_t current() const { return current_; }
    std::uint64_t peak() const { return peak_; }

private:
    std::uint64_t current_ = 0;
    std::uint64_t peak_ = 0;
};

}

#endif
