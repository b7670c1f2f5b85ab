#ifndef FDVIEW_TOOLS_REPORT_HPP
#define FDVIEW_TOOLS_REPORT_HPP

#include <string>
#include <vector>

#include "fdview.h"

namespace fdview_cli {

/// One benchmark table row: a (bench, mode) pair aggregated over its runs.
struct BenchReport {
    std::string bench;
    std::string mode;
    int runs = 0;
    double mean_cpu_ms = 0.0;
    double mean_wall_ms = 0.0;
    double sd_cpu_ms = 0.0;
    double sd_wall_ms = 0.0;
    std::uint64_t peak_bytes = 0;
    std::uint64_t propagations = 0;
    std::uint64_t nodes = 0;
    std::uint64_t failures = 0;
    std::uint64_t solutions = 0;
};

/// Aggregates per-run stats into a row. Count columns must be identical
/// across runs of the same (bench, mode); returns false when they differ.
bool aggregate(const std::string& bench, const std::string& mode,
    const std::vector<fdv_stats>& runs, BenchReport& out);

extern const char* const kCsvHeader;

std::string to_csv(const std::vector<BenchReport>& reports);
std::string to_text(const std::vector<BenchReport>& reports);

}

#endif
