#include "report.hpp"

#include <cmath>
#include <cstdio>

namespace fdview_cli {

const char* const kCsvHeader = "bench,mode,runs,mean_cpu_ms,mean_wall_ms,"
                               "sd_cpu_ms,sd_wall_ms,peak_bytes,propagations,"
                               "nodes,failures,solutions";

namespace {

    void mean_sd(const std::vector<double>& xs, double& mean, double& sd)
    {
        mean = 0.0;
        for (double x : xs)
            mean += x;
        mean /= static_cast<double>(xs.size());
        double var = 0.0;
        for (double x : xs)
            var += (x - mean) * (x - mean);
        var /= static_cast<double>(xs.size());
        sd = std::sqrt(var);
    }

}

bool aggregate(const std::string& bench, const std::string& mode,
    const std::vector<fdv_stats>& runs, BenchReport& out)
{
    if (runs.empty())
        return false;
    for (const fdv_stats& r : runs) {
        if (r.propagations != runs[0].propagations || r.nodes != runs[0].nodes
            || r.failures != runs[0].failures || r.solutions != runs[0].solutions
            || r.peak_bytes != runs[0].peak_bytes)
            return false;
    }
    out.bench = bench;
    out.mode = mode;
    out.runs = static_cast<int>(runs.size());
    std::vector<double> cpu, wall;
    for (const fdv_stats& r : runs) {
        cpu.push_back(r.cpu_ms);
        wall.push_back(r.wall_ms);
    }
    mean_sd(cpu, out.mean_cpu_ms, out.sd_cpu_ms);
    mean_sd(wall, out.mean_wall_ms, out.sd_wall_ms);
    out.peak_bytes = runs[0].peak_bytes;
    out.propagations = runs[0].propagations;
    out.nodes = runs[0].nodes;
    out.failures = runs[0].failures;
    out.solutions = runs[0].solutions;
    return true;
}

std::string to_csv(const std::vector<BenchReport>& reports)
{
    std::string out = kCsvHeader;
    out += '\n';
    char line[512];
    for (const BenchReport& r : reports) {
        std::snprintf(line, sizeof line,
            "%s,%s,%d,%.1f,%.1f,%.1f,%.1f,%llu,%llu,%llu,%llu,%llu\n",
            r.bench.c_str(), r.mode.c_str(), r.runs, r.mean_cpu_ms, r.mean_wall_ms,
            r.sd_cpu_ms, r.sd_wall_ms,
            static_cast<unsigned long long>(r.peak_bytes),
            static_cast<unsigned long long>(r.propagations),
            static_cast<unsigned long long>(r.nodes),
            static_cast<unsigned long long>(r.failures),
            static_cast<unsigned long long>(r.solutions));
        out += line;
    }
    return out;
}

std::string to_text(const std::vector<BenchReport>& reports)
{
    char line[512];
    std::snprintf(line, sizeof line, "%-12s %-8s %5s %9s %9s %8s %8s %11s %13s %9s %9s %9s\n",
        "bench", "mode", "runs", "cpu_ms", "wall_ms", "sd_cpu", "sd_wall", "peak_bytes",
        "propagations", "nodes", "failures", "solutions");
    std::string out = line;
    for (const BenchReport& r : reports) {
        std::snprintf(line, sizeof line,
            "%-12s %-8s %5d %9.1f %9.1f %8.1f %8.1f %11llu %13llu %9llu %9llu %9llu\n",
            r.bench.c_str(), r.mode.c_str(), r.runs, r.mean_cpu_ms, r.mean_wall_ms,
            r.sd_cpu_ms, r.sd_wall_ms,
            static_cast<unsigned long long>(r.peak_bytes),
            static_cast<unsigned long long>(r.propagations),
            static_cast<unsigned long long>(r.nodes),
            static_cast<unsigned long long>(r.failures),
            static_cast<unsigned long long>(r.solutions));
        out += line;
    }
    return out;
}

}
