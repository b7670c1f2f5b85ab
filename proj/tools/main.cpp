// Benchmark harness for the fdview engine. Runs a named model under one or
// all propagation regimes and reports the run counters as CSV or an
// aligned table. Talks to the engine exclusively through the C interface.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fdview.h"
#include "report.hpp"

namespace {

struct Options {
    std::string bench;
    int n = 0;
    int v = 0, k = 0, lam = 0;
    std::string mode = "all";
    int runs = 1;
    std::string emit = "text";
    std::int64_t limit = 0; // 0 = benchmark default, <0 = all solutions
};

int mode_code(const std::string& mode)
{
    if (mode == "noview")
        return FDV_MODE_NOVIEW;
    if (mode == "varview")
        return FDV_MODE_VARVIEW;
    return FDV_MODE_DOMVIEW;
}

int run_bench(const Options& opt)
{
    std::vector<std::string> modes;
    if (opt.mode == "all")
        modes = {"noview", "varview", "domview"};
    else
        modes = {opt.mode};

    std::vector<fdview_cli::BenchReport> reports;
    for (const std::string& mode : modes) {
        std::vector<fdv_stats> runs;
        for (int r = 0; r < opt.runs; ++r) {
            fdv_bench_opts bo{};
            bo.name = opt.bench.c_str();
            bo.n = opt.n;
            bo.v = opt.v;
            bo.k = opt.k;
            bo.lam = opt.lam;
            bo.mode = mode_code(mode);
            bo.limit = opt.limit;
            fdv_stats stats{};
            const int rc = fdv_bench_once(&bo, &stats);
            if (rc == FDV_ENAME) {
                std::fprintf(stderr, "fdview: unknown benchmark '%s'\n", opt.bench.c_str());
                return 2;
            }
            if (rc != FDV_OK) {
                std::fprintf(stderr, "fdview: invalid benchmark parameters (rc=%d)\n", rc);
                return 2;
            }
            runs.push_back(stats);
        }
        fdview_cli::BenchReport report;
        if (!fdview_cli::aggregate(opt.bench, mode, runs, report)) {
            std::fprintf(stderr,
                "fdview: internal error: count columns differ across repeated runs\n");
            return 1;
        }
        reports.push_back(report);
    }

    const std::string out = opt.emit == "csv" ? fdview_cli::to_csv(reports)
                                              : fdview_cli::to_text(reports);
    std::fputs(out.c_str(), stdout);
    return 0;
}

}

int main(int argc, char** argv)
{
    CLI::App app{"fdview benchmark harness"};
    app.require_subcommand(1);

    Options opt;
    CLI::App* bench = app.add_subcommand("bench", "run a benchmark model");
    bench->add_option("name", opt.bench, "magicseries|langford|knapsack|bibd|slab")
        ->required();
    bench->add_option("--n", opt.n, "instance size (benchmark-specific)");
    bench->add_option("--v", opt.v, "bibd: number of treatments");
    bench->add_option("--k", opt.k, "bibd: block size");
    bench->add_option("--lambda", opt.lam, "bibd: pairwise balance");
    bench->add_option("--mode", opt.mode, "noview|varview|domview|all")
        ->check(CLI::IsMember({"noview", "varview", "domview", "all"}));
    bench->add_option("--runs", opt.runs, "repetitions per mode")
        ->check(CLI::PositiveNumber);
    bench->add_option("--emit", opt.emit, "csv|text")
        ->check(CLI::IsMember({"csv", "text"}));
    bench->add_option("--limit", opt.limit,
        "solution limit (0 = benchmark default, negative = all)");

    CLI11_PARSE(app, argc, argv);
    return run_bench(opt);
}
