#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "salpeter/scenario.hpp"

namespace salpeter {

struct RunOptions {
    std::string out_dir = ".";
    int threads = 0;     // 0 = hardware concurrency
    bool use_cache = true;
    bool quiet = false;  // suppress stderr progress/cache lines
    std::string cache_dir;  // empty: <out_dir>/cache
};

struct RunResult {
    std::filesystem::path csv_path;
    std::filesystem::path manifest_path;
    int cache_hits = 0;
    int cache_misses = 0;
    std::vector<std::string> warnings;
};

/// Executes one subcommand (eigen | evolve | olc | scan | delta-check) for a
/// validated scenario, writing <out>/<subcommand>.csv and
/// <out>/<subcommand>_manifest.json. Identical scenarios produce
/// byte-identical CSVs; the manifest carries the wall time and cache
/// statistics and is excluded from that guarantee.
RunResult run(const Scenario& s, const std::string& subcommand, const RunOptions& opt);

} // namespace salpeter
