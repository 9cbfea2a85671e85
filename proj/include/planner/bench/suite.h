#ifndef PLANNER_BENCH_SUITE_H
#define PLANNER_BENCH_SUITE_H

#include "planner/bench/scores.h"

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <vector>

namespace bench {
struct ManifestEntry {
    std::string domain;
    std::string path;
    bool operator==(const ManifestEntry &) const = default;
};

/*
  One task per line, either "path" or "domain<TAB>path". Blank lines and
  lines starting with '#' are skipped. Without an explicit domain the name
  of the task's parent directory is used. Relative paths are resolved
  against base_dir when it is nonempty.
*/
std::vector<ManifestEntry> read_manifest(std::istream &in, const std::string &base_dir = "");
std::vector<ManifestEntry> read_manifest_file(const std::string &path);

struct SuiteOptions {
    std::vector<std::string> configs;
    double time_limit_seconds = 300.0;
    std::uint64_t memory_limit_bytes = std::uint64_t(8) << 30;
    // Extra wall-clock time before a child is killed.
    double grace_seconds = 5.0;
    // Address-space headroom above the search's own memory limit.
    std::uint64_t address_space_slack_bytes = std::uint64_t(512) << 20;
    int jobs = 1;
    std::string planner_executable;
    ExpansionsFormula formula = ExpansionsFormula::NORMALIZED;
};

/*
  Runs every (task, config) pair in a separate child process executing
  "<planner_executable> plan ...". Records come back in manifest order and,
  within a task, in config order. Crashed or killed runs become unsolved
  records.
*/
std::vector<RunRecord> run_suite(std::span<const ManifestEntry> manifest,
                                 const SuiteOptions &options);
}

#endif
