#ifndef PLANNER_CONFIGS_PLAN_COMMAND_H
#define PLANNER_CONFIGS_PLAN_COMMAND_H

#include "planner/search/lazy_search.h"

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>

namespace configs {
enum ExitCode {
    EXIT_SOLVED = 0,
    EXIT_UNSOLVABLE = 1,
    EXIT_LIMIT = 2,
    EXIT_INPUT_ERROR = 3,
};

int exit_code_for(search::Outcome outcome);

struct PlanArguments {
    std::string task_path;
    std::string config;
    search::SearchOptions options;
    std::optional<std::string> plan_file;
    std::optional<std::string> stats_file;
    bool dump_landmarks = false;
    bool dump_policy = false;
};

/*
  Runs one search and writes the requested artifacts. The dump flags print
  their structure to out and return without searching. Input errors go to
  err and yield EXIT_INPUT_ERROR.
*/
int run_plan(const PlanArguments &args, std::ostream &out, std::ostream &err);

/*
  Statistics report keys, one "key=value" per line in this order:
    config task outcome solved plan_length expansions evaluations
    ff_evaluations landmark_evaluations novelty_evaluations generated
    registered dead_ends discarded boosts landmarks novelty_bound
    novelty_fallback estimated_memory_bytes runtime_s peak_rss_kb
  plan_length is "none" without a plan. runtime_s and peak_rss_kb are the
  only fields that vary between identical runs.
*/
void write_statistics(std::ostream &out, const PlanArguments &args,
                      const search::SearchResult &result);
std::map<std::string, std::string> read_statistics(std::istream &in);

extern const char *const STATISTICS_HELP;
}

#endif
