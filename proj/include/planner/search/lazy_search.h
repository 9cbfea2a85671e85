#ifndef PLANNER_SEARCH_LAZY_SEARCH_H
#define PLANNER_SEARCH_LAZY_SEARCH_H

#include "planner/open_lists/policy.h"
#include "planner/sas/task.h"
#include "planner/search/state.h"

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace search {
enum class Outcome {
    SOLVED,
    UNSOLVABLE_UNDER_RELAXATION,
    EXHAUSTED,
    TIME_LIMIT,
    MEMORY_LIMIT,
    EXPANSION_LIMIT,
};

std::string outcome_name(Outcome outcome);
bool is_limit(Outcome outcome);

struct SearchLimits {
    double time_seconds = 300.0;
    std::uint64_t memory_bytes = std::uint64_t(8) << 30;
    std::optional<std::uint64_t> max_expansions;
};

struct SearchOptions {
    SearchLimits limits;
    int novelty_bound = 2;
    bool record_trace = false;
};

struct Statistics {
    std::uint64_t expansions = 0;
    std::uint64_t ff_evaluations = 0;
    std::uint64_t landmark_evaluations = 0;
    std::uint64_t novelty_evaluations = 0;
    std::uint64_t generated = 0;
    std::uint64_t registered = 0;
    std::uint64_t dead_ends = 0;
    std::uint64_t discarded = 0;
    std::uint64_t boosts = 0;
    int landmarks = 0;
    bool novelty_fallback = false;
    std::uint64_t estimated_memory_bytes = 0;
    double wall_clock_seconds = 0.0;
};

struct SearchResult {
    Outcome outcome = Outcome::EXHAUSTED;
    std::optional<std::vector<int>> plan;
    Statistics statistics;
    // Expanded states in expansion order; only filled with record_trace.
    std::vector<StateId> expansion_trace;
};

enum class NodeStatus : std::uint8_t {
    GENERATED,
    EXPANDED,
    PRUNED,
};

constexpr int UNEVALUATED = -1;

struct SearchNode {
    StateId parent = StateId::no_state;
    int op = -1;
    int g = 0;
    int h_ff = UNEVALUATED;
    int h_lm = UNEVALUATED;
    NodeStatus status = NodeStatus::GENERATED;
    bool reached_by_preferred = false;
};

/*
  Greedy best-first search with deferred evaluation. Successors enter the
  open list under their parent's heuristic values and are evaluated when
  popped; the goal test happens on pop. Duplicates are never reinserted and
  g values are never revised.
*/
SearchResult lazy_gbfs(const sas::Task &task, const open_lists::PolicySpec &policy,
                       const SearchOptions &options = {});

std::vector<int> extract_plan(std::span<const SearchNode> nodes, StateId goal_state);

struct PlanValidation {
    bool valid = false;
    // Step of the first inapplicable operator, or -1.
    int failed_step = -1;
    std::string reason;

    explicit operator bool() const {
        return valid;
    }
};

PlanValidation validate_plan(const sas::Task &task, std::span<const int> plan);

// IPC plan format: one "(name)" line per step and a trailing cost comment.
void write_plan(std::ostream &out, const sas::Task &task, std::span<const int> plan);
}

#endif
