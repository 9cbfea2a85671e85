#ifndef PLANNER_RELAXATION_HEURISTICS_H
#define PLANNER_RELAXATION_HEURISTICS_H

#include "planner/relaxation/relaxed_task.h"

#include <cstdint>
#include <limits>
#include <queue>
#include <span>
#include <vector>

namespace relaxation {
constexpr int INFTY = std::numeric_limits<int>::max();

struct HeuristicReport {
    int value = 0;
    // Operator indices of the relaxed plan, ascending.
    std::vector<int> relaxed_plan;
    // Relaxed-plan operators applicable in the evaluated state, ascending.
    std::vector<int> preferred;

    bool is_dead_end() const {
        return value == INFTY;
    }
};

/*
  Unit-cost additive heuristic and FF heuristic over a shared relaxed task.
  Best supporters come from a Dijkstra pass over atoms; among achievers of
  equal cost the lowest relaxed-operator index wins. Scratch buffers are
  reused, so one instance must not be used from several threads.
*/
class DeleteRelaxationHeuristic {
    const sas::Task &task;
    RelaxedTask relaxed;

    using Bucket = std::pair<std::int64_t, int>;
    std::vector<std::int64_t> atom_cost;
    std::vector<int> supporter;
    std::vector<std::int64_t> op_cost;
    std::vector<int> unsatisfied;
    std::priority_queue<Bucket, std::vector<Bucket>, std::greater<>> heap;
    std::vector<char> marked_atom;
    std::vector<char> in_plan;
    std::vector<int> stack;

    void improve(int atom, std::int64_t cost, int relaxed_op);
    // Returns false if some goal atom is unreachable.
    bool compute_costs(std::span<const int> state);
public:
    explicit DeleteRelaxationHeuristic(const sas::Task &task);

    int compute_add(std::span<const int> state);
    HeuristicReport compute_ff(std::span<const int> state);

    const RelaxedTask &get_relaxed_task() const {
        return relaxed;
    }
    // Valid after a compute call: h^add cost of an atom, -1 if unreached.
    std::int64_t get_atom_cost(int atom) const {
        return atom_cost[atom];
    }
    int get_supporter(int atom) const {
        return supporter[atom];
    }
};

int hadd(const sas::Task &task, std::span<const int> state);
HeuristicReport hff(const sas::Task &task, std::span<const int> state);
}

#endif
