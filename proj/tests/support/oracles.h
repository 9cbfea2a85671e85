#ifndef TESTS_SUPPORT_ORACLES_H
#define TESTS_SUPPORT_ORACLES_H

#include "planner/sas/task.h"

#include <limits>
#include <optional>
#include <span>
#include <vector>

/*
  Reference implementations written for clarity, without sharing code with
  the planner beyond the task representation.
*/
namespace test_support {
constexpr long long ORACLE_INFINITY = std::numeric_limits<long long>::max();

bool oracle_applicable(const sas::Operator &op, std::span<const int> state);
std::vector<int> oracle_apply(const sas::Operator &op, std::span<const int> state);
bool oracle_is_goal(const sas::Task &task, std::span<const int> state);

// Breadth-first search over the explicit state space.
std::optional<std::vector<int>> bfs_plan(const sas::Task &task);
std::optional<int> bfs_plan_length(const sas::Task &task);
// Number of states reachable from the initial state.
int count_reachable_states(const sas::Task &task);

// Unit-cost additive costs per (var, value) by Bellman-Ford style sweeps.
std::vector<std::vector<long long>> naive_atom_costs(const sas::Task &task,
                                                     std::span<const int> state);
long long naive_hadd(const sas::Task &task, std::span<const int> state);

// Relaxed reachability of the goal with every effect adding `removed`
// dropped. True if the atom is a delete-relaxation landmark.
bool oracle_removal_test(const sas::Task &task, sas::Atom removed);

// Replays a set of operators under delete-free semantics until nothing
// changes and reports whether every goal atom was reached.
bool relaxed_replay_reaches_goal(const sas::Task &task, std::span<const int> state,
                                 std::span<const int> operators);

/*
  Keeps every visited (key, state) pair and evaluates novelty from the
  definition: the size of the smallest tuple of the state not contained in
  any earlier state with the same key, or k + 1 if there is none up to k.
*/
class BruteForceNovelty {
    struct Visit {
        std::vector<int> key;
        std::vector<int> state;
    };
    std::vector<Visit> visits;
    int bound;
public:
    explicit BruteForceNovelty(int bound) : bound(bound) {}
    int query(std::span<const int> state, const std::vector<int> &key);
};
}

#endif
