#ifndef PLANNER_RELAXATION_RELAXED_TASK_H
#define PLANNER_RELAXATION_RELAXED_TASK_H

#include "planner/sas/task.h"

#include <span>
#include <vector>

namespace relaxation {
/*
  One relaxed operator per (operator, effect) pair. Its precondition is the
  operator precondition plus the effect condition, as sorted unique atom ids.
*/
struct RelaxedOperator {
    int op_id;
    std::vector<int> preconditions;
    int effect;
};

class RelaxedTask {
    sas::AtomTable atoms;
    std::vector<RelaxedOperator> relaxed_ops;
    std::vector<std::vector<int>> achievers;
    std::vector<std::vector<int>> precondition_of;
    std::vector<int> goal_atoms;
public:
    explicit RelaxedTask(const sas::Task &task);

    const sas::AtomTable &get_atoms() const {
        return atoms;
    }
    int num_atoms() const {
        return atoms.size();
    }
    int num_operators() const {
        return static_cast<int>(relaxed_ops.size());
    }
    const RelaxedOperator &get_operator(int id) const {
        return relaxed_ops[id];
    }
    const std::vector<RelaxedOperator> &get_operators() const {
        return relaxed_ops;
    }
    const std::vector<int> &get_achievers(int atom) const {
        return achievers[atom];
    }
    const std::vector<int> &get_precondition_of(int atom) const {
        return precondition_of[atom];
    }
    const std::vector<int> &get_goal_atoms() const {
        return goal_atoms;
    }
    std::vector<int> state_atoms(std::span<const int> state) const;
};

/*
  Plain relaxed reachability from a set of atoms, optionally forbidding a
  set of relaxed operators. Returns a per-atom reached flag.
*/
std::vector<bool> relaxed_reachable(const RelaxedTask &task,
                                    std::span<const int> start_atoms,
                                    const std::vector<bool> *forbidden_ops = nullptr);
}

#endif
