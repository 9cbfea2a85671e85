#include "planner/relaxation/relaxed_task.h"

#include <algorithm>

using namespace std;

namespace relaxation {
RelaxedTask::RelaxedTask(const sas::Task &task)
    : atoms(task),
      achievers(atoms.size()),
      precondition_of(atoms.size()) {
    for (int op_id = 0; op_id < task.num_operators(); ++op_id) {
        const sas::Operator &op = task.operators[op_id];
        for (const sas::Effect &eff : op.effects) {
            RelaxedOperator relaxed{op_id, {}, atoms.id(eff.var, eff.value)};
            for (const sas::Atom &pre : op.preconditions)
                relaxed.preconditions.push_back(atoms.id(pre));
            for (const sas::Atom &cond : eff.conditions)
                relaxed.preconditions.push_back(atoms.id(cond));
            sort(relaxed.preconditions.begin(), relaxed.preconditions.end());
            relaxed.preconditions.erase(
                unique(relaxed.preconditions.begin(), relaxed.preconditions.end()),
                relaxed.preconditions.end());
            relaxed_ops.push_back(move(relaxed));
        }
    }
    for (int id = 0; id < num_operators(); ++id) {
        const RelaxedOperator &relaxed = relaxed_ops[id];
        achievers[relaxed.effect].push_back(id);
        for (int pre : relaxed.preconditions)
            precondition_of[pre].push_back(id);
    }
    for (const sas::Atom &goal : task.goal)
        goal_atoms.push_back(atoms.id(goal));
}

vector<int> RelaxedTask::state_atoms(span<const int> state) const {
    vector<int> result;
    result.reserve(state.size());
    for (size_t var = 0; var < state.size(); ++var)
        result.push_back(atoms.id(static_cast<int>(var), state[var]));
    return result;
}

vector<bool> relaxed_reachable(const RelaxedTask &task, span<const int> start_atoms,
                               const vector<bool> *forbidden_ops) {
    vector<bool> reached(task.num_atoms(), false);
    vector<int> unsatisfied(task.num_operators());
    vector<int> queue;
    for (int id = 0; id < task.num_operators(); ++id) {
        unsatisfied[id] = static_cast<int>(task.get_operator(id).preconditions.size());
    }
    auto reach = [&](int atom) {
        if (!reached[atom]) {
            reached[atom] = true;
            queue.push_back(atom);
        }
    };
    auto fire = [&](int id) {
        if (!forbidden_ops || !(*forbidden_ops)[id])
            reach(task.get_operator(id).effect);
    };
    for (int atom : start_atoms)
        reach(atom);
    for (int id = 0; id < task.num_operators(); ++id) {
        if (unsatisfied[id] == 0)
            fire(id);
    }
    for (size_t i = 0; i < queue.size(); ++i) {
        for (int id : task.get_precondition_of(queue[i])) {
            if (--unsatisfied[id] == 0)
                fire(id);
        }
    }
    return reached;
}
}
