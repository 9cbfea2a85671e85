#include "planner/relaxation/heuristics.h"

#include <algorithm>

using namespace std;

namespace relaxation {
DeleteRelaxationHeuristic::DeleteRelaxationHeuristic(const sas::Task &task)
    : task(task),
      relaxed(task),
      atom_cost(relaxed.num_atoms()),
      supporter(relaxed.num_atoms()),
      op_cost(relaxed.num_operators()),
      unsatisfied(relaxed.num_operators()),
      marked_atom(relaxed.num_atoms()),
      in_plan(task.num_operators()) {
}

void DeleteRelaxationHeuristic::improve(int atom, int64_t cost, int relaxed_op) {
    int64_t &current = atom_cost[atom];
    if (current == -1 || cost < current) {
        current = cost;
        supporter[atom] = relaxed_op;
        heap.emplace(cost, atom);
    } else if (cost == current && supporter[atom] != -1 &&
               relaxed_op < supporter[atom]) {
        supporter[atom] = relaxed_op;
    }
}

bool DeleteRelaxationHeuristic::compute_costs(span<const int> state) {
    fill(atom_cost.begin(), atom_cost.end(), -1);
    fill(supporter.begin(), supporter.end(), -1);
    heap = {};
    for (int id = 0; id < relaxed.num_operators(); ++id) {
        op_cost[id] = 1;
        unsatisfied[id] = static_cast<int>(relaxed.get_operator(id).preconditions.size());
    }
    for (int atom : relaxed.state_atoms(state)) {
        atom_cost[atom] = 0;
        heap.emplace(0, atom);
    }
    for (int id = 0; id < relaxed.num_operators(); ++id) {
        if (unsatisfied[id] == 0)
            improve(relaxed.get_operator(id).effect, op_cost[id], id);
    }
    while (!heap.empty()) {
        auto [cost, atom] = heap.top();
        heap.pop();
        if (cost > atom_cost[atom])
            continue;
        for (int id : relaxed.get_precondition_of(atom)) {
            op_cost[id] += cost;
            if (--unsatisfied[id] == 0)
                improve(relaxed.get_operator(id).effect, op_cost[id], id);
        }
    }
    for (int goal : relaxed.get_goal_atoms()) {
        if (atom_cost[goal] == -1)
            return false;
    }
    return true;
}

int DeleteRelaxationHeuristic::compute_add(span<const int> state) {
    if (!compute_costs(state))
        return INFTY;
    int64_t total = 0;
    for (int goal : relaxed.get_goal_atoms())
        total += atom_cost[goal];
    return static_cast<int>(min<int64_t>(total, INFTY - 1));
}

HeuristicReport DeleteRelaxationHeuristic::compute_ff(span<const int> state) {
    HeuristicReport report;
    if (!compute_costs(state)) {
        report.value = INFTY;
        return report;
    }
    fill(marked_atom.begin(), marked_atom.end(), 0);
    stack.clear();
    for (int goal : relaxed.get_goal_atoms())
        stack.push_back(goal);
    while (!stack.empty()) {
        int atom = stack.back();
        stack.pop_back();
        if (marked_atom[atom])
            continue;
        marked_atom[atom] = 1;
        int relaxed_op = supporter[atom];
        if (relaxed_op == -1)
            continue;
        const RelaxedOperator &op = relaxed.get_operator(relaxed_op);
        in_plan[op.op_id] = 1;
        for (int pre : op.preconditions)
            stack.push_back(pre);
    }
    for (int op_id = 0; op_id < task.num_operators(); ++op_id) {
        if (!in_plan[op_id])
            continue;
        in_plan[op_id] = 0;
        report.relaxed_plan.push_back(op_id);
        bool applicable = true;
        for (const sas::Atom &pre : task.operators[op_id].preconditions) {
            if (state[pre.var] != pre.value) {
                applicable = false;
                break;
            }
        }
        if (applicable)
            report.preferred.push_back(op_id);
    }
    report.value = static_cast<int>(report.relaxed_plan.size());
    return report;
}

int hadd(const sas::Task &task, span<const int> state) {
    DeleteRelaxationHeuristic heuristic(task);
    return heuristic.compute_add(state);
}

HeuristicReport hff(const sas::Task &task, span<const int> state) {
    DeleteRelaxationHeuristic heuristic(task);
    return heuristic.compute_ff(state);
}
}
