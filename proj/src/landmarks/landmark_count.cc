#include "planner/landmarks/landmark_count.h"

#include <algorithm>
#include <bit>

using namespace std;

namespace landmarks {
namespace {
bool test_bit(ConstStatusWords words, int id) {
    return (words[id / 64] >> (id % 64)) & 1;
}

void set_bit(StatusWords words, int id) {
    words[id / 64] |= uint64_t(1) << (id % 64);
}
}

LandmarkCountHeuristic::LandmarkCountHeuristic(const sas::Task &task,
                                               const LandmarkGraph &graph)
    : task(task),
      graph(graph),
      landmark_effects(task.num_operators()),
      num_words((graph.size() + 63) / 64) {
    sas::AtomTable atoms(task);
    for (int op_id = 0; op_id < task.num_operators(); ++op_id) {
        for (const sas::Effect &eff : task.operators[op_id].effects) {
            int id = graph.find(atoms.id(eff.var, eff.value));
            if (id != -1)
                landmark_effects[op_id].push_back({id, &eff.conditions});
        }
    }
}

bool LandmarkCountHeuristic::parents_reached(const Landmark &lm,
                                             ConstStatusWords status) const {
    return all_of(lm.parents.begin(), lm.parents.end(),
                  [&](int parent) {return test_bit(status, parent);});
}

void LandmarkCountHeuristic::compute_root_status(span<const int> state,
                                                 StatusWords out) const {
    vector<uint64_t> empty(num_words, 0);
    progress(empty, state, out);
}

void LandmarkCountHeuristic::progress(ConstStatusWords parent, span<const int> state,
                                      StatusWords out) const {
    // Parent conditions are checked against the parent status, so copy last.
    vector<int> newly_reached;
    for (int id = 0; id < graph.size(); ++id) {
        if (test_bit(parent, id))
            continue;
        const Landmark &lm = graph.get(id);
        if (holds(lm, state) && parents_reached(lm, parent))
            newly_reached.push_back(id);
    }
    copy(parent.begin(), parent.end(), out.begin());
    for (int id : newly_reached)
        set_bit(out, id);
}

bool LandmarkCountHeuristic::is_accepted(ConstStatusWords status,
                                         span<const int> state, int id) const {
    if (!test_bit(status, id))
        return false;
    const Landmark &lm = graph.get(id);
    return !lm.is_goal || holds(lm, state);
}

int LandmarkCountHeuristic::value(ConstStatusWords status, span<const int> state) const {
    int accepted = 0;
    for (int id = 0; id < graph.size(); ++id) {
        if (is_accepted(status, state, id))
            ++accepted;
    }
    return graph.size() - accepted;
}

vector<int> LandmarkCountHeuristic::preferred_operators(ConstStatusWords status,
                                                        span<const int> state) const {
    vector<int> result;
    for (int op_id = 0; op_id < task.num_operators(); ++op_id) {
        if (landmark_effects[op_id].empty())
            continue;
        const sas::Operator &op = task.operators[op_id];
        bool applicable = all_of(op.preconditions.begin(), op.preconditions.end(),
                                 [&](const sas::Atom &pre) {return state[pre.var] == pre.value;});
        if (!applicable)
            continue;
        for (const LandmarkEffect &eff : landmark_effects[op_id]) {
            bool fires = all_of(eff.conditions->begin(), eff.conditions->end(),
                                [&](const sas::Atom &c) {return state[c.var] == c.value;});
            if (fires && !is_accepted(status, state, eff.landmark) &&
                parents_reached(graph.get(eff.landmark), status)) {
                result.push_back(op_id);
                break;
            }
        }
    }
    return result;
}

LandmarkStatus LandmarkCountHeuristic::root_status(span<const int> state) const {
    LandmarkStatus status(graph.size());
    compute_root_status(state, status.data());
    return status;
}

LandmarkCountResult hlm(const LandmarkCountHeuristic &heuristic,
                        const LandmarkStatus &parent_status,
                        span<const int> state) {
    LandmarkStatus status(heuristic.get_graph().size());
    heuristic.progress(parent_status.data(), state, status.data());
    int value = heuristic.value(status.data(), state);
    return {value, move(status)};
}
}
