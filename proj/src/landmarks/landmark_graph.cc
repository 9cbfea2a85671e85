#include "planner/landmarks/landmark_graph.h"

#include <algorithm>
#include <deque>
#include <sstream>

using namespace std;

namespace landmarks {
namespace {
vector<int> intersect_sorted(const vector<int> &a, const vector<int> &b) {
    vector<int> result;
    set_intersection(a.begin(), a.end(), b.begin(), b.end(), back_inserter(result));
    return result;
}

vector<bool> forbid_achievers(const relaxation::RelaxedTask &relaxed, int atom_id) {
    vector<bool> forbidden(relaxed.num_operators(), false);
    for (int id : relaxed.get_achievers(atom_id))
        forbidden[id] = true;
    return forbidden;
}
}

vector<pair<int, int>> LandmarkGraph::orderings() const {
    vector<pair<int, int>> result;
    for (int id = 0; id < size(); ++id) {
        for (int child : nodes[id].children)
            result.emplace_back(id, child);
    }
    return result;
}

int LandmarkGraph::num_goal_landmarks() const {
    return static_cast<int>(count_if(nodes.begin(), nodes.end(),
                                     [](const Landmark &lm) {return lm.is_goal;}));
}

bool passes_removal_test(const sas::Task &task,
                         const relaxation::RelaxedTask &relaxed, int atom_id) {
    sas::Atom atom = relaxed.get_atoms().atom(atom_id);
    if (task.initial_state[atom.var] == atom.value)
        return true;
    vector<bool> forbidden = forbid_achievers(relaxed, atom_id);
    vector<int> init_atoms = relaxed.state_atoms(task.initial_state);
    vector<bool> reached = relaxation::relaxed_reachable(relaxed, init_atoms, &forbidden);
    for (int goal : relaxed.get_goal_atoms()) {
        if (!reached[goal])
            return true;
    }
    return false;
}

LandmarkGraph generate_landmark_graph(const sas::Task &task) {
    relaxation::RelaxedTask relaxed(task);
    const sas::AtomTable &atoms = relaxed.get_atoms();
    vector<int> init_atoms = relaxed.state_atoms(task.initial_state);
    vector<bool> initially_true(atoms.size(), false);
    for (int atom : init_atoms)
        initially_true[atom] = true;

    vector<Landmark> found;
    vector<int> index_of(atoms.size(), -1);
    deque<int> open;
    auto add_landmark = [&](int atom_id, bool is_goal) {
        Landmark lm;
        lm.atom = atoms.atom(atom_id);
        lm.atom_id = atom_id;
        lm.is_goal = is_goal;
        index_of[atom_id] = static_cast<int>(found.size());
        found.push_back(move(lm));
        open.push_back(atom_id);
    };
    for (int goal : relaxed.get_goal_atoms())
        add_landmark(goal, true);

    while (!open.empty()) {
        int atom_id = open.front();
        open.pop_front();
        if (initially_true[atom_id])
            continue;
        vector<bool> forbidden = forbid_achievers(relaxed, atom_id);
        vector<bool> reached = relaxation::relaxed_reachable(relaxed, init_atoms, &forbidden);
        bool first = true;
        vector<int> shared;
        for (int id : relaxed.get_achievers(atom_id)) {
            const auto &pre = relaxed.get_operator(id).preconditions;
            if (!all_of(pre.begin(), pre.end(), [&](int p) {return reached[p];}))
                continue;
            shared = first ? pre : intersect_sorted(shared, pre);
            first = false;
        }
        for (int pre : shared) {
            if (pre == atom_id)
                continue;
            if (index_of[pre] == -1) {
                if (initially_true[pre])
                    continue;
                add_landmark(pre, false);
            }
            Landmark &parent = found[index_of[pre]];
            Landmark &child = found[index_of[atom_id]];
            if (find(child.parents.begin(), child.parents.end(), index_of[pre]) ==
                child.parents.end()) {
                child.parents.push_back(index_of[pre]);
                parent.children.push_back(index_of[atom_id]);
            }
        }
    }

    vector<int> remap(found.size(), -1);
    LandmarkGraph graph;
    graph.landmark_of_atom.assign(atoms.size(), -1);
    for (size_t i = 0; i < found.size(); ++i) {
        if (passes_removal_test(task, relaxed, found[i].atom_id)) {
            remap[i] = graph.size();
            graph.landmark_of_atom[found[i].atom_id] = graph.size();
            graph.nodes.push_back(found[i]);
        }
    }
    for (Landmark &lm : graph.nodes) {
        auto translate = [&remap](vector<int> &ids) {
            vector<int> kept;
            for (int id : ids) {
                if (remap[id] != -1)
                    kept.push_back(remap[id]);
            }
            sort(kept.begin(), kept.end());
            ids = move(kept);
        };
        translate(lm.parents);
        translate(lm.children);
    }
    return graph;
}

string dump_landmark_graph(const LandmarkGraph &graph) {
    ostringstream out;
    for (const Landmark &lm : graph.get_landmarks()) {
        out << lm.atom.var << "=" << lm.atom.value;
        if (lm.is_goal)
            out << " goal";
        out << " parents:";
        for (int parent : lm.parents) {
            const sas::Atom &atom = graph.get(parent).atom;
            out << " " << atom.var << "=" << atom.value;
        }
        out << "\n";
    }
    return out.str();
}
}
