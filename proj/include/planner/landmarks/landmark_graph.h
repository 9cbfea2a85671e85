#ifndef PLANNER_LANDMARKS_LANDMARK_GRAPH_H
#define PLANNER_LANDMARKS_LANDMARK_GRAPH_H

#include "planner/relaxation/relaxed_task.h"
#include "planner/sas/task.h"

#include <string>
#include <utility>
#include <vector>

namespace landmarks {
struct Landmark {
    sas::Atom atom;
    int atom_id = -1;
    bool is_goal = false;
    // Greedy-necessary parents and children, as landmark indices.
    std::vector<int> parents;
    std::vector<int> children;
};

class LandmarkGraph {
    std::vector<Landmark> nodes;
    std::vector<int> landmark_of_atom;
    friend LandmarkGraph generate_landmark_graph(const sas::Task &task);
public:
    int size() const {
        return static_cast<int>(nodes.size());
    }
    const Landmark &get(int id) const {
        return nodes[id];
    }
    const std::vector<Landmark> &get_landmarks() const {
        return nodes;
    }
    // Landmark index of an atom id, or -1.
    int find(int atom_id) const {
        return landmark_of_atom[atom_id];
    }
    std::vector<std::pair<int, int>> orderings() const;
    int num_goal_landmarks() const;
};

/*
  Fact landmarks of the delete relaxation, found by backchaining from the
  goal: the shared preconditions of all first achievers of a landmark are
  landmarks ordered greedy-necessarily before it. Atoms true in the initial
  state are landmarks only when they are goals. Every landmark survives a
  final removal test.
*/
LandmarkGraph generate_landmark_graph(const sas::Task &task);

/*
  True iff the delete relaxation has no plan from the initial state once all
  relaxed achievers of the atom are removed. Atoms true initially pass.
*/
bool passes_removal_test(const sas::Task &task,
                         const relaxation::RelaxedTask &relaxed, int atom_id);

// One landmark per line: "var=val [goal] parents: ...".
std::string dump_landmark_graph(const LandmarkGraph &graph);
}

#endif
