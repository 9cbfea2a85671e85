#ifndef PLANNER_LANDMARKS_LANDMARK_COUNT_H
#define PLANNER_LANDMARKS_LANDMARK_COUNT_H

#include "planner/landmarks/landmark_graph.h"

#include <cstdint>
#include <span>
#include <vector>

namespace landmarks {
using StatusWords = std::span<std::uint64_t>;
using ConstStatusWords = std::span<const std::uint64_t>;

/*
  Bit set of landmarks reached along the path to a state. It only grows
  from parent to child. Goal landmarks that are reached but false in the
  current state are required again: they count as unaccepted for both the
  heuristic value and landmark preferred operators.
*/
class LandmarkStatus {
    std::vector<std::uint64_t> words;
public:
    LandmarkStatus() = default;
    explicit LandmarkStatus(int num_landmarks)
        : words((num_landmarks + 63) / 64, 0) {}

    bool is_reached(int id) const {
        return (words[id / 64] >> (id % 64)) & 1;
    }
    StatusWords data() {
        return words;
    }
    ConstStatusWords data() const {
        return words;
    }

    friend bool operator==(const LandmarkStatus &, const LandmarkStatus &) = default;
};

class LandmarkCountHeuristic {
    const sas::Task &task;
    const LandmarkGraph &graph;
    struct LandmarkEffect {
        int landmark;
        const std::vector<sas::Atom> *conditions;
    };
    std::vector<std::vector<LandmarkEffect>> landmark_effects;
    int num_words;

    bool holds(const Landmark &lm, std::span<const int> state) const {
        return state[lm.atom.var] == lm.atom.value;
    }
    bool parents_reached(const Landmark &lm, ConstStatusWords status) const;
public:
    LandmarkCountHeuristic(const sas::Task &task, const LandmarkGraph &graph);

    int words_per_status() const {
        return num_words;
    }
    const LandmarkGraph &get_graph() const {
        return graph;
    }

    void compute_root_status(std::span<const int> state, StatusWords out) const;
    void progress(ConstStatusWords parent, std::span<const int> state,
                  StatusWords out) const;
    bool is_accepted(ConstStatusWords status, std::span<const int> state, int id) const;
    int value(ConstStatusWords status, std::span<const int> state) const;
    // Applicable operators achieving an unaccepted landmark whose parents
    // are all reached. Ascending operator index.
    std::vector<int> preferred_operators(ConstStatusWords status,
                                         std::span<const int> state) const;

    LandmarkStatus root_status(std::span<const int> state) const;
};

struct LandmarkCountResult {
    int value;
    LandmarkStatus status;
};

LandmarkCountResult hlm(const LandmarkCountHeuristic &heuristic,
                        const LandmarkStatus &parent_status,
                        std::span<const int> state);
}

#endif
