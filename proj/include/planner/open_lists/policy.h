#ifndef PLANNER_OPEN_LISTS_POLICY_H
#define PLANNER_OPEN_LISTS_POLICY_H

#include <string>
#include <vector>

namespace open_lists {
enum class Heuristic {
    FF,
    LANDMARK_COUNT,
};

/*
  One component of a sublist's lexicographic key. Novelty components carry
  their partition (possibly empty); NOT_PREFERRED enters as 1 - pref so that
  states reached by preferred operators sort first.
*/
struct KeyComponent {
    enum class Kind {
        HEURISTIC,
        NOVELTY,
        NOT_PREFERRED,
        G,
    };
    Kind kind = Kind::HEURISTIC;
    Heuristic heuristic = Heuristic::FF;
    std::vector<Heuristic> partition;

    static KeyComponent heuristic_value(Heuristic h) {
        return {Kind::HEURISTIC, h, {}};
    }
    static KeyComponent novelty(std::vector<Heuristic> partition) {
        return {Kind::NOVELTY, Heuristic::FF, std::move(partition)};
    }
    static KeyComponent not_preferred() {
        return {Kind::NOT_PREFERRED, Heuristic::FF, {}};
    }
    static KeyComponent g() {
        return {Kind::G, Heuristic::FF, {}};
    }

    friend bool operator==(const KeyComponent &, const KeyComponent &) = default;
};

enum class Admission {
    ALL,
    PREFERRED_ONLY,
};

struct SublistSpec {
    std::string label;
    std::vector<KeyComponent> key;
    Admission admission = Admission::ALL;

    friend bool operator==(const SublistSpec &, const SublistSpec &) = default;
};

/*
  Declarative open-list structure. A policy with one sublist is a plain
  tiebreaking list; with several it alternates between them and boosts the
  preferred-only sublists on progress.
*/
struct PolicySpec {
    std::string name;
    std::vector<SublistSpec> sublists;
    int boost_amount = 1000;

    bool is_alternation() const {
        return sublists.size() > 1;
    }
    bool uses_heuristic(Heuristic h) const;
    bool uses_preferred() const;
    // Distinct novelty partitions in order of first appearance.
    std::vector<std::vector<Heuristic>> novelty_partitions() const;

    friend bool operator==(const PolicySpec &, const PolicySpec &) = default;
};

std::string heuristic_name(Heuristic h);
std::string describe_component(const KeyComponent &component);
// Stable multi-line rendering used by --dump-policy.
std::string dump_policy(const PolicySpec &spec);
}

#endif
