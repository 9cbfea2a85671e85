#ifndef PLANNER_SEARCH_STATE_H
#define PLANNER_SEARCH_STATE_H

#include "planner/sas/task.h"
#include "planner/search/state_id.h"

#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace search {
class InapplicableOperator : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class MemoryLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unpacked assignment of one value per variable.
struct State {
    std::vector<int> values;

    int operator[](int var) const {
        return values[var];
    }
    int size() const {
        return static_cast<int>(values.size());
    }
    bool satisfies(const sas::Atom &atom) const {
        return values[atom.var] == atom.value;
    }
    bool satisfies(std::span<const sas::Atom> atoms) const {
        for (const sas::Atom &atom : atoms) {
            if (!satisfies(atom))
                return false;
        }
        return true;
    }

    friend bool operator==(const State &, const State &) = default;
};

State initial_state(const sas::Task &task);
bool is_goal(const sas::Task &task, const State &state);
bool is_applicable(const sas::Operator &op, const State &state);
std::vector<int> applicable_operators(const sas::Task &task, const State &state);
State apply_operator(const sas::Task &task, const State &state, int op_id);

/*
  Tree over precondition variables; visiting it touches only operators whose
  preconditions hold in the state. Results are sorted by operator index.
*/
class SuccessorGenerator {
    struct Node {
        int var = -1;
        std::vector<int> immediate_ops;
        std::vector<int> value_children;
        int dont_care_child = -1;
    };
    std::vector<Node> nodes;
    std::vector<int> stack;

    int build(const sas::Task &task, std::vector<std::pair<int, int>> &ops);
public:
    explicit SuccessorGenerator(const sas::Task &task);

    void generate_applicable_ops(const State &state, std::vector<int> &result);
};

// Packs each variable into a fixed bit field of 64-bit words.
class StatePacker {
    struct Field {
        int word;
        int shift;
        std::uint64_t mask;
    };
    std::vector<Field> fields;
    int words = 0;
public:
    explicit StatePacker(const sas::Task &task);

    int num_words() const {
        return words;
    }
    void pack(const State &state, std::uint64_t *buffer) const;
    State unpack(const std::uint64_t *buffer) const;
    int get(const std::uint64_t *buffer, int var) const {
        const Field &f = fields[var];
        return static_cast<int>((buffer[f.word] >> f.shift) & f.mask);
    }
};

/*
  Interns states. Ids are issued densely from 0 in registration order; the
  registry never forgets a state. Packed states live in fixed-size chunks so
  that growing the registry never copies what is already stored.
*/
class StateRegistry {
    static constexpr int STATES_PER_CHUNK = 4096;

    StatePacker packer;
    std::vector<std::unique_ptr<std::uint64_t[]>> chunks;
    std::vector<int> slots;
    int num_states = 0;
    std::size_t memory_budget;

    std::size_t chunk_bytes() const {
        return std::size_t(STATES_PER_CHUNK) * packer.num_words() * sizeof(std::uint64_t);
    }
    std::size_t chunks_needed(std::size_t states) const {
        return (states + STATES_PER_CHUNK - 1) / STATES_PER_CHUNK;
    }
    std::size_t slots_needed(std::size_t states) const;
    std::uint64_t *slot_for(int id) {
        return chunks[id / STATES_PER_CHUNK].get() +
               std::size_t(id % STATES_PER_CHUNK) * packer.num_words();
    }
    std::uint64_t hash(const std::uint64_t *words) const;
    bool equal(int id, const std::uint64_t *words) const;
    void rehash(std::size_t new_size);
    void grow(std::size_t states);
public:
    explicit StateRegistry(
        const sas::Task &task,
        std::size_t memory_budget = std::numeric_limits<std::size_t>::max());

    std::pair<StateId, bool> insert(const State &state);
    State lookup(StateId id) const;
    const std::uint64_t *packed(StateId id) const {
        int value = id.get_value();
        return chunks[value / STATES_PER_CHUNK].get() +
               std::size_t(value % STATES_PER_CHUNK) * packer.num_words();
    }

    int size() const {
        return num_states;
    }
    std::size_t memory_usage() const;
    // Bytes newly allocated if room for `additional` more states is made.
    std::size_t growth_bytes(int additional) const;
    // Allocates room for `additional` more states up front.
    void reserve(int additional);
    const StatePacker &get_packer() const {
        return packer;
    }
};
}

#endif
