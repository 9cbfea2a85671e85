#include "planner/search/state.h"

#include <algorithm>
#include <bit>
#include <climits>
#include <string>

using namespace std;

namespace search {
State initial_state(const sas::Task &task) {
    return State{task.initial_state};
}

bool is_goal(const sas::Task &task, const State &state) {
    return state.satisfies(task.goal);
}

bool is_applicable(const sas::Operator &op, const State &state) {
    return state.satisfies(op.preconditions);
}

vector<int> applicable_operators(const sas::Task &task, const State &state) {
    vector<int> result;
    for (int op_id = 0; op_id < task.num_operators(); ++op_id) {
        if (is_applicable(task.operators[op_id], state))
            result.push_back(op_id);
    }
    return result;
}

State apply_operator(const sas::Task &task, const State &state, int op_id) {
    const sas::Operator &op = task.operators.at(op_id);
    if (!is_applicable(op, state))
        throw InapplicableOperator("operator '" + op.name + "' is not applicable");
    State result = state;
    // Effect conditions are evaluated on the predecessor.
    for (const sas::Effect &eff : op.effects) {
        if (state.satisfies(eff.conditions))
            result.values[eff.var] = eff.value;
    }
    return result;
}

SuccessorGenerator::SuccessorGenerator(const sas::Task &task) {
    vector<pair<int, int>> ops;
    for (int op_id = 0; op_id < task.num_operators(); ++op_id)
        ops.emplace_back(op_id, 0);
    build(task, ops);
}

int SuccessorGenerator::build(const sas::Task &task, vector<pair<int, int>> &ops) {
    int index = static_cast<int>(nodes.size());
    nodes.emplace_back();
    int split_var = INT_MAX;
    vector<int> immediate;
    for (const auto &[op_id, cursor] : ops) {
        const auto &pre = task.operators[op_id].preconditions;
        if (cursor == static_cast<int>(pre.size()))
            immediate.push_back(op_id);
        else
            split_var = min(split_var, pre[cursor].var);
    }
    nodes[index].immediate_ops = move(immediate);
    if (split_var == INT_MAX)
        return index;

    int domain_size = task.variables[split_var].domain_size;
    vector<vector<pair<int, int>>> by_value(domain_size);
    vector<pair<int, int>> dont_care;
    for (const auto &[op_id, cursor] : ops) {
        const auto &pre = task.operators[op_id].preconditions;
        if (cursor == static_cast<int>(pre.size()))
            continue;
        if (pre[cursor].var == split_var)
            by_value[pre[cursor].value].emplace_back(op_id, cursor + 1);
        else
            dont_care.emplace_back(op_id, cursor);
    }
    vector<int> children(domain_size, -1);
    for (int value = 0; value < domain_size; ++value) {
        if (!by_value[value].empty())
            children[value] = build(task, by_value[value]);
    }
    int dont_care_child = dont_care.empty() ? -1 : build(task, dont_care);
    nodes[index].var = split_var;
    nodes[index].value_children = move(children);
    nodes[index].dont_care_child = dont_care_child;
    return index;
}

void SuccessorGenerator::generate_applicable_ops(const State &state,
                                                 vector<int> &result) {
    result.clear();
    stack.clear();
    stack.push_back(0);
    while (!stack.empty()) {
        const Node &node = nodes[stack.back()];
        stack.pop_back();
        result.insert(result.end(), node.immediate_ops.begin(), node.immediate_ops.end());
        if (node.var == -1)
            continue;
        int child = node.value_children[state[node.var]];
        if (child != -1)
            stack.push_back(child);
        if (node.dont_care_child != -1)
            stack.push_back(node.dont_care_child);
    }
    sort(result.begin(), result.end());
}

StatePacker::StatePacker(const sas::Task &task) {
    int word = 0;
    int used = 0;
    for (const sas::Variable &var : task.variables) {
        int bits = max(1, static_cast<int>(bit_width(static_cast<unsigned>(var.domain_size - 1))));
        if (used + bits > 64) {
            ++word;
            used = 0;
        }
        uint64_t mask = bits == 64 ? ~uint64_t(0) : (uint64_t(1) << bits) - 1;
        fields.push_back({word, used, mask});
        used += bits;
    }
    words = task.variables.empty() ? 1 : word + 1;
}

void StatePacker::pack(const State &state, uint64_t *buffer) const {
    fill(buffer, buffer + words, 0);
    for (size_t var = 0; var < fields.size(); ++var) {
        const Field &f = fields[var];
        buffer[f.word] |= static_cast<uint64_t>(state.values[var]) << f.shift;
    }
}

State StatePacker::unpack(const uint64_t *buffer) const {
    State state;
    state.values.resize(fields.size());
    for (size_t var = 0; var < fields.size(); ++var)
        state.values[var] = get(buffer, static_cast<int>(var));
    return state;
}

StateRegistry::StateRegistry(const sas::Task &task, size_t memory_budget)
    : packer(task), slots(1024, -1), memory_budget(memory_budget) {
}

uint64_t StateRegistry::hash(const uint64_t *words) const {
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (int i = 0; i < packer.num_words(); ++i) {
        uint64_t x = words[i] + 0x9e3779b97f4a7c15ULL * (i + 1);
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        x ^= x >> 31;
        h = (h ^ x) * 0x100000001b3ULL;
    }
    return h ^ (h >> 29);
}

bool StateRegistry::equal(int id, const uint64_t *words) const {
    const uint64_t *stored = packed(StateId(id));
    return std::equal(stored, stored + packer.num_words(), words);
}

void StateRegistry::rehash(size_t new_size) {
    vector<int> new_slots(new_size, -1);
    size_t mask = new_size - 1;
    for (int id = 0; id < num_states; ++id) {
        size_t pos = hash(packed(StateId(id))) & mask;
        while (new_slots[pos] != -1)
            pos = (pos + 1) & mask;
        new_slots[pos] = id;
    }
    slots.swap(new_slots);
}

size_t StateRegistry::slots_needed(size_t states) const {
    size_t size = slots.size();
    while (states * 2 > size)
        size *= 2;
    return size;
}

size_t StateRegistry::growth_bytes(int additional) const {
    size_t states = static_cast<size_t>(num_states) + additional;
    size_t bytes = 0;
    if (chunks_needed(states) > chunks.size())
        bytes += (chunks_needed(states) - chunks.size()) * chunk_bytes();
    size_t new_slots = slots_needed(states);
    if (new_slots != slots.size())
        bytes += new_slots * sizeof(int);
    return bytes;
}

void StateRegistry::grow(size_t states) {
    size_t projected = memory_usage() + growth_bytes(static_cast<int>(states - num_states));
    if (projected > memory_budget)
        throw MemoryLimitExceeded("state registry exceeds memory budget");
    while (chunks.size() < chunks_needed(states))
        chunks.push_back(make_unique<uint64_t[]>(STATES_PER_CHUNK * packer.num_words()));
    size_t new_slots = slots_needed(states);
    if (new_slots != slots.size())
        rehash(new_slots);
}

void StateRegistry::reserve(int additional) {
    grow(static_cast<size_t>(num_states) + additional);
}

pair<StateId, bool> StateRegistry::insert(const State &state) {
    // Room for the candidate and, if it is new, its hash slot.
    grow(static_cast<size_t>(num_states) + 1);
    uint64_t *candidate = slot_for(num_states);
    packer.pack(state, candidate);

    size_t mask = slots.size() - 1;
    size_t pos = hash(candidate) & mask;
    while (slots[pos] != -1) {
        if (equal(slots[pos], candidate))
            return {StateId(slots[pos]), false};
        pos = (pos + 1) & mask;
    }
    slots[pos] = num_states;
    return {StateId(num_states++), true};
}

State StateRegistry::lookup(StateId id) const {
    if (id.get_value() < 0 || id.get_value() >= num_states)
        throw out_of_range("unknown state id " + to_string(id.get_value()));
    return packer.unpack(packed(id));
}

size_t StateRegistry::memory_usage() const {
    return chunks.size() * chunk_bytes() + chunks.capacity() * sizeof(chunks[0]) +
           slots.capacity() * sizeof(int);
}
}
