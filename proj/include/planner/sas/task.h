#ifndef PLANNER_SAS_TASK_H
#define PLANNER_SAS_TASK_H

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sas {
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SyntaxError : public InputError {
public:
    using InputError::InputError;
};

class UnsupportedFeature : public InputError {
public:
    using InputError::InputError;
};

class RangeError : public InputError {
public:
    using InputError::InputError;
};

struct Atom {
    int var = 0;
    int value = 0;

    friend auto operator<=>(const Atom &, const Atom &) = default;
};

struct Variable {
    std::string name;
    int domain_size = 0;
    std::vector<std::string> value_names;

    friend bool operator==(const Variable &, const Variable &) = default;
};

struct Effect {
    std::vector<Atom> conditions;
    int var = 0;
    int value = 0;

    friend bool operator==(const Effect &, const Effect &) = default;
};

/*
  Preconditions are the union of the prevail conditions and the "pre" values
  of the effect lines, sorted by variable, at most one per variable.
*/
struct Operator {
    std::string name;
    std::vector<Atom> preconditions;
    std::vector<Effect> effects;
    int cost = 1;

    friend bool operator==(const Operator &, const Operator &) = default;
};

struct Task {
    std::vector<Variable> variables;
    std::vector<Operator> operators;
    std::vector<int> initial_state;
    std::vector<Atom> goal;
    bool metric = false;
    // Retained for format completeness; search never reads them.
    std::vector<std::vector<Atom>> mutex_groups;

    int num_variables() const {
        return static_cast<int>(variables.size());
    }
    int num_operators() const {
        return static_cast<int>(operators.size());
    }

    friend bool operator==(const Task &, const Task &) = default;
};

// Dense numbering of all (var, value) pairs in variable order.
class AtomTable {
    std::vector<int> offsets;
    std::vector<int> atom_vars;
    int num_atoms = 0;
public:
    explicit AtomTable(const Task &task);

    int id(int var, int value) const {
        return offsets[var] + value;
    }
    int id(const Atom &atom) const {
        return id(atom.var, atom.value);
    }
    Atom atom(int id) const {
        int var = atom_vars[id];
        return {var, id - offsets[var]};
    }
    int first_id(int var) const {
        return offsets[var];
    }
    int size() const {
        return num_atoms;
    }
};

Task parse_sas(std::istream &in);
Task parse_sas(std::string_view text);
Task read_sas_file(const std::string &path);

std::string write_sas(const Task &task);

std::string atom_to_string(const Task &task, const Atom &atom);
}

#endif
