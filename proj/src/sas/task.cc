#include "planner/sas/task.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

using namespace std;

namespace sas {
namespace {
class LineReader {
    istream &in;
    int line_no = 0;
public:
    explicit LineReader(istream &in) : in(in) {}

    [[noreturn]] void fail(const string &msg) const {
        throw SyntaxError("line " + to_string(line_no) + ": " + msg);
    }

    string next_line(const char *what) {
        string line;
        while (getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            return line;
        }
        fail(string("unexpected end of input, expected ") + what);
    }

    void expect(string_view magic) {
        string line = next_line(string(magic).c_str());
        if (line != magic)
            fail("expected '" + string(magic) + "', got '" + line + "'");
    }

    vector<int> read_ints(const char *what) {
        string line = next_line(what);
        vector<int> result;
        const char *pos = line.data();
        const char *end = line.data() + line.size();
        while (true) {
            while (pos != end && (*pos == ' ' || *pos == '\t'))
                ++pos;
            if (pos == end)
                break;
            int value;
            auto [ptr, ec] = from_chars(pos, end, value);
            if (ec != errc() || (ptr != end && *ptr != ' ' && *ptr != '\t'))
                fail(string("malformed integer in ") + what + ": '" + line + "'");
            result.push_back(value);
            pos = ptr;
        }
        if (result.empty())
            fail(string("expected ") + what);
        return result;
    }

    int read_int(const char *what) {
        vector<int> values = read_ints(what);
        if (values.size() != 1)
            fail(string("expected a single integer for ") + what);
        return values.front();
    }

    int read_count(const char *what) {
        int count = read_int(what);
        if (count < 0)
            fail(string("negative ") + what);
        return count;
    }

    bool at_eof() {
        string line;
        while (in.peek() != EOF) {
            getline(in, line);
            ++line_no;
            if (line.find_first_not_of(" \t\r") != string::npos)
                return false;
        }
        return true;
    }
};

void check_atom(const Task &task, const Atom &atom, const char *where) {
    if (atom.var < 0 || atom.var >= task.num_variables())
        throw RangeError(string(where) + ": variable " + to_string(atom.var) +
                         " out of range");
    if (atom.value < 0 || atom.value >= task.variables[atom.var].domain_size)
        throw RangeError(string(where) + ": value " + to_string(atom.value) +
                         " out of domain of variable " + to_string(atom.var));
}

Atom read_pair(LineReader &reader, const Task &task, const char *where) {
    vector<int> values = reader.read_ints(where);
    if (values.size() != 2)
        reader.fail(string("expected 'var value' pair in ") + where);
    Atom atom{values[0], values[1]};
    check_atom(task, atom, where);
    return atom;
}

void add_precondition(map<int, int> &pre, const Atom &atom,
                      const string &op_name) {
    auto [it, inserted] = pre.emplace(atom.var, atom.value);
    if (!inserted && it->second != atom.value)
        throw SyntaxError("operator '" + op_name +
                          "' has conflicting preconditions on variable " +
                          to_string(atom.var));
}

Operator read_operator(LineReader &reader, const Task &task) {
    reader.expect("begin_operator");
    Operator op;
    op.name = reader.next_line("operator name");
    map<int, int> pre;
    int num_prevail = reader.read_count("prevail count");
    for (int i = 0; i < num_prevail; ++i)
        add_precondition(pre, read_pair(reader, task, "prevail condition"), op.name);

    int num_effects = reader.read_count("effect count");
    for (int i = 0; i < num_effects; ++i) {
        vector<int> values = reader.read_ints("effect");
        int num_conds = values[0];
        if (num_conds < 0 || values.size() != static_cast<size_t>(1 + 2 * num_conds + 3))
            reader.fail("malformed effect line in operator '" + op.name + "'");
        Effect eff;
        for (int c = 0; c < num_conds; ++c) {
            Atom cond{values[1 + 2 * c], values[2 + 2 * c]};
            check_atom(task, cond, "effect condition");
            eff.conditions.push_back(cond);
        }
        sort(eff.conditions.begin(), eff.conditions.end());
        int var = values[1 + 2 * num_conds];
        int pre_value = values[2 + 2 * num_conds];
        int post_value = values[3 + 2 * num_conds];
        check_atom(task, {var, post_value}, "effect");
        if (pre_value != -1) {
            check_atom(task, {var, pre_value}, "effect precondition");
            add_precondition(pre, {var, pre_value}, op.name);
        }
        eff.var = var;
        eff.value = post_value;
        op.effects.push_back(move(eff));
    }
    for (const auto &[var, value] : pre)
        op.preconditions.push_back({var, value});
    op.cost = reader.read_int("operator cost");
    if (op.cost < 0)
        throw RangeError("operator '" + op.name + "' has negative cost");
    reader.expect("end_operator");
    return op;
}
}

AtomTable::AtomTable(const Task &task) {
    offsets.reserve(task.variables.size());
    for (int var = 0; var < task.num_variables(); ++var) {
        offsets.push_back(num_atoms);
        num_atoms += task.variables[var].domain_size;
        atom_vars.insert(atom_vars.end(), task.variables[var].domain_size, var);
    }
}

Task parse_sas(istream &in) {
    LineReader reader(in);
    Task task;

    reader.expect("begin_version");
    int version = reader.read_int("version");
    if (version != 3)
        throw UnsupportedFeature("SAS+ format version " + to_string(version) +
                                 " (only version 3 is supported)");
    reader.expect("end_version");

    reader.expect("begin_metric");
    int metric = reader.read_int("metric flag");
    if (metric != 0 && metric != 1)
        reader.fail("metric flag must be 0 or 1");
    task.metric = metric == 1;
    reader.expect("end_metric");

    int num_vars = reader.read_count("variable count");
    for (int i = 0; i < num_vars; ++i) {
        reader.expect("begin_variable");
        Variable var;
        var.name = reader.next_line("variable name");
        int axiom_layer = reader.read_int("axiom layer");
        if (axiom_layer != -1)
            throw UnsupportedFeature("variable '" + var.name +
                                     "' is derived (axiom layer " +
                                     to_string(axiom_layer) + ")");
        var.domain_size = reader.read_int("domain size");
        if (var.domain_size < 1)
            throw RangeError("variable '" + var.name + "' has empty domain");
        for (int v = 0; v < var.domain_size; ++v)
            var.value_names.push_back(reader.next_line("value name"));
        reader.expect("end_variable");
        task.variables.push_back(move(var));
    }

    int num_mutexes = reader.read_count("mutex group count");
    for (int i = 0; i < num_mutexes; ++i) {
        reader.expect("begin_mutex_group");
        int size = reader.read_count("mutex group size");
        vector<Atom> group;
        for (int j = 0; j < size; ++j)
            group.push_back(read_pair(reader, task, "mutex group"));
        reader.expect("end_mutex_group");
        task.mutex_groups.push_back(move(group));
    }

    reader.expect("begin_state");
    for (int var = 0; var < num_vars; ++var) {
        int value = reader.read_int("initial state value");
        check_atom(task, {var, value}, "initial state");
        task.initial_state.push_back(value);
    }
    reader.expect("end_state");

    reader.expect("begin_goal");
    int num_goals = reader.read_count("goal count");
    for (int i = 0; i < num_goals; ++i) {
        Atom goal = read_pair(reader, task, "goal");
        for (const Atom &other : task.goal) {
            if (other.var == goal.var)
                throw SyntaxError("two goal atoms on variable " + to_string(goal.var));
        }
        task.goal.push_back(goal);
    }
    reader.expect("end_goal");

    int num_ops = reader.read_count("operator count");
    for (int i = 0; i < num_ops; ++i)
        task.operators.push_back(read_operator(reader, task));

    int num_axioms = reader.read_count("axiom count");
    if (num_axioms != 0)
        throw UnsupportedFeature("task contains " + to_string(num_axioms) +
                                 " axioms (derived predicates)");
    if (!reader.at_eof())
        reader.fail("trailing content after axiom section");
    return task;
}

Task parse_sas(string_view text) {
    istringstream in{string(text)};
    return parse_sas(in);
}

Task read_sas_file(const string &path) {
    ifstream in(path);
    if (!in)
        throw InputError("cannot open task file '" + path + "'");
    return parse_sas(in);
}

string write_sas(const Task &task) {
    ostringstream out;
    out << "begin_version\n3\nend_version\n";
    out << "begin_metric\n" << (task.metric ? 1 : 0) << "\nend_metric\n";
    out << task.variables.size() << "\n";
    for (const Variable &var : task.variables) {
        out << "begin_variable\n" << var.name << "\n-1\n" << var.domain_size << "\n";
        for (const string &name : var.value_names)
            out << name << "\n";
        out << "end_variable\n";
    }
    out << task.mutex_groups.size() << "\n";
    for (const auto &group : task.mutex_groups) {
        out << "begin_mutex_group\n" << group.size() << "\n";
        for (const Atom &atom : group)
            out << atom.var << " " << atom.value << "\n";
        out << "end_mutex_group\n";
    }
    out << "begin_state\n";
    for (int value : task.initial_state)
        out << value << "\n";
    out << "end_state\n";
    out << "begin_goal\n" << task.goal.size() << "\n";
    for (const Atom &atom : task.goal)
        out << atom.var << " " << atom.value << "\n";
    out << "end_goal\n";
    out << task.operators.size() << "\n";
    for (const Operator &op : task.operators) {
        out << "begin_operator\n" << op.name << "\n";
        // Preconditions on affected variables travel in the effect lines.
        auto affects = [&op](int var) {
            for (const Effect &eff : op.effects) {
                if (eff.var == var)
                    return true;
            }
            return false;
        };
        vector<Atom> prevail;
        for (const Atom &pre : op.preconditions) {
            if (!affects(pre.var))
                prevail.push_back(pre);
        }
        out << prevail.size() << "\n";
        for (const Atom &atom : prevail)
            out << atom.var << " " << atom.value << "\n";
        out << op.effects.size() << "\n";
        for (const Effect &eff : op.effects) {
            int pre_value = -1;
            for (const Atom &pre : op.preconditions) {
                if (pre.var == eff.var)
                    pre_value = pre.value;
            }
            out << eff.conditions.size();
            for (const Atom &cond : eff.conditions)
                out << " " << cond.var << " " << cond.value;
            out << " " << eff.var << " " << pre_value << " " << eff.value << "\n";
        }
        out << op.cost << "\nend_operator\n";
    }
    out << "0\n";
    return out.str();
}

string atom_to_string(const Task &task, const Atom &atom) {
    return task.variables[atom.var].name + "=" + to_string(atom.value);
}
}
