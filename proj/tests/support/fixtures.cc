#include "fixtures.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <sys/wait.h>
#include <unistd.h>

using namespace std;

namespace test_support {
string data_path(const string &name) {
    return string(PLANNER_TEST_DATA_DIR) + "/" + name;
}

string planner_executable() {
    return PLANNER_EXECUTABLE;
}

sas::Task load_fixture(const string &name) {
    return sas::read_sas_file(data_path(name));
}

sas::Task chain_task() {
    return load_fixture("chain.sas");
}

sas::Task pair_task() {
    return load_fixture("pair.sas");
}

const vector<string> &solvable_fixture_files() {
    static const vector<string> files = {"chain.sas", "pair.sas", "logistics_small.sas",
                                         "gripper_small.sas"};
    return files;
}

const vector<string> &all_fixture_files() {
    static const vector<string> files = {"chain.sas", "pair.sas", "logistics_small.sas",
                                         "gripper_small.sas", "chain_unsolvable.sas",
                                         "trap.sas"};
    return files;
}

int operator_index(const sas::Task &task, const string &name) {
    for (int i = 0; i < task.num_operators(); ++i) {
        if (task.operators[i].name == name)
            return i;
    }
    throw invalid_argument("no operator named " + name);
}

static string shell_quote(const string &arg) {
    string quoted = "'";
    for (char c : arg) {
        if (c == '\'')
            quoted += "'\\''";
        else
            quoted += c;
    }
    return quoted + "'";
}

ProcessResult run_planner(const vector<string> &args) {
    string command = shell_quote(planner_executable());
    for (const string &arg : args)
        command += " " + shell_quote(arg);
    command += " 2>&1";
    FILE *pipe = popen(command.c_str(), "r");
    if (!pipe)
        throw runtime_error("popen failed");
    ProcessResult result;
    array<char, 4096> buffer;
    size_t n;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

string read_file(const string &path) {
    ifstream in(path);
    if (!in)
        throw runtime_error("cannot read " + path);
    stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

string temp_path(const string &stem) {
    static int counter = 0;
    const char *tmp = getenv("TMPDIR");
    return string(tmp && *tmp ? tmp : "/tmp") + "/planner-test-" + to_string(getpid()) +
           "-" + to_string(counter++) + "-" + stem;
}
}
