#ifndef TESTS_SUPPORT_FIXTURES_H
#define TESTS_SUPPORT_FIXTURES_H

#include "planner/sas/task.h"

#include <string>
#include <vector>

namespace test_support {
std::string data_path(const std::string &name);
std::string planner_executable();

sas::Task load_fixture(const std::string &name);
sas::Task chain_task();
sas::Task pair_task();

// Fixture file names under the data directory that every config must handle.
const std::vector<std::string> &solvable_fixture_files();
const std::vector<std::string> &all_fixture_files();

int operator_index(const sas::Task &task, const std::string &name);

struct ProcessResult {
    int exit_code = -1;
    std::string output;
};

// Runs the planner binary with the given arguments; stdout and stderr are
// captured together.
ProcessResult run_planner(const std::vector<std::string> &args);

std::string read_file(const std::string &path);
std::string temp_path(const std::string &stem);
}

#endif
