#include "fixtures.h"

#include "planner/configs/configs.h"
#include "planner/configs/plan_command.h"
#include "planner/search/lazy_search.h"

#include <doctest.h>

#include <set>
#include <sstream>

using namespace std;
using namespace test_support;
using open_lists::Admission;
using open_lists::Heuristic;
using open_lists::KeyComponent;

namespace {
vector<string> describe_key(const open_lists::SublistSpec &sublist) {
    vector<string> parts;
    for (const KeyComponent &component : sublist.key)
        parts.push_back(open_lists::describe_component(component));
    return parts;
}

map<string, string> deterministic_stats(const string &file, const string &config) {
    configs::PlanArguments args;
    args.task_path = data_path(file);
    args.config = config;
    search::SearchResult result =
        search::lazy_gbfs(load_fixture(file), configs::build_config(config), args.options);
    ostringstream out;
    configs::write_statistics(out, args, result);
    istringstream in(out.str());
    map<string, string> stats = configs::read_statistics(in);
    stats.erase("runtime_s");
    stats.erase("peak_rss_kb");
    return stats;
}
}

TEST_SUITE("configs") {
TEST_CASE("lama") {
    open_lists::PolicySpec spec = configs::build_config("lama");
    REQUIRE(spec.sublists.size() == 4);
    CHECK(spec.is_alternation());
    CHECK(spec.boost_amount == 1000);
    CHECK(describe_key(spec.sublists[0]) == vector<string>{"h_ff"});
    CHECK(describe_key(spec.sublists[1]) == vector<string>{"h_ff"});
    CHECK(describe_key(spec.sublists[2]) == vector<string>{"h_lm"});
    CHECK(describe_key(spec.sublists[3]) == vector<string>{"h_lm"});
    CHECK(spec.sublists[0].admission == Admission::ALL);
    CHECK(spec.sublists[1].admission == Admission::PREFERRED_ONLY);
    CHECK(spec.sublists[2].admission == Admission::ALL);
    CHECK(spec.sublists[3].admission == Admission::PREFERRED_ONLY);
}

TEST_CASE("nolan") {
    open_lists::PolicySpec spec = configs::build_config("nolan");
    REQUIRE(spec.sublists.size() == 4);
    CHECK(spec.is_alternation());
    CHECK(describe_key(spec.sublists[2]) == vector<string>{"h_lm"});
    CHECK(spec.sublists[2].admission == Admission::PREFERRED_ONLY);
    CHECK(describe_key(spec.sublists[3]) == vector<string>{"w<h_lm>", "h_lm", "g"});
    CHECK(spec.sublists[3].admission == Admission::ALL);
}

TEST_CASE("bfws variants are single lists") {
    open_lists::PolicySpec f6 = configs::build_config("bfws-f6");
    REQUIRE(f6.sublists.size() == 1);
    CHECK_FALSE(f6.is_alternation());
    CHECK(describe_key(f6.sublists[0]) ==
          vector<string>{"w<h_lm,h_ff>", "1-pref", "h_lm", "w<h_ff>", "h_ff", "g"});
    CHECK(describe_key(configs::build_config("bfws-f4").sublists[0]) ==
          vector<string>{"w<h_lm,h_ff>", "h_lm", "h_ff", "g"});
    CHECK(describe_key(configs::build_config("bfws-f2").sublists[0]) ==
          vector<string>{"w<h_ff>", "h_ff", "g"});
}

TEST_CASE("lama-w variants append one list to lama") {
    map<string, vector<string>> extra = {
        {"lama-w-f6", {"w<h_lm,h_ff>", "1-pref", "h_lm", "w<h_ff>", "h_ff", "g"}},
        {"lama-w-f4", {"w<h_lm,h_ff>", "h_lm", "h_ff", "g"}},
        {"lama-w-f2-ff", {"w<h_ff>", "h_ff", "g"}},
        {"lama-w-f2-lm", {"w<h_lm>", "h_lm", "g"}},
        {"lama-w-wff", {"w<h_ff>", "g"}},
        {"lama-w-wlm", {"w<h_lm>", "g"}},
        {"lama-w-w", {"w<>", "g"}},
    };
    open_lists::PolicySpec lama = configs::build_config("lama");
    for (const auto &[name, key] : extra) {
        CAPTURE(name);
        open_lists::PolicySpec spec = configs::build_config(name);
        REQUIRE(spec.sublists.size() == 5);
        for (int i = 0; i < 4; ++i) {
            CHECK(describe_key(spec.sublists[i]) == describe_key(lama.sublists[i]));
            CHECK(spec.sublists[i].admission == lama.sublists[i].admission);
        }
        CHECK(describe_key(spec.sublists[4]) == key);
        CHECK(spec.sublists[4].admission == Admission::ALL);
        CHECK(spec.boost_amount == 1000);
    }
}

TEST_CASE("every named config builds") {
    CHECK(configs::named_configs().size() == 12);
    for (const string &name : configs::named_configs()) {
        open_lists::PolicySpec spec = configs::build_config(name);
        CHECK(spec.name == name);
        CHECK_FALSE(spec.sublists.empty());
        CHECK(spec.is_alternation() == (spec.sublists.size() > 1));
    }
}

TEST_CASE("unknown configs") {
    CHECK_THROWS_AS(configs::build_config("bogus"), configs::UnknownConfig);
    CHECK_THROWS_AS(configs::build_config("ablation:ff,xx"), configs::UnknownConfig);
    CHECK_THROWS_AS(configs::build_config("ablation:ff,ff"), configs::UnknownConfig);
    CHECK_THROWS_AS(configs::build_config("ablation:ff,"), configs::UnknownConfig);
}

TEST_CASE("ablation grammar") {
    vector<string> names = configs::ablation_configs();
    CHECK(names.size() == 16);
    CHECK(set<string>(names.begin(), names.end()).size() == 16);
    for (const string &name : names) {
        CAPTURE(name);
        open_lists::PolicySpec spec = configs::build_config(name);
        const open_lists::SublistSpec &last = spec.sublists.back();
        CHECK(describe_key(last) == vector<string>{"w<h_lm>", "h_lm", "g"});
        CHECK(last.admission == Admission::ALL);
    }
    open_lists::PolicySpec nolan_like = configs::build_config("ablation:lm+,ff,ff+");
    open_lists::PolicySpec nolan = configs::build_config("nolan");
    REQUIRE(nolan_like.sublists.size() == nolan.sublists.size());
    for (size_t i = 0; i < nolan.sublists.size(); ++i)
        CHECK(describe_key(nolan_like.sublists[i]) == describe_key(nolan.sublists[i]));
    open_lists::PolicySpec only_f2 = configs::build_config("ablation:");
    CHECK(only_f2.sublists.size() == 1);
    CHECK_FALSE(only_f2.is_alternation());
}

TEST_CASE("policy dumps match the golden texts") {
    for (string name : {"lama", "bfws-f6", "nolan"}) {
        CAPTURE(name);
        CHECK(open_lists::dump_policy(configs::build_config(name)) ==
              read_file(data_path("golden/policy_" + name + ".txt")));
    }
}

TEST_CASE("statistics are reproducible") {
    for (const string &file : all_fixture_files()) {
        for (const string &config : configs::named_configs()) {
            CAPTURE(file);
            CAPTURE(config);
            CHECK(deterministic_stats(file, config) == deterministic_stats(file, config));
        }
    }
}

TEST_CASE("exit codes") {
    CHECK(configs::exit_code_for(search::Outcome::SOLVED) == 0);
    CHECK(configs::exit_code_for(search::Outcome::UNSOLVABLE_UNDER_RELAXATION) == 1);
    CHECK(configs::exit_code_for(search::Outcome::EXHAUSTED) == 1);
    CHECK(configs::exit_code_for(search::Outcome::TIME_LIMIT) == 2);
    CHECK(configs::exit_code_for(search::Outcome::MEMORY_LIMIT) == 2);
    CHECK(configs::exit_code_for(search::Outcome::EXPANSION_LIMIT) == 2);
}
}

TEST_SUITE("cli") {
TEST_CASE("plan chain with nolan") {
    string plan_file = temp_path("plan.txt");
    string stats_file = temp_path("stats.txt");
    ProcessResult result = run_planner({"plan", data_path("chain.sas"), "--config", "nolan",
                                        "--plan-file", plan_file, "--stats-file", stats_file});
    CHECK(result.exit_code == 0);
    string plan = read_file(plan_file);
    CHECK(plan == "(o01)\n(o12)\n; cost = 2 (unit cost)\n");
    istringstream stats_in(read_file(stats_file));
    map<string, string> stats = configs::read_statistics(stats_in);
    CHECK(stats["outcome"] == "solved");
    CHECK(stats["expansions"] == "2");
    CHECK(stats["plan_length"] == "2");
    CHECK(stats["config"] == "nolan");
    remove(plan_file.c_str());
    remove(stats_file.c_str());
}

TEST_CASE("unknown config exits with 3") {
    ProcessResult result = run_planner({"plan", data_path("chain.sas"), "--config", "bogus"});
    CHECK(result.exit_code == 3);
    CHECK(result.output.find("UnknownConfig") != string::npos);
}

TEST_CASE("unsolvable chain exits with 1") {
    ProcessResult result =
        run_planner({"plan", data_path("chain_unsolvable.sas"), "--config", "lama"});
    CHECK(result.exit_code == 1);
    CHECK(result.output.find("proven-unsolvable-under-relaxation") != string::npos);
}

TEST_CASE("exhausted search exits with 1") {
    CHECK(run_planner({"plan", data_path("trap.sas"), "--config", "nolan"}).exit_code == 1);
}

TEST_CASE("limits exit with 2") {
    CHECK(run_planner({"plan", data_path("gripper_small.sas"), "--config", "lama",
                       "--max-expansions", "1"}).exit_code == 2);
    CHECK(run_planner({"plan", data_path("gripper_small.sas"), "--config", "lama",
                       "--time-limit", "0"}).exit_code == 2);
}

TEST_CASE("input errors exit with 3") {
    CHECK(run_planner({"plan", data_path("chain_axiom.sas"), "--config", "lama"}).exit_code == 3);
    CHECK(run_planner({"plan", data_path("missing.sas"), "--config", "lama"}).exit_code == 3);
    CHECK(run_planner({"plan", data_path("chain.sas")}).exit_code == 3);
    CHECK(run_planner({"plan", data_path("chain.sas"), "--config", "lama",
                       "--novelty-bound", "3"}).exit_code == 3);
    CHECK(run_planner({"plan", data_path("chain.sas"), "--config", "lama",
                       "--time-limit", "soon"}).exit_code == 3);
}

TEST_CASE("dump flags") {
    ProcessResult policy = run_planner({"plan", "--config", "nolan", "--dump-policy"});
    CHECK(policy.exit_code == 0);
    CHECK(policy.output == read_file(data_path("golden/policy_nolan.txt")));
    ProcessResult landmarks =
        run_planner({"plan", data_path("chain.sas"), "--config", "lama", "--dump-landmarks"});
    CHECK(landmarks.exit_code == 0);
    CHECK(landmarks.output.find("0=2 goal parents: 0=1") != string::npos);
}

TEST_CASE("novelty bound flag") {
    string stats_file = temp_path("stats.txt");
    ProcessResult result = run_planner({"plan", data_path("gripper_small.sas"), "--config",
                                        "bfws-f2", "--novelty-bound", "1",
                                        "--stats-file", stats_file});
    CHECK(result.exit_code == 0);
    istringstream stats_in(read_file(stats_file));
    CHECK(configs::read_statistics(stats_in)["novelty_bound"] == "1");
    remove(stats_file.c_str());
}
}
