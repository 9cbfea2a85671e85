#include "planner/bench/scores.h"
#include "planner/bench/suite.h"
#include "planner/configs/configs.h"
#include "planner/configs/plan_command.h"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace std;

namespace {
struct BenchArguments {
    string manifest;
    optional<string> rescore_csv;
    vector<string> configs;
    string csv_path;
    optional<string> report_path;
    double time_limit = 300.0;
    uint64_t memory_limit = uint64_t(8) << 30;
    int jobs = 1;
    bool literal_formula = false;
};

void emit_report(const bench::ScoreReport &report, const optional<string> &path) {
    if (path) {
        ofstream out(*path);
        if (!out)
            throw runtime_error("cannot write report file " + *path);
        bench::write_report(out, report);
    }
    bench::write_report(cout, report);
}

int run_bench(const BenchArguments &args) {
    bench::ExpansionsFormula formula = args.literal_formula ?
        bench::ExpansionsFormula::LITERAL : bench::ExpansionsFormula::NORMALIZED;
    try {
        if (args.rescore_csv) {
            ifstream in(*args.rescore_csv);
            if (!in)
                throw runtime_error("cannot open CSV " + *args.rescore_csv);
            vector<bench::RunRecord> records = bench::read_csv(in);
            bench::ScoreReport report = bench::rescore(records, formula);
            if (!args.csv_path.empty()) {
                ofstream out(args.csv_path);
                bench::write_csv(out, records);
            }
            emit_report(report, args.report_path);
            return 0;
        }
        if (args.manifest.empty()) {
            cerr << "bench needs a manifest or --rescore\n";
            return configs::EXIT_INPUT_ERROR;
        }
        bench::SuiteOptions options;
        options.configs = args.configs.empty() ? configs::named_configs() : args.configs;
        for (const string &config : options.configs)
            configs::build_config(config);
        options.time_limit_seconds = args.time_limit;
        options.memory_limit_bytes = args.memory_limit;
        options.jobs = args.jobs;
        options.formula = formula;
        options.planner_executable = filesystem::canonical("/proc/self/exe").string();
        vector<bench::ManifestEntry> manifest = bench::read_manifest_file(args.manifest);
        vector<bench::RunRecord> records = bench::run_suite(manifest, options);
        string csv_path = args.csv_path.empty() ? "bench.csv" : args.csv_path;
        ofstream out(csv_path);
        if (!out)
            throw runtime_error("cannot write CSV " + csv_path);
        bench::write_csv(out, records);
        emit_report(bench::build_report(records, formula), args.report_path);
        return 0;
    } catch (const configs::UnknownConfig &e) {
        cerr << "UnknownConfig: " << e.what() << "\n";
    } catch (const exception &e) {
        cerr << e.what() << "\n";
    }
    return configs::EXIT_INPUT_ERROR;
}
}

int main(int argc, char **argv) {
    CLI::App app{"Satisficing planner for SAS+ tasks"};
    app.require_subcommand(1);

    configs::PlanArguments plan;
    string plan_file, stats_file;
    optional<uint64_t> max_expansions;
    CLI::App *plan_cmd = app.add_subcommand("plan", "Search for a plan");
    plan_cmd->footer(configs::STATISTICS_HELP);
    plan_cmd->add_option("task", plan.task_path, "SAS+ task file");
    plan_cmd->add_option("--config", plan.config, "Configuration name")->required();
    plan_cmd->add_option("--time-limit", plan.options.limits.time_seconds,
                         "Time limit in seconds")->capture_default_str();
    plan_cmd->add_option("--memory-limit", plan.options.limits.memory_bytes,
                         "Memory limit in bytes")->capture_default_str();
    plan_cmd->add_option("--max-expansions", max_expansions, "Expansion limit");
    plan_cmd->add_option("--plan-file", plan_file, "Write the plan here");
    plan_cmd->add_option("--stats-file", stats_file, "Write key=value statistics here");
    plan_cmd->add_option("--novelty-bound", plan.options.novelty_bound,
                         "Novelty bound k (1 or 2)")->capture_default_str();
    plan_cmd->add_flag("--dump-landmarks", plan.dump_landmarks,
                       "Print the landmark graph and exit");
    plan_cmd->add_flag("--dump-policy", plan.dump_policy,
                       "Print the compiled open-list policy and exit");

    BenchArguments bench_args;
    CLI::App *bench_cmd = app.add_subcommand("bench", "Run or rescore a benchmark suite");
    bench_cmd->add_option("manifest", bench_args.manifest, "Manifest of task files");
    bench_cmd->add_option("--rescore", bench_args.rescore_csv,
                          "Recompute scores of a stored CSV instead of running");
    bench_cmd->add_option("--config", bench_args.configs,
                          "Configurations to run (default: all named)");
    bench_cmd->add_option("--csv", bench_args.csv_path,
                          "CSV output (default bench.csv; with --rescore only if given)");
    bench_cmd->add_option("--report", bench_args.report_path, "Also write the report here");
    bench_cmd->add_option("--time-limit", bench_args.time_limit,
                          "Per-run time limit in seconds")->capture_default_str();
    bench_cmd->add_option("--memory-limit", bench_args.memory_limit,
                          "Per-run memory limit in bytes")->capture_default_str();
    bench_cmd->add_option("--jobs", bench_args.jobs, "Concurrent runs")->capture_default_str();
    bench_cmd->add_flag("--literal-footnote-formula", bench_args.literal_formula,
                        "Score expansions with 1 - log(x)/log(10^6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : configs::EXIT_INPUT_ERROR;
    }

    if (*plan_cmd) {
        if (!plan_file.empty())
            plan.plan_file = plan_file;
        if (!stats_file.empty())
            plan.stats_file = stats_file;
        plan.options.limits.max_expansions = max_expansions;
        try {
            return configs::run_plan(plan, cout, cerr);
        } catch (const exception &e) {
            cerr << "error: " << e.what() << "\n";
            return configs::EXIT_INPUT_ERROR;
        }
    }
    return run_bench(bench_args);
}
