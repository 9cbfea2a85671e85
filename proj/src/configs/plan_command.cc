#include "planner/configs/plan_command.h"

#include "planner/bench/scores.h"
#include "planner/configs/configs.h"
#include "planner/landmarks/landmark_graph.h"

#include <fstream>
#include <sys/resource.h>

using namespace std;

namespace configs {
const char *const STATISTICS_HELP =
    "Statistics file: one key=value per line with keys config, task, outcome, "
    "solved, plan_length, expansions, evaluations, ff_evaluations, "
    "landmark_evaluations, novelty_evaluations, generated, registered, dead_ends, "
    "discarded, boosts, landmarks, novelty_bound, novelty_fallback, "
    "estimated_memory_bytes, runtime_s, peak_rss_kb.";

int exit_code_for(search::Outcome outcome) {
    switch (outcome) {
    case search::Outcome::SOLVED:
        return EXIT_SOLVED;
    case search::Outcome::UNSOLVABLE_UNDER_RELAXATION:
    case search::Outcome::EXHAUSTED:
        return EXIT_UNSOLVABLE;
    default:
        return EXIT_LIMIT;
    }
}

void write_statistics(ostream &out, const PlanArguments &args,
                      const search::SearchResult &result) {
    const search::Statistics &s = result.statistics;
    rusage usage{};
    getrusage(RUSAGE_SELF, &usage);
    out << "config=" << args.config << "\n"
        << "task=" << args.task_path << "\n"
        << "outcome=" << search::outcome_name(result.outcome) << "\n"
        << "solved=" << (result.outcome == search::Outcome::SOLVED ? 1 : 0) << "\n"
        << "plan_length=" << (result.plan ? to_string(result.plan->size()) : "none") << "\n"
        << "expansions=" << s.expansions << "\n"
        << "evaluations=" << s.ff_evaluations << "\n"
        << "ff_evaluations=" << s.ff_evaluations << "\n"
        << "landmark_evaluations=" << s.landmark_evaluations << "\n"
        << "novelty_evaluations=" << s.novelty_evaluations << "\n"
        << "generated=" << s.generated << "\n"
        << "registered=" << s.registered << "\n"
        << "dead_ends=" << s.dead_ends << "\n"
        << "discarded=" << s.discarded << "\n"
        << "boosts=" << s.boosts << "\n"
        << "landmarks=" << s.landmarks << "\n"
        << "novelty_bound=" << args.options.novelty_bound << "\n"
        << "novelty_fallback=" << (s.novelty_fallback ? 1 : 0) << "\n"
        << "estimated_memory_bytes=" << s.estimated_memory_bytes << "\n"
        << "runtime_s=" << bench::format_double(s.wall_clock_seconds) << "\n"
        << "peak_rss_kb=" << usage.ru_maxrss << "\n";
}

map<string, string> read_statistics(istream &in) {
    map<string, string> stats;
    string line;
    while (getline(in, line)) {
        size_t eq = line.find('=');
        if (eq == string::npos)
            continue;
        stats[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return stats;
}

int run_plan(const PlanArguments &args, ostream &out, ostream &err) {
    open_lists::PolicySpec policy;
    try {
        policy = build_config(args.config);
    } catch (const UnknownConfig &e) {
        err << "UnknownConfig: " << e.what() << "\n";
        return EXIT_INPUT_ERROR;
    }
    if (args.options.novelty_bound != 1 && args.options.novelty_bound != 2) {
        err << "novelty bound must be 1 or 2\n";
        return EXIT_INPUT_ERROR;
    }
    if (args.dump_policy) {
        out << open_lists::dump_policy(policy);
        if (!args.dump_landmarks)
            return EXIT_SOLVED;
    }
    if (args.task_path.empty()) {
        err << "no task file given\n";
        return EXIT_INPUT_ERROR;
    }

    sas::Task task;
    try {
        task = sas::read_sas_file(args.task_path);
    } catch (const sas::InputError &e) {
        err << e.what() << "\n";
        return EXIT_INPUT_ERROR;
    }
    if (args.dump_landmarks) {
        out << landmarks::dump_landmark_graph(landmarks::generate_landmark_graph(task));
        return EXIT_SOLVED;
    }

    search::SearchResult result = search::lazy_gbfs(task, policy, args.options);

    if (result.plan) {
        search::PlanValidation validation = search::validate_plan(task, *result.plan);
        if (!validation) {
            err << "internal error: invalid plan: " << validation.reason << "\n";
            return EXIT_INPUT_ERROR;
        }
        if (args.plan_file) {
            ofstream plan_out(*args.plan_file);
            if (!plan_out) {
                err << "cannot write plan file " << *args.plan_file << "\n";
                return EXIT_INPUT_ERROR;
            }
            search::write_plan(plan_out, task, *result.plan);
        }
    }
    if (args.stats_file) {
        ofstream stats_out(*args.stats_file);
        if (!stats_out) {
            err << "cannot write statistics file " << *args.stats_file << "\n";
            return EXIT_INPUT_ERROR;
        }
        write_statistics(stats_out, args, result);
    }

    const search::Statistics &s = result.statistics;
    out << "outcome: " << search::outcome_name(result.outcome) << "\n"
        << "expansions: " << s.expansions << "\n"
        << "evaluations: " << s.ff_evaluations << "\n";
    if (result.plan)
        out << "plan length: " << result.plan->size() << "\n";
    if (s.novelty_fallback)
        out << "novelty fallback: w = 1 tables\n";
    out << "runtime: " << s.wall_clock_seconds << "s\n";
    return exit_code_for(result.outcome);
}
}
