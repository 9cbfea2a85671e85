#ifndef PLANNER_BENCH_SCORES_H
#define PLANNER_BENCH_SCORES_H

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace bench {
constexpr double AGILE_LOWER_SECONDS = 1.0;
constexpr double AGILE_UPPER_SECONDS = 300.0;
constexpr double EXPANSIONS_LOWER = 100.0;
constexpr double EXPANSIONS_UPPER = 1e6;

enum class ExpansionsFormula {
    // 1 - log(x / L) / log(U / L); scores exactly 1 at the lower bound.
    NORMALIZED,
    // 1 - log(x) / log(U) between the bounds.
    LITERAL,
};

double agile_score(double runtime_seconds, bool solved);
double expansions_score(double expansions, bool solved,
                        ExpansionsFormula formula = ExpansionsFormula::NORMALIZED);

struct RunRecord {
    std::string domain;
    std::string task;
    std::string config;
    bool solved = false;
    double runtime_seconds = 0.0;
    std::uint64_t expansions = 0;
    std::optional<int> plan_length;
    double agile = 0.0;
    double expansions_score = 0.0;
};

// Fills in the two score fields from the raw fields.
void score_record(RunRecord &record, ExpansionsFormula formula);

struct ScoreTotals {
    int tasks = 0;
    int coverage = 0;
    double agile = 0.0;
    double expansions = 0.0;

    void add(const RunRecord &record);
    bool operator==(const ScoreTotals &) const = default;
};

struct DomainTotals {
    std::string domain;
    ScoreTotals totals;
    bool operator==(const DomainTotals &) const = default;
};

struct ConfigTotals {
    std::string config;
    ScoreTotals totals;
    std::vector<DomainTotals> domains;
    bool operator==(const ConfigTotals &) const = default;
};

// Configs and domains appear in order of first occurrence among the records.
struct ScoreReport {
    ExpansionsFormula formula = ExpansionsFormula::NORMALIZED;
    std::vector<ConfigTotals> configs;
    bool operator==(const ScoreReport &) const = default;
};

ScoreReport build_report(std::span<const RunRecord> records, ExpansionsFormula formula);
void write_report(std::ostream &out, const ScoreReport &report);

// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

const std::string &csv_header();
void write_csv(std::ostream &out, std::span<const RunRecord> records);
// Reads the raw fields and the stored scores. Throws std::runtime_error on
// malformed input.
std::vector<RunRecord> read_csv(std::istream &in);

// Recomputes every score from the raw fields of a stored CSV.
ScoreReport rescore(std::vector<RunRecord> &records, ExpansionsFormula formula);
}

#endif
