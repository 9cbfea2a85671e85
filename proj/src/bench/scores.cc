#include "planner/bench/scores.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

using namespace std;

namespace bench {
namespace {
double log_interpolate(double value, double lower, double upper) {
    if (value <= lower)
        return 1.0;
    if (value >= upper)
        return 0.0;
    return 1.0 - log(value / lower) / log(upper / lower);
}

string quote_csv(const string &field) {
    if (field.find_first_of(",\"\r\n") == string::npos)
        return field;
    string result = "\"";
    for (char c : field) {
        if (c == '"')
            result += '"';
        result += c;
    }
    return result + "\"";
}

vector<string> split_csv_line(const string &line, int line_number) {
    vector<string> fields;
    string field;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(move(field));
            field.clear();
        } else {
            field += c;
        }
    }
    if (quoted)
        throw runtime_error("CSV line " + to_string(line_number) + ": unterminated quote");
    fields.push_back(move(field));
    return fields;
}

template<typename T>
T parse_number(const string &text, const char *what, int line_number) {
    T value{};
    auto [ptr, ec] = from_chars(text.data(), text.data() + text.size(), value);
    if (ec != errc() || ptr != text.data() + text.size())
        throw runtime_error("CSV line " + to_string(line_number) + ": bad " + what +
                            " '" + text + "'");
    return value;
}
}

double agile_score(double runtime_seconds, bool solved) {
    if (!solved)
        return 0.0;
    return log_interpolate(runtime_seconds, AGILE_LOWER_SECONDS, AGILE_UPPER_SECONDS);
}

double expansions_score(double expansions, bool solved, ExpansionsFormula formula) {
    if (!solved)
        return 0.0;
    if (formula == ExpansionsFormula::NORMALIZED)
        return log_interpolate(expansions, EXPANSIONS_LOWER, EXPANSIONS_UPPER);
    if (expansions <= EXPANSIONS_LOWER)
        return 1.0;
    if (expansions >= EXPANSIONS_UPPER)
        return 0.0;
    return 1.0 - log(expansions) / log(EXPANSIONS_UPPER);
}

void score_record(RunRecord &record, ExpansionsFormula formula) {
    record.agile = agile_score(record.runtime_seconds, record.solved);
    record.expansions_score =
        expansions_score(static_cast<double>(record.expansions), record.solved, formula);
}

void ScoreTotals::add(const RunRecord &record) {
    ++tasks;
    coverage += record.solved ? 1 : 0;
    agile += record.agile;
    expansions += record.expansions_score;
}

ScoreReport build_report(span<const RunRecord> records, ExpansionsFormula formula) {
    ScoreReport report;
    report.formula = formula;
    for (const RunRecord &record : records) {
        auto config = find_if(report.configs.begin(), report.configs.end(),
                              [&](const ConfigTotals &c) {return c.config == record.config;});
        if (config == report.configs.end()) {
            report.configs.push_back({record.config, {}, {}});
            config = prev(report.configs.end());
        }
        config->totals.add(record);
        auto domain = find_if(config->domains.begin(), config->domains.end(),
                              [&](const DomainTotals &d) {return d.domain == record.domain;});
        if (domain == config->domains.end()) {
            config->domains.push_back({record.domain, {}});
            domain = prev(config->domains.end());
        }
        domain->totals.add(record);
    }
    return report;
}

string format_double(double value) {
    char buffer[64];
    auto [ptr, ec] = to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != errc())
        throw logic_error("cannot format double");
    return string(buffer, ptr);
}

void write_report(ostream &out, const ScoreReport &report) {
    auto write_totals = [&out](const ScoreTotals &totals) {
        out << " tasks=" << totals.tasks << " coverage=" << totals.coverage
            << " agile_score=" << format_double(totals.agile)
            << " expansions_score=" << format_double(totals.expansions) << "\n";
    };
    out << "expansions_formula="
        << (report.formula == ExpansionsFormula::NORMALIZED ? "normalized" : "literal") << "\n";
    for (const ConfigTotals &config : report.configs) {
        out << "config " << config.config;
        write_totals(config.totals);
        for (const DomainTotals &domain : config.domains) {
            out << "  domain " << domain.domain;
            write_totals(domain.totals);
        }
    }
}

const string &csv_header() {
    static const string header =
        "domain,task,config,solved,runtime_s,expansions,plan_length,agile_score,expansions_score";
    return header;
}

void write_csv(ostream &out, span<const RunRecord> records) {
    out << csv_header() << "\n";
    for (const RunRecord &r : records) {
        out << quote_csv(r.domain) << "," << quote_csv(r.task) << "," << quote_csv(r.config)
            << "," << (r.solved ? 1 : 0) << "," << format_double(r.runtime_seconds) << ","
            << r.expansions << "," << (r.plan_length ? to_string(*r.plan_length) : "")
            << "," << format_double(r.agile) << "," << format_double(r.expansions_score)
            << "\n";
    }
}

vector<RunRecord> read_csv(istream &in) {
    string line;
    if (!getline(in, line))
        throw runtime_error("CSV is empty (missing header)");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != csv_header())
        throw runtime_error("unexpected CSV header '" + line + "'");
    vector<RunRecord> records;
    int line_number = 1;
    while (getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        vector<string> fields = split_csv_line(line, line_number);
        if (fields.size() != 9)
            throw runtime_error("CSV line " + to_string(line_number) + ": expected 9 fields, got " +
                                to_string(fields.size()));
        RunRecord r;
        r.domain = fields[0];
        r.task = fields[1];
        r.config = fields[2];
        if (fields[3] != "0" && fields[3] != "1")
            throw runtime_error("CSV line " + to_string(line_number) + ": bad solved flag");
        r.solved = fields[3] == "1";
        r.runtime_seconds = parse_number<double>(fields[4], "runtime", line_number);
        r.expansions = parse_number<uint64_t>(fields[5], "expansions", line_number);
        if (!fields[6].empty())
            r.plan_length = parse_number<int>(fields[6], "plan length", line_number);
        r.agile = parse_number<double>(fields[7], "agile score", line_number);
        r.expansions_score = parse_number<double>(fields[8], "expansions score", line_number);
        records.push_back(move(r));
    }
    return records;
}

ScoreReport rescore(vector<RunRecord> &records, ExpansionsFormula formula) {
    for (RunRecord &record : records)
        score_record(record, formula);
    return build_report(records, formula);
}
}
