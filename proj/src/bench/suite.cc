#include "planner/bench/suite.h"

#include "planner/configs/plan_command.h"

#include <charconv>
#include <chrono>
#include <cmath>
#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <thread>

#include <fcntl.h>
#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

using namespace std;
namespace fs = std::filesystem;

namespace bench {
namespace {
using Clock = chrono::steady_clock;

struct Job {
    size_t record_index;
    string task_path;
    string config;
};

struct RunningJob {
    size_t job_index;
    pid_t pid;
    Clock::time_point start;
    string stats_path;
};

string make_stats_path() {
    const char *tmp = getenv("TMPDIR");
    string pattern = string(tmp && *tmp ? tmp : "/tmp") + "/planner-stats-XXXXXX";
    vector<char> buffer(pattern.begin(), pattern.end());
    buffer.push_back('\0');
    int fd = mkstemp(buffer.data());
    if (fd < 0)
        throw runtime_error("cannot create temporary statistics file");
    close(fd);
    return buffer.data();
}

pid_t spawn(const Job &job, const SuiteOptions &options, const string &stats_path) {
    vector<string> args = {
        options.planner_executable, "plan", job.task_path, "--config", job.config,
        "--time-limit", format_double(options.time_limit_seconds),
        "--memory-limit", to_string(options.memory_limit_bytes),
        "--stats-file", stats_path,
    };
    pid_t pid = fork();
    if (pid < 0)
        throw runtime_error("fork failed");
    if (pid > 0)
        return pid;

    // Child: silence output, apply limits and exec.
    int devnull = open("/dev/null", O_RDWR);
    if (devnull >= 0) {
        dup2(devnull, STDIN_FILENO);
        dup2(devnull, STDOUT_FILENO);
        dup2(devnull, STDERR_FILENO);
    }
    rlimit as_limit{};
    as_limit.rlim_cur = as_limit.rlim_max =
        options.memory_limit_bytes + options.address_space_slack_bytes;
    setrlimit(RLIMIT_AS, &as_limit);
    rlimit cpu_limit{};
    cpu_limit.rlim_cur = cpu_limit.rlim_max =
        static_cast<rlim_t>(ceil(options.time_limit_seconds + options.grace_seconds));
    setrlimit(RLIMIT_CPU, &cpu_limit);
    vector<char *> argv;
    for (string &arg : args)
        argv.push_back(arg.data());
    argv.push_back(nullptr);
    execv(argv[0], argv.data());
    _exit(127);
}

template<typename T>
bool parse_field(const map<string, string> &stats, const string &key, T &value) {
    auto it = stats.find(key);
    if (it == stats.end())
        return false;
    const string &text = it->second;
    auto [ptr, ec] = from_chars(text.data(), text.data() + text.size(), value);
    return ec == errc() && ptr == text.data() + text.size();
}

void collect(RunRecord &record, const RunningJob &running, bool killed,
             const SuiteOptions &options) {
    double parent_runtime = chrono::duration<double>(Clock::now() - running.start).count();
    record.runtime_seconds = parent_runtime;
    ifstream in(running.stats_path);
    map<string, string> stats;
    if (in)
        stats = configs::read_statistics(in);
    if (!killed && !stats.empty()) {
        int solved = 0;
        parse_field(stats, "solved", solved);
        record.solved = solved == 1;
        parse_field(stats, "expansions", record.expansions);
        parse_field(stats, "runtime_s", record.runtime_seconds);
        int plan_length = 0;
        if (record.solved && parse_field(stats, "plan_length", plan_length))
            record.plan_length = plan_length;
    }
    if (!record.solved)
        record.plan_length.reset();
    score_record(record, options.formula);
    fs::remove(running.stats_path);
}
}

vector<ManifestEntry> read_manifest(istream &in, const string &base_dir) {
    vector<ManifestEntry> entries;
    string line;
    while (getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        size_t first = line.find_first_not_of(" \t");
        if (first == string::npos || line[first] == '#')
            continue;
        ManifestEntry entry;
        size_t tab = line.find('\t');
        if (tab == string::npos) {
            entry.path = line;
        } else {
            entry.domain = line.substr(0, tab);
            entry.path = line.substr(tab + 1);
        }
        fs::path path(entry.path);
        if (!base_dir.empty() && path.is_relative())
            entry.path = (fs::path(base_dir) / path).lexically_normal().string();
        if (entry.domain.empty()) {
            entry.domain = fs::path(entry.path).parent_path().filename().string();
            if (entry.domain.empty())
                entry.domain = ".";
        }
        entries.push_back(move(entry));
    }
    return entries;
}

vector<ManifestEntry> read_manifest_file(const string &path) {
    ifstream in(path);
    if (!in)
        throw runtime_error("cannot open manifest '" + path + "'");
    return read_manifest(in, fs::path(path).parent_path().string());
}

vector<RunRecord> run_suite(span<const ManifestEntry> manifest, const SuiteOptions &options) {
    if (options.planner_executable.empty())
        throw invalid_argument("no planner executable given");
    vector<RunRecord> records;
    vector<Job> jobs;
    for (const ManifestEntry &entry : manifest) {
        for (const string &config : options.configs) {
            RunRecord record;
            record.domain = entry.domain;
            record.task = fs::path(entry.path).filename().string();
            record.config = config;
            jobs.push_back({records.size(), entry.path, config});
            records.push_back(move(record));
        }
    }

    size_t next_job = 0;
    vector<RunningJob> running;
    size_t max_running = static_cast<size_t>(max(options.jobs, 1));
    auto kill_deadline = chrono::duration<double>(options.time_limit_seconds +
                                                  options.grace_seconds);
    while (next_job < jobs.size() || !running.empty()) {
        while (next_job < jobs.size() && running.size() < max_running) {
            string stats_path = make_stats_path();
            pid_t pid = spawn(jobs[next_job], options, stats_path);
            running.push_back({next_job, pid, Clock::now(), stats_path});
            ++next_job;
        }
        bool progressed = false;
        for (size_t i = 0; i < running.size();) {
            RunningJob &job = running[i];
            int status = 0;
            pid_t done = waitpid(job.pid, &status, WNOHANG);
            bool killed = false;
            if (done == 0 && Clock::now() - job.start > kill_deadline) {
                kill(job.pid, SIGKILL);
                waitpid(job.pid, &status, 0);
                done = job.pid;
                killed = true;
            }
            if (done == job.pid || done < 0) {
                if (done == job.pid && WIFSIGNALED(status))
                    killed = true;
                collect(records[jobs[job.job_index].record_index], job, killed, options);
                running.erase(running.begin() + static_cast<long>(i));
                progressed = true;
            } else {
                ++i;
            }
        }
        if (!progressed && !running.empty())
            this_thread::sleep_for(chrono::milliseconds(5));
    }
    return records;
}
}
