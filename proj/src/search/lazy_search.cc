#include "planner/search/lazy_search.h"

#include "planner/landmarks/landmark_count.h"
#include "planner/novelty/novelty_table.h"
#include "planner/open_lists/open_list.h"
#include "planner/relaxation/heuristics.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <memory>
#include <unistd.h>

using namespace std;

namespace search {
namespace {
using open_lists::Heuristic;
using open_lists::KeyComponent;

uint64_t resident_set_bytes() {
    ifstream statm("/proc/self/statm");
    uint64_t size = 0, resident = 0;
    if (!(statm >> size >> resident))
        return 0;
    return resident * static_cast<uint64_t>(sysconf(_SC_PAGESIZE));
}

class LazySearch {
    using Clock = chrono::steady_clock;

    const sas::Task &task;
    const open_lists::PolicySpec &spec;
    const SearchOptions &options;
    Clock::time_point start_time;
    // Resident memory before the search allocates anything of its own.
    uint64_t baseline_bytes = 0;

    StateRegistry registry;
    SuccessorGenerator successor_generator;
    vector<SearchNode> nodes;
    relaxation::DeleteRelaxationHeuristic ff;
    bool use_landmarks;
    bool use_preferred;
    unique_ptr<landmarks::LandmarkGraph> landmark_graph;
    unique_ptr<landmarks::LandmarkCountHeuristic> landmark_count;
    vector<int> status_offset;
    vector<uint64_t> status_pool;

    vector<vector<Heuristic>> partitions;
    vector<novelty::NoveltyTable> novelty_tables;
    // Per sublist and key component: index into novelty_tables or -1.
    vector<vector<int>> component_table;
    open_lists::OpenPolicy open_list;

    vector<int> last_ff_preferred;
    int best_ff = relaxation::INFTY;
    int best_lm = relaxation::INFTY;

    SearchResult result;
    vector<int> applicable;
    vector<open_lists::SortKey> keys;
    vector<int> novelty_cache;

    double elapsed() const {
        return chrono::duration<double>(Clock::now() - start_time).count();
    }

    int table_index(const vector<Heuristic> &partition) const {
        return static_cast<int>(find(partitions.begin(), partitions.end(), partition) -
                                partitions.begin());
    }

    // Bytes held by the search's own data structures.
    uint64_t memory_estimate() const {
        uint64_t bytes = registry.memory_usage();
        bytes += nodes.capacity() * sizeof(SearchNode);
        bytes += status_offset.capacity() * sizeof(int);
        bytes += status_pool.capacity() * sizeof(uint64_t);
        bytes += open_list.memory_usage();
        for (const novelty::NoveltyTable &table : novelty_tables)
            bytes += table.memory_usage();
        return bytes;
    }

    // Capacity that fits `extra` more elements, growing geometrically.
    template<typename T>
    static size_t grown_capacity(const vector<T> &v, size_t extra) {
        if (v.capacity() - v.size() >= extra)
            return v.capacity();
        return max(v.capacity() * 2, v.size() + extra);
    }

    /*
      Bytes the next expansion may allocate: containers grow here, under
      this check, rather than in the middle of an expansion, so the old and
      new buffers of a reallocation are both accounted for.
    */
    uint64_t reserve_bytes() const {
        size_t successors = static_cast<size_t>(max(task.num_operators(), 1));
        size_t status_words = landmark_count ? landmark_count->words_per_status() : 0;
        uint64_t bytes = registry.growth_bytes(static_cast<int>(successors));
        if (size_t cap = grown_capacity(nodes, successors); cap != nodes.capacity())
            bytes += cap * sizeof(SearchNode);
        if (size_t cap = grown_capacity(status_offset, successors); cap != status_offset.capacity())
            bytes += cap * sizeof(int);
        if (size_t cap = grown_capacity(status_pool, status_words); cap != status_pool.capacity())
            bytes += cap * sizeof(uint64_t);
        bytes += open_list.growth_bytes(successors);
        // Successors share their parent's key, so each table gains at most
        // one record per expansion.
        for (const novelty::NoveltyTable &table : novelty_tables)
            bytes += table.record_bytes();
        return bytes;
    }

    void reserve_for_expansion() {
        size_t successors = static_cast<size_t>(max(task.num_operators(), 1));
        size_t status_words = landmark_count ? landmark_count->words_per_status() : 0;
        registry.reserve(static_cast<int>(successors));
        nodes.reserve(grown_capacity(nodes, successors));
        status_offset.reserve(grown_capacity(status_offset, successors));
        status_pool.reserve(grown_capacity(status_pool, status_words));
    }

    void setup_novelty() {
        partitions = spec.novelty_partitions();
        uint64_t lm_bound = landmark_graph ? landmark_graph->size() + 1 : 1;
        uint64_t ff_bound = 1 + max(nodes[0].h_ff, 1);
        uint64_t num_atoms = sas::AtomTable(task).size();
        for (const vector<Heuristic> &partition : partitions) {
            uint64_t bound = 1;
            for (Heuristic h : partition)
                bound *= (h == Heuristic::FF) ? ff_bound : lm_bound;
            uint64_t bytes = novelty::estimate_table_bytes(
                num_atoms, bound, options.novelty_bound);
            bool fallback = bytes > novelty::FALLBACK_THRESHOLD_BYTES;
            result.statistics.novelty_fallback |= fallback;
            novelty_tables.emplace_back(task, options.novelty_bound, fallback);
        }
        for (const open_lists::SublistSpec &sublist : spec.sublists) {
            vector<int> tables;
            for (const KeyComponent &component : sublist.key) {
                tables.push_back(component.kind == KeyComponent::Kind::NOVELTY ?
                                 table_index(component.partition) : -1);
            }
            component_table.push_back(move(tables));
        }
        novelty_cache.resize(novelty_tables.size());
    }

    int heuristic_value(Heuristic h, int ff_value, int lm_value) const {
        return h == Heuristic::FF ? ff_value : lm_value;
    }

    void insert(StateId id, const State &state, int ff_value, int lm_value) {
        const SearchNode &node = nodes[id.get_value()];
        bool preferred = node.reached_by_preferred;
        fill(novelty_cache.begin(), novelty_cache.end(), -1);
        for (size_t i = 0; i < spec.sublists.size(); ++i) {
            open_lists::SortKey &key = keys[i];
            key = {};
            if (!open_list.get_sublist(static_cast<int>(i)).admits(preferred))
                continue;
            const auto &recipe = spec.sublists[i].key;
            for (size_t c = 0; c < recipe.size(); ++c) {
                const KeyComponent &component = recipe[c];
                switch (component.kind) {
                case KeyComponent::Kind::HEURISTIC:
                    key.push_back(heuristic_value(component.heuristic, ff_value, lm_value));
                    break;
                case KeyComponent::Kind::NOVELTY: {
                    int t = component_table[i][c];
                    if (novelty_cache[t] == -1) {
                        novelty::PartitionKey partition_key;
                        for (Heuristic h : component.partition)
                            partition_key.push_back(heuristic_value(h, ff_value, lm_value));
                        novelty_cache[t] =
                            novelty_tables[t].compute_novelty(state.values, partition_key);
                        ++result.statistics.novelty_evaluations;
                    }
                    key.push_back(novelty_cache[t]);
                    break;
                }
                case KeyComponent::Kind::NOT_PREFERRED:
                    key.push_back(preferred ? 0 : 1);
                    break;
                case KeyComponent::Kind::G:
                    key.push_back(node.g);
                    break;
                }
            }
        }
        open_list.push(id, keys, preferred);
    }

    landmarks::ConstStatusWords status_of(StateId id) const {
        int words = landmark_count->words_per_status();
        return {status_pool.data() + status_offset[id.get_value()], static_cast<size_t>(words)};
    }

    void evaluate(StateId id, const State &state) {
        SearchNode &node = nodes[id.get_value()];
        relaxation::HeuristicReport report = ff.compute_ff(state.values);
        ++result.statistics.ff_evaluations;
        node.h_ff = report.value;
        last_ff_preferred = move(report.preferred);
        if (use_landmarks) {
            int words = landmark_count->words_per_status();
            int offset = static_cast<int>(status_pool.size());
            status_pool.resize(status_pool.size() + words);
            status_offset[id.get_value()] = offset;
            landmarks::StatusWords out(status_pool.data() + offset, words);
            if (node.parent == StateId::no_state) {
                landmark_count->compute_root_status(state.values, out);
            } else {
                int parent_offset = status_offset[node.parent.get_value()];
                landmarks::ConstStatusWords parent(status_pool.data() + parent_offset, words);
                landmark_count->progress(parent, state.values, out);
            }
            node.h_lm = landmark_count->value(status_of(id), state.values);
            ++result.statistics.landmark_evaluations;
        }
    }

    bool check_progress(const SearchNode &node) {
        bool progress = false;
        if (node.h_ff < best_ff) {
            best_ff = node.h_ff;
            progress = true;
        }
        if (use_landmarks && node.h_lm < best_lm) {
            best_lm = node.h_lm;
            progress = true;
        }
        return progress;
    }

    vector<int> preferred_operators(StateId id, const State &state) {
        vector<int> preferred = last_ff_preferred;
        if (use_landmarks) {
            vector<int> lm_preferred =
                landmark_count->preferred_operators(status_of(id), state.values);
            vector<int> merged;
            set_union(preferred.begin(), preferred.end(),
                      lm_preferred.begin(), lm_preferred.end(), back_inserter(merged));
            preferred = move(merged);
        }
        return preferred;
    }

    void expand(StateId id, const State &state) {
        vector<int> preferred;
        if (use_preferred)
            preferred = preferred_operators(id, state);
        successor_generator.generate_applicable_ops(state, applicable);
        int ff_value = nodes[id.get_value()].h_ff;
        int lm_value = nodes[id.get_value()].h_lm;
        int g = nodes[id.get_value()].g;
        for (int op_id : applicable) {
            State succ = apply_operator(task, state, op_id);
            auto [succ_id, is_new] = registry.insert(succ);
            if (!is_new)
                continue;
            SearchNode child;
            child.parent = id;
            child.op = op_id;
            child.g = g + 1;
            child.reached_by_preferred =
                binary_search(preferred.begin(), preferred.end(), op_id);
            nodes.push_back(child);
            status_offset.push_back(-1);
            ++result.statistics.generated;
            insert(succ_id, succ, ff_value, lm_value);
        }
    }

    optional<Outcome> check_limits() {
        const SearchLimits &limits = options.limits;
        if (limits.max_expansions && result.statistics.expansions >= *limits.max_expansions)
            return Outcome::EXPANSION_LIMIT;
        if (elapsed() >= limits.time_seconds)
            return Outcome::TIME_LIMIT;
        uint64_t estimate = memory_estimate();
        result.statistics.estimated_memory_bytes =
            max(result.statistics.estimated_memory_bytes, estimate);
        if (baseline_bytes + estimate + reserve_bytes() > limits.memory_bytes)
            return Outcome::MEMORY_LIMIT;
        if ((result.statistics.expansions & 15) == 15 &&
            resident_set_bytes() > limits.memory_bytes)
            return Outcome::MEMORY_LIMIT;
        reserve_for_expansion();
        return nullopt;
    }

    void finish(Outcome outcome) {
        result.outcome = outcome;
        result.statistics.registered = registry.size();
        result.statistics.estimated_memory_bytes =
            max(result.statistics.estimated_memory_bytes, memory_estimate());
        result.statistics.wall_clock_seconds = elapsed();
    }

    void run() {
        State root = initial_state(task);
        StateId root_id = registry.insert(root).first;
        SearchNode root_node;
        // The initial state counts as reached by a preferred operator.
        root_node.reached_by_preferred = true;
        nodes.push_back(root_node);
        status_offset.push_back(-1);
        ++result.statistics.generated;
        evaluate(root_id, root);
        if (nodes[0].h_ff == relaxation::INFTY) {
            nodes[0].status = NodeStatus::PRUNED;
            ++result.statistics.dead_ends;
            finish(Outcome::UNSOLVABLE_UNDER_RELAXATION);
            return;
        }
        best_ff = nodes[0].h_ff;
        best_lm = nodes[0].h_lm;
        setup_novelty();
        insert(root_id, root, nodes[0].h_ff, nodes[0].h_lm);

        while (true) {
            if (optional<Outcome> limit = check_limits()) {
                finish(*limit);
                return;
            }
            if (open_list.empty()) {
                finish(Outcome::EXHAUSTED);
                return;
            }
            StateId id = open_list.pop().state;
            if (nodes[id.get_value()].status != NodeStatus::GENERATED) {
                ++result.statistics.discarded;
                continue;
            }
            State state = registry.lookup(id);
            // Only the root is evaluated before its first pop.
            if (nodes[id.get_value()].h_ff == UNEVALUATED)
                evaluate(id, state);
            SearchNode &node = nodes[id.get_value()];
            if (node.h_ff == relaxation::INFTY) {
                node.status = NodeStatus::PRUNED;
                ++result.statistics.dead_ends;
                continue;
            }
            if (is_goal(task, state)) {
                result.plan = extract_plan(nodes, id);
                finish(Outcome::SOLVED);
                return;
            }
            node.status = NodeStatus::EXPANDED;
            ++result.statistics.expansions;
            if (options.record_trace)
                result.expansion_trace.push_back(id);
            if (spec.is_alternation() && check_progress(node)) {
                open_list.boost();
                ++result.statistics.boosts;
            }
            expand(id, state);
        }
    }
public:
    LazySearch(const sas::Task &task, const open_lists::PolicySpec &spec,
               const SearchOptions &options)
        : task(task),
          spec(spec),
          options(options),
          start_time(Clock::now()),
          registry(task, options.limits.memory_bytes),
          successor_generator(task),
          ff(task),
          use_landmarks(spec.uses_heuristic(Heuristic::LANDMARK_COUNT)),
          use_preferred(spec.uses_preferred()),
          open_list(spec),
          keys(spec.sublists.size()) {
        if (use_landmarks) {
            landmark_graph = make_unique<landmarks::LandmarkGraph>(
                landmarks::generate_landmark_graph(task));
            landmark_count = make_unique<landmarks::LandmarkCountHeuristic>(
                task, *landmark_graph);
            result.statistics.landmarks = landmark_graph->size();
        }
        baseline_bytes = resident_set_bytes();
    }

    SearchResult search() {
        try {
            run();
        } catch (const MemoryLimitExceeded &) {
            finish(Outcome::MEMORY_LIMIT);
        } catch (const bad_alloc &) {
            finish(Outcome::MEMORY_LIMIT);
        }
        return move(result);
    }
};
}

string outcome_name(Outcome outcome) {
    switch (outcome) {
    case Outcome::SOLVED:
        return "solved";
    case Outcome::UNSOLVABLE_UNDER_RELAXATION:
        return "proven-unsolvable-under-relaxation";
    case Outcome::EXHAUSTED:
        return "exhausted";
    case Outcome::TIME_LIMIT:
        return "time-limit";
    case Outcome::MEMORY_LIMIT:
        return "memory-limit";
    case Outcome::EXPANSION_LIMIT:
        return "expansion-limit";
    }
    return "unknown";
}

bool is_limit(Outcome outcome) {
    return outcome == Outcome::TIME_LIMIT || outcome == Outcome::MEMORY_LIMIT ||
           outcome == Outcome::EXPANSION_LIMIT;
}

SearchResult lazy_gbfs(const sas::Task &task, const open_lists::PolicySpec &policy,
                       const SearchOptions &options) {
    LazySearch search(task, policy, options);
    return search.search();
}

vector<int> extract_plan(span<const SearchNode> nodes, StateId goal_state) {
    vector<int> plan;
    StateId current = goal_state;
    while (nodes[current.get_value()].parent != StateId::no_state) {
        const SearchNode &node = nodes[current.get_value()];
        plan.push_back(node.op);
        current = node.parent;
    }
    reverse(plan.begin(), plan.end());
    return plan;
}

PlanValidation validate_plan(const sas::Task &task, span<const int> plan) {
    PlanValidation validation;
    State state = initial_state(task);
    for (size_t step = 0; step < plan.size(); ++step) {
        int op_id = plan[step];
        if (op_id < 0 || op_id >= task.num_operators()) {
            validation.failed_step = static_cast<int>(step);
            validation.reason = "unknown operator at step " + to_string(step);
            return validation;
        }
        if (!is_applicable(task.operators[op_id], state)) {
            validation.failed_step = static_cast<int>(step);
            validation.reason = "operator '" + task.operators[op_id].name +
                                "' inapplicable at step " + to_string(step);
            return validation;
        }
        state = apply_operator(task, state, op_id);
    }
    if (!is_goal(task, state)) {
        validation.reason = "goal not satisfied after " + to_string(plan.size()) + " steps";
        return validation;
    }
    validation.valid = true;
    return validation;
}

void write_plan(ostream &out, const sas::Task &task, span<const int> plan) {
    for (int op_id : plan)
        out << "(" << task.operators[op_id].name << ")\n";
    out << "; cost = " << plan.size() << " (unit cost)\n";
}
}
