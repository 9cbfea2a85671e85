#ifndef PLANNER_NOVELTY_NOVELTY_TABLE_H
#define PLANNER_NOVELTY_NOVELTY_TABLE_H

#include "planner/sas/task.h"

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace novelty {
// Tuple of partition heuristic values; empty for plain novelty.
using PartitionKey = std::vector<int>;

constexpr std::uint64_t FALLBACK_THRESHOLD_BYTES = std::uint64_t(2) << 30;

/*
  Upper bound on table memory: P records, each with A atom bits plus, for
  k = 2, A(A-1)/2 pair bits, rounded up to whole bytes.
*/
std::uint64_t estimate_table_bytes(std::uint64_t num_atoms,
                                   std::uint64_t partition_bound, int bound);

/*
  Seen-tuple bookkeeping for w_k with k in {1, 2}, one record per partition
  key. Pair bits cover only pairs of atoms from different variables, since
  two values of one variable never co-occur in a state.
*/
class NoveltyTable {
    struct Record {
        std::vector<std::uint64_t> atoms;
        std::vector<std::uint64_t> pairs;
    };
    struct KeyHash {
        std::size_t operator()(const PartitionKey &key) const noexcept;
    };

    sas::AtomTable atom_table;
    int bound;
    bool fallback;
    std::vector<std::uint64_t> pair_base;
    std::uint64_t num_pairs = 0;
    std::unordered_map<PartitionKey, Record, KeyHash> records;
    std::vector<int> scratch_atoms;
    std::size_t bytes_allocated = 0;
public:
    NoveltyTable(const sas::Task &task, int bound, bool fallback_engaged = false);

    // Returns w in [1, effective_bound() + 1] and marks every tuple of the
    // state as seen under the key.
    int compute_novelty(std::span<const int> state, const PartitionKey &key);

    int get_bound() const {
        return bound;
    }
    int effective_bound() const {
        return fallback ? 1 : bound;
    }
    bool fallback_engaged() const {
        return fallback;
    }
    std::uint64_t get_num_pairs() const {
        return num_pairs;
    }
    std::uint64_t pair_index(int lower_atom, int upper_atom) const {
        return pair_base[upper_atom] + lower_atom;
    }
    std::size_t num_records() const {
        return records.size();
    }
    std::size_t memory_usage() const {
        return bytes_allocated;
    }
    // Bytes allocated for the record of a new partition key.
    std::size_t record_bytes() const;
};
}

#endif
