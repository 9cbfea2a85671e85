#include "planner/novelty/novelty_table.h"

#include <stdexcept>

using namespace std;

namespace novelty {
namespace {
bool test_and_set(vector<uint64_t> &bits, uint64_t index) {
    uint64_t &word = bits[index / 64];
    uint64_t mask = uint64_t(1) << (index % 64);
    bool was_set = word & mask;
    word |= mask;
    return was_set;
}
}

uint64_t estimate_table_bytes(uint64_t num_atoms, uint64_t partition_bound, int bound) {
    uint64_t bits = num_atoms;
    if (bound == 2)
        bits += num_atoms * (num_atoms - 1) / 2;
    return partition_bound * ((bits + 7) / 8);
}

size_t NoveltyTable::KeyHash::operator()(const PartitionKey &key) const noexcept {
    size_t h = key.size();
    for (int v : key)
        h = h * 0x9e3779b97f4a7c15ULL + static_cast<size_t>(v) + 0x7f4a7c15;
    return h;
}

NoveltyTable::NoveltyTable(const sas::Task &task, int bound, bool fallback_engaged)
    : atom_table(task),
      bound(bound),
      fallback(fallback_engaged) {
    if (bound != 1 && bound != 2)
        throw invalid_argument("novelty bound must be 1 or 2");
    // Atoms of lower variables have ids below first_id of the upper atom's
    // variable, so (lower, upper) maps to pair_base[upper] + lower.
    pair_base.resize(atom_table.size());
    for (int atom = 0; atom < atom_table.size(); ++atom) {
        pair_base[atom] = num_pairs;
        num_pairs += atom_table.first_id(atom_table.atom(atom).var);
    }
}

int NoveltyTable::compute_novelty(span<const int> state, const PartitionKey &key) {
    auto [it, inserted] = records.try_emplace(key);
    Record &record = it->second;
    int k = effective_bound();
    if (inserted) {
        record.atoms.assign((atom_table.size() + 63) / 64, 0);
        if (k == 2)
            record.pairs.assign((num_pairs + 63) / 64, 0);
        bytes_allocated += record_bytes() + key.size() * sizeof(int);
    }

    scratch_atoms.clear();
    for (size_t var = 0; var < state.size(); ++var)
        scratch_atoms.push_back(atom_table.id(static_cast<int>(var), state[var]));

    int novelty = k + 1;
    for (int atom : scratch_atoms) {
        if (!test_and_set(record.atoms, atom))
            novelty = 1;
    }
    if (k == 2) {
        for (size_t j = 1; j < scratch_atoms.size(); ++j) {
            uint64_t base = pair_base[scratch_atoms[j]];
            for (size_t i = 0; i < j; ++i) {
                if (!test_and_set(record.pairs, base + scratch_atoms[i]) && novelty > 2)
                    novelty = 2;
            }
        }
    }
    return novelty;
}

size_t NoveltyTable::record_bytes() const {
    size_t words = (atom_table.size() + 63) / 64;
    if (effective_bound() == 2)
        words += (num_pairs + 63) / 64;
    // Key storage and hash node overhead.
    return words * sizeof(uint64_t) + sizeof(Record) + 64;
}
}
