#ifndef PLANNER_OPEN_LISTS_OPEN_LIST_H
#define PLANNER_OPEN_LISTS_OPEN_LIST_H

#include "planner/open_lists/policy.h"
#include "planner/search/state_id.h"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace open_lists {
class EmptyList : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class AllEmpty : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Lexicographic integer key with inline storage; lower is better.
class SortKey {
public:
    static constexpr int MAX_SIZE = 8;
private:
    std::array<int, MAX_SIZE> values{};
    int length = 0;
public:
    SortKey() = default;
    SortKey(std::initializer_list<int> init) {
        for (int v : init)
            push_back(v);
    }

    void push_back(int value) {
        assert(length < MAX_SIZE);
        values[length++] = value;
    }
    int size() const {
        return length;
    }
    int operator[](int i) const {
        return values[i];
    }

    friend bool operator==(const SortKey &a, const SortKey &b) {
        return a.length == b.length &&
               std::equal(a.values.begin(), a.values.begin() + a.length,
                          b.values.begin());
    }
    friend bool operator<(const SortKey &a, const SortKey &b) {
        return std::lexicographical_compare(
            a.values.begin(), a.values.begin() + a.length,
            b.values.begin(), b.values.begin() + b.length);
    }
};

// Map node, deque index and first block of one bucket, rounded up.
constexpr std::size_t BUCKET_OVERHEAD_BYTES = 1024;

struct Entry {
    search::StateId state = search::StateId::no_state;
    SortKey key;
    std::uint64_t insertion_seq = 0;
};

/*
  Keyed list: an ordered map from keys to FIFO buckets, so entries with equal
  keys come out in insertion order without comparing sequence numbers.
*/
class BucketList {
    std::map<SortKey, std::deque<Entry>> buckets;
    std::size_t num_entries = 0;
public:
    void push(const Entry &entry);
    Entry pop_best();
    const Entry &peek_best() const;

    bool empty() const {
        return num_entries == 0;
    }
    std::size_t size() const {
        return num_entries;
    }
    std::size_t num_buckets() const {
        return buckets.size();
    }
    // Upper bound on heap bytes held by the entries and buckets.
    std::size_t memory_usage() const {
        return num_entries * sizeof(Entry) + buckets.size() * BUCKET_OVERHEAD_BYTES;
    }
};

class Sublist {
    BucketList entries;
    Admission admission;
    std::int64_t counter = 0;
    friend class OpenPolicy;
public:
    explicit Sublist(Admission admission) : admission(admission) {}

    bool admits(bool preferred) const {
        return admission == Admission::ALL || preferred;
    }
    bool is_preferred_only() const {
        return admission == Admission::PREFERRED_ONLY;
    }
    std::int64_t get_counter() const {
        return counter;
    }
    const BucketList &get_entries() const {
        return entries;
    }
};

/*
  Runtime open-list structure: sublists with admission rules and
  alternation counters. Selection picks the nonempty sublist with the
  smallest counter (lowest index on ties) and charges it one unit; a boost
  subtracts boost_amount from every preferred-only sublist.
*/
class OpenPolicy {
    std::vector<Sublist> sublists;
    int boost_amount;
    std::uint64_t next_seq = 0;
    std::size_t total_entries = 0;
public:
    OpenPolicy(std::span<const Admission> admissions, int boost_amount);
    explicit OpenPolicy(const PolicySpec &spec);

    // keys[i] is the key for sublist i; ignored where the sublist rejects.
    void push(search::StateId state, std::span<const SortKey> keys,
              bool preferred);
    int alternation_select();
    Entry pop_best(int sublist);
    Entry pop();
    void boost();

    bool empty() const {
        return total_entries == 0;
    }
    std::size_t size() const {
        return total_entries;
    }
    int num_sublists() const {
        return static_cast<int>(sublists.size());
    }
    const Sublist &get_sublist(int i) const {
        return sublists[i];
    }
    bool has_preferred_sublists() const;
    std::size_t memory_usage() const;
    // Worst-case bytes allocated by the given number of push calls.
    std::size_t growth_bytes(std::size_t pushes) const {
        return pushes * sublists.size() * (sizeof(Entry) + BUCKET_OVERHEAD_BYTES);
    }
};
}

#endif
