#include "planner/open_lists/open_list.h"

#include <limits>

using namespace std;

namespace open_lists {
void BucketList::push(const Entry &entry) {
    buckets[entry.key].push_back(entry);
    ++num_entries;
}

const Entry &BucketList::peek_best() const {
    if (num_entries == 0)
        throw EmptyList("peek on empty open list");
    return buckets.begin()->second.front();
}

Entry BucketList::pop_best() {
    if (num_entries == 0)
        throw EmptyList("pop from empty open list");
    auto it = buckets.begin();
    Entry result = it->second.front();
    it->second.pop_front();
    if (it->second.empty())
        buckets.erase(it);
    --num_entries;
    return result;
}

OpenPolicy::OpenPolicy(span<const Admission> admissions, int boost_amount)
    : boost_amount(boost_amount) {
    if (admissions.empty())
        throw invalid_argument("open policy needs at least one sublist");
    for (Admission admission : admissions)
        sublists.emplace_back(admission);
}

static vector<Admission> admissions_of(const PolicySpec &spec) {
    vector<Admission> result;
    for (const SublistSpec &sublist : spec.sublists)
        result.push_back(sublist.admission);
    return result;
}

OpenPolicy::OpenPolicy(const PolicySpec &spec)
    : OpenPolicy(admissions_of(spec), spec.boost_amount) {
}

void OpenPolicy::push(search::StateId state, span<const SortKey> keys,
                      bool preferred) {
    assert(keys.size() == sublists.size());
    uint64_t seq = next_seq++;
    for (size_t i = 0; i < sublists.size(); ++i) {
        if (sublists[i].admits(preferred)) {
            sublists[i].entries.push({state, keys[i], seq});
            ++total_entries;
        }
    }
}

int OpenPolicy::alternation_select() {
    int best = -1;
    for (int i = 0; i < num_sublists(); ++i) {
        const Sublist &sublist = sublists[i];
        if (sublist.entries.empty())
            continue;
        if (best == -1 || sublist.counter < sublists[best].counter)
            best = i;
    }
    if (best == -1)
        throw AllEmpty("all sublists are empty");
    ++sublists[best].counter;
    return best;
}

Entry OpenPolicy::pop_best(int sublist) {
    Entry entry = sublists.at(sublist).entries.pop_best();
    --total_entries;
    return entry;
}

Entry OpenPolicy::pop() {
    return pop_best(alternation_select());
}

void OpenPolicy::boost() {
    for (Sublist &sublist : sublists) {
        if (sublist.is_preferred_only())
            sublist.counter -= boost_amount;
    }
}

bool OpenPolicy::has_preferred_sublists() const {
    for (const Sublist &sublist : sublists) {
        if (sublist.is_preferred_only())
            return true;
    }
    return false;
}

size_t OpenPolicy::memory_usage() const {
    size_t bytes = 0;
    for (const Sublist &sublist : sublists)
        bytes += sublist.entries.memory_usage();
    return bytes;
}
}
