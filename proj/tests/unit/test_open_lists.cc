#include "planner/open_lists/open_list.h"

#include <doctest.h>

#include <random>

using namespace std;
using namespace open_lists;
using search::StateId;

namespace {
OpenPolicy make_policy(vector<Admission> admissions, int boost = 1000) {
    return OpenPolicy(admissions, boost);
}

// Pushes n entries with equal keys into every admitting sublist.
void fill(OpenPolicy &policy, int n, bool preferred) {
    vector<SortKey> keys(policy.num_sublists(), SortKey{0});
    for (int i = 0; i < n; ++i)
        policy.push(StateId(i), keys, preferred);
}

vector<int> select_many(OpenPolicy &policy, int n) {
    vector<int> picks;
    for (int i = 0; i < n; ++i)
        picks.push_back(policy.alternation_select());
    return picks;
}
}

TEST_SUITE("open_lists") {
TEST_CASE("sort keys compare lexicographically") {
    CHECK(SortKey{1, 3} < SortKey{1, 5});
    CHECK_FALSE(SortKey{1, 5} < SortKey{1, 3});
    CHECK(SortKey{1, 2, 2} < SortKey{1, 2, 4});
    CHECK(SortKey{1} < SortKey{1, 0});
    CHECK(SortKey{4, 4} == SortKey{4, 4});
}

TEST_CASE("bucket list order") {
    BucketList list;
    list.push({StateId(0), {1, 5}, 0});
    list.push({StateId(1), {1, 3}, 1});
    CHECK(list.pop_best().state == StateId(1));

    BucketList g_ties;
    g_ties.push({StateId(0), {3, 4}, 0});
    g_ties.push({StateId(1), {3, 2}, 1});
    CHECK(g_ties.pop_best().state == StateId(1));

    BucketList fifo;
    fifo.push({StateId(5), {2, 2}, 0});
    fifo.push({StateId(6), {2, 2}, 1});
    CHECK(fifo.num_buckets() == 1);
    CHECK(fifo.pop_best().state == StateId(5));
    CHECK(fifo.pop_best().state == StateId(6));
    CHECK(fifo.empty());
    CHECK_THROWS_AS(fifo.pop_best(), EmptyList);
}

TEST_CASE("popping yields key then insertion order") {
    mt19937 rng(1);
    BucketList list;
    for (int i = 0; i < 500; ++i) {
        SortKey key{static_cast<int>(rng() % 4), static_cast<int>(rng() % 3)};
        list.push({StateId(i), key, static_cast<uint64_t>(i)});
    }
    Entry previous = list.pop_best();
    while (!list.empty()) {
        Entry next = list.pop_best();
        bool ordered = previous.key < next.key ||
            (previous.key == next.key && previous.insertion_seq < next.insertion_seq);
        CHECK(ordered);
        previous = next;
    }
}

TEST_CASE("admission rules") {
    OpenPolicy policy = make_policy({Admission::ALL, Admission::PREFERRED_ONLY});
    vector<SortKey> keys = {{3}, {3}};
    policy.push(StateId(0), keys, false);
    CHECK(policy.get_sublist(0).get_entries().size() == 1);
    CHECK(policy.get_sublist(1).get_entries().size() == 0);
    policy.push(StateId(1), keys, true);
    CHECK(policy.get_sublist(0).get_entries().size() == 2);
    CHECK(policy.get_sublist(1).get_entries().size() == 1);
    CHECK(policy.size() == 3);
}

TEST_CASE("insertion sequence is shared across sublists") {
    OpenPolicy policy = make_policy({Admission::ALL, Admission::ALL});
    vector<SortKey> keys = {{1}, {1}};
    policy.push(StateId(0), keys, false);
    policy.push(StateId(1), keys, false);
    Entry a = policy.pop_best(0);
    Entry b = policy.pop_best(1);
    CHECK(a.insertion_seq == b.insertion_seq);
    CHECK(policy.pop_best(0).insertion_seq > a.insertion_seq);
}

TEST_CASE("round-robin selection") {
    OpenPolicy policy = make_policy({Admission::ALL, Admission::ALL});
    fill(policy, 10, false);
    CHECK(policy.alternation_select() == 0);
    CHECK(policy.get_sublist(0).get_counter() == 1);
    CHECK(policy.get_sublist(1).get_counter() == 0);
    CHECK(policy.alternation_select() == 1);
    CHECK(policy.alternation_select() == 0);
}

TEST_CASE("a boost gives 1000 preferred selections") {
    OpenPolicy policy = make_policy({Admission::ALL, Admission::PREFERRED_ONLY});
    fill(policy, 5, true);
    policy.boost();
    CHECK(policy.get_sublist(1).get_counter() == -1000);
    vector<int> picks = select_many(policy, 1001);
    CHECK(count(picks.begin(), picks.begin() + 1000, 1) == 1000);
    CHECK(picks[1000] == 0);
}

TEST_CASE("an empty boosted sublist does not consume credit") {
    OpenPolicy policy = make_policy({Admission::ALL, Admission::PREFERRED_ONLY});
    fill(policy, 3, false);
    policy.boost();
    CHECK(policy.alternation_select() == 0);
    CHECK(policy.get_sublist(1).get_counter() == -1000);
    CHECK(policy.get_sublist(0).get_counter() == 1);
}

TEST_CASE("boost with two preferred sublists") {
    OpenPolicy policy = make_policy({Admission::ALL, Admission::PREFERRED_ONLY,
                                     Admission::ALL, Admission::PREFERRED_ONLY});
    fill(policy, 5, true);
    policy.boost();
    CHECK(policy.get_sublist(1).get_counter() == -1000);
    CHECK(policy.get_sublist(3).get_counter() == -1000);
    vector<int> picks = select_many(policy, 2001);
    for (int i = 0; i < 2000; ++i)
        CHECK((picks[i] == 1 || picks[i] == 3));
    CHECK(picks[2000] == 0);
}

TEST_CASE("boost without preferred sublists is a no-op") {
    OpenPolicy policy = make_policy({Admission::ALL, Admission::ALL});
    CHECK_FALSE(policy.has_preferred_sublists());
    policy.boost();
    CHECK(policy.get_sublist(0).get_counter() == 0);
    CHECK(policy.get_sublist(1).get_counter() == 0);
}

TEST_CASE("boosts accumulate") {
    OpenPolicy policy = make_policy({Admission::ALL, Admission::PREFERRED_ONLY});
    policy.boost();
    policy.boost();
    CHECK(policy.get_sublist(1).get_counter() == -2000);
}

TEST_CASE("alternation fairness") {
    for (int n : {2, 3, 4}) {
        for (int m : {1, 10, 100}) {
            vector<Admission> admissions(n, Admission::ALL);
            OpenPolicy policy = make_policy(admissions);
            fill(policy, m + 1, false);
            vector<int> picks = select_many(policy, m * n);
            for (int i = 0; i < n; ++i)
                CHECK(count(picks.begin(), picks.end(), i) == m);
        }
    }
}

TEST_CASE("selection on empty policy") {
    OpenPolicy policy = make_policy({Admission::ALL});
    CHECK_THROWS_AS(policy.alternation_select(), AllEmpty);
}

TEST_CASE("pop uses alternation and charges credit") {
    OpenPolicy policy = make_policy({Admission::ALL, Admission::ALL});
    vector<SortKey> keys = {{2}, {1}};
    policy.push(StateId(0), keys, false);
    keys = {{1}, {2}};
    policy.push(StateId(1), keys, false);
    CHECK(policy.pop().state == StateId(1));
    CHECK(policy.pop().state == StateId(0));
    // Stale copies remain; the search discards them on pop.
    CHECK(policy.size() == 2);
}
}
