#include "planner/open_lists/policy.h"

#include <algorithm>
#include <sstream>

using namespace std;

namespace open_lists {
bool PolicySpec::uses_heuristic(Heuristic h) const {
    for (const SublistSpec &sublist : sublists) {
        for (const KeyComponent &component : sublist.key) {
            if (component.kind == KeyComponent::Kind::HEURISTIC &&
                component.heuristic == h)
                return true;
            if (component.kind == KeyComponent::Kind::NOVELTY &&
                find(component.partition.begin(), component.partition.end(), h) !=
                component.partition.end())
                return true;
        }
    }
    return false;
}

bool PolicySpec::uses_preferred() const {
    for (const SublistSpec &sublist : sublists) {
        if (sublist.admission == Admission::PREFERRED_ONLY)
            return true;
        for (const KeyComponent &component : sublist.key) {
            if (component.kind == KeyComponent::Kind::NOT_PREFERRED)
                return true;
        }
    }
    return false;
}

vector<vector<Heuristic>> PolicySpec::novelty_partitions() const {
    vector<vector<Heuristic>> result;
    for (const SublistSpec &sublist : sublists) {
        for (const KeyComponent &component : sublist.key) {
            if (component.kind == KeyComponent::Kind::NOVELTY &&
                find(result.begin(), result.end(), component.partition) == result.end())
                result.push_back(component.partition);
        }
    }
    return result;
}

string heuristic_name(Heuristic h) {
    switch (h) {
    case Heuristic::FF:
        return "h_ff";
    case Heuristic::LANDMARK_COUNT:
        return "h_lm";
    }
    return "?";
}

string describe_component(const KeyComponent &component) {
    switch (component.kind) {
    case KeyComponent::Kind::HEURISTIC:
        return heuristic_name(component.heuristic);
    case KeyComponent::Kind::NOVELTY: {
        string result = "w<";
        for (size_t i = 0; i < component.partition.size(); ++i) {
            if (i)
                result += ",";
            result += heuristic_name(component.partition[i]);
        }
        return result + ">";
    }
    case KeyComponent::Kind::NOT_PREFERRED:
        return "1-pref";
    case KeyComponent::Kind::G:
        return "g";
    }
    return "?";
}

string dump_policy(const PolicySpec &spec) {
    ostringstream out;
    out << "policy " << spec.name << "\n";
    if (spec.is_alternation())
        out << "selection alternation boost=" << spec.boost_amount << "\n";
    else
        out << "selection single\n";
    for (size_t i = 0; i < spec.sublists.size(); ++i) {
        const SublistSpec &sublist = spec.sublists[i];
        out << "sublist " << i << " " << sublist.label << " key=<";
        for (size_t j = 0; j < sublist.key.size(); ++j) {
            if (j)
                out << ",";
            out << describe_component(sublist.key[j]);
        }
        out << "> then fifo admit="
            << (sublist.admission == Admission::ALL ? "all" : "preferred") << "\n";
    }
    return out.str();
}
}
