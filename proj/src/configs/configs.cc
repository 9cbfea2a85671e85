#include "planner/configs/configs.h"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <sstream>

using namespace std;

namespace configs {
namespace {
using open_lists::Admission;
using open_lists::Heuristic;
using open_lists::KeyComponent;
using open_lists::PolicySpec;
using open_lists::SublistSpec;

constexpr Heuristic FF = Heuristic::FF;
constexpr Heuristic LM = Heuristic::LANDMARK_COUNT;

SublistSpec heuristic_list(Heuristic h, bool preferred_only) {
    string label = open_lists::heuristic_name(h) + (preferred_only ? "+" : "");
    return {label, {KeyComponent::heuristic_value(h)},
            preferred_only ? Admission::PREFERRED_ONLY : Admission::ALL};
}

SublistSpec f6_list() {
    return {"f6",
            {KeyComponent::novelty({LM, FF}), KeyComponent::not_preferred(),
             KeyComponent::heuristic_value(LM), KeyComponent::novelty({FF}),
             KeyComponent::heuristic_value(FF), KeyComponent::g()},
            Admission::ALL};
}

SublistSpec f4_list() {
    return {"f4",
            {KeyComponent::novelty({LM, FF}), KeyComponent::heuristic_value(LM),
             KeyComponent::heuristic_value(FF), KeyComponent::g()},
            Admission::ALL};
}

SublistSpec f2_list(Heuristic h) {
    return {"f2<" + open_lists::heuristic_name(h) + ">",
            {KeyComponent::novelty({h}), KeyComponent::heuristic_value(h),
             KeyComponent::g()},
            Admission::ALL};
}

SublistSpec width_list(vector<Heuristic> partition) {
    KeyComponent w = KeyComponent::novelty(move(partition));
    return {open_lists::describe_component(w), {w, KeyComponent::g()}, Admission::ALL};
}

vector<SublistSpec> lama_lists() {
    return {heuristic_list(FF, false), heuristic_list(FF, true),
            heuristic_list(LM, false), heuristic_list(LM, true)};
}

PolicySpec make_policy(const string &name, vector<SublistSpec> sublists) {
    PolicySpec spec;
    spec.name = name;
    spec.sublists = move(sublists);
    spec.boost_amount = 1000;
    return spec;
}

PolicySpec lama_with(const string &name, SublistSpec extra) {
    vector<SublistSpec> lists = lama_lists();
    lists.push_back(move(extra));
    return make_policy(name, move(lists));
}

const map<string, function<PolicySpec()>> &registry() {
    static const map<string, function<PolicySpec()>> configs = {
        {"lama", [] {return make_policy("lama", lama_lists());}},
        {"bfws-f2", [] {return make_policy("bfws-f2", {f2_list(FF)});}},
        {"bfws-f4", [] {return make_policy("bfws-f4", {f4_list()});}},
        {"bfws-f6", [] {return make_policy("bfws-f6", {f6_list()});}},
        {"lama-w-f6", [] {return lama_with("lama-w-f6", f6_list());}},
        {"lama-w-f4", [] {return lama_with("lama-w-f4", f4_list());}},
        {"lama-w-f2-ff", [] {return lama_with("lama-w-f2-ff", f2_list(FF));}},
        {"lama-w-f2-lm", [] {return lama_with("lama-w-f2-lm", f2_list(LM));}},
        {"lama-w-wff", [] {return lama_with("lama-w-wff", width_list({FF}));}},
        {"lama-w-wlm", [] {return lama_with("lama-w-wlm", width_list({LM}));}},
        {"lama-w-w", [] {return lama_with("lama-w-w", width_list({}));}},
        {"nolan", [] {
             return make_policy("nolan", {heuristic_list(FF, false), heuristic_list(FF, true),
                                          heuristic_list(LM, true), f2_list(LM)});
         }},
    };
    return configs;
}

const array<string, 4> ABLATION_TOKENS = {"ff", "ff+", "lm", "lm+"};

PolicySpec build_ablation(const string &name, const string &subset) {
    array<bool, 4> selected{};
    if (!subset.empty() && subset.back() == ',')
        throw UnknownConfig("empty sublist token in '" + name + "'");
    stringstream tokens(subset);
    string token;
    while (getline(tokens, token, ',')) {
        if (token.empty())
            throw UnknownConfig("empty sublist token in '" + name + "'");
        auto it = find(ABLATION_TOKENS.begin(), ABLATION_TOKENS.end(), token);
        if (it == ABLATION_TOKENS.end())
            throw UnknownConfig("unknown sublist '" + token + "' in '" + name +
                                "' (expected ff, ff+, lm, lm+)");
        size_t index = it - ABLATION_TOKENS.begin();
        if (selected[index])
            throw UnknownConfig("duplicate sublist '" + token + "' in '" + name + "'");
        selected[index] = true;
    }
    vector<SublistSpec> all = lama_lists();
    vector<SublistSpec> lists;
    for (size_t i = 0; i < all.size(); ++i) {
        if (selected[i])
            lists.push_back(all[i]);
    }
    lists.push_back(f2_list(LM));
    return make_policy(name, move(lists));
}
}

PolicySpec build_config(const string &name) {
    const string prefix = "ablation:";
    if (name.starts_with(prefix))
        return build_ablation(name, name.substr(prefix.size()));
    auto it = registry().find(name);
    if (it == registry().end())
        throw UnknownConfig("unknown configuration '" + name + "'");
    return it->second();
}

vector<string> named_configs() {
    return {"lama", "bfws-f2", "bfws-f4", "bfws-f6", "lama-w-f6", "lama-w-f4",
            "lama-w-f2-ff", "lama-w-f2-lm", "lama-w-wff", "lama-w-wlm", "lama-w-w",
            "nolan"};
}

vector<string> ablation_configs() {
    vector<string> result;
    for (int mask = 0; mask < 16; ++mask) {
        string name = "ablation:";
        bool first = true;
        for (int i = 0; i < 4; ++i) {
            if (mask & (1 << i)) {
                name += (first ? "" : ",") + ABLATION_TOKENS[i];
                first = false;
            }
        }
        result.push_back(name);
    }
    return result;
}
}
