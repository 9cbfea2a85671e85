#ifndef PLANNER_CONFIGS_CONFIGS_H
#define PLANNER_CONFIGS_CONFIGS_H

#include "planner/open_lists/policy.h"

#include <stdexcept>
#include <string>
#include <vector>

namespace configs {
class UnknownConfig : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/*
  Named configurations:

    lama          [h_ff, h_ff+, h_lm, h_lm+]
    bfws-f2       <w<h_ff>, h_ff, g>
    bfws-f4       <w<h_lm,h_ff>, h_lm, h_ff, g>
    bfws-f6       <w<h_lm,h_ff>, 1-pref, h_lm, w<h_ff>, h_ff, g>
    lama-w-X      lama's four sublists plus the novelty list X, for
                  X in f6, f4, f2-ff, f2-lm, wff, wlm, w
    nolan         [h_ff, h_ff+, h_lm+, f2<h_lm>]

  Ablations of the consolidated planner are written "ablation:" followed by
  a comma-separated subset of ff, ff+, lm, lm+ (possibly empty). They always
  end with the f2<h_lm> sublist.
*/
open_lists::PolicySpec build_config(const std::string &name);

std::vector<std::string> named_configs();
std::vector<std::string> ablation_configs();
}

#endif
