#pragma once

#include <string>
#include <vector>

namespace altradix {

struct SuiteResult {
    std::string name;
    long long cases = 0;
    long long failures = 0;
    std::string notes; // informational comparisons that are reported, not asserted

    bool ok() const { return failures == 0; }
};

/*
 * Randomized cross-checks of every module against independent oracles:
 * closed forms vs long partial sums, round trips, digit identities, duality,
 * tiling of cylinders, encoder/evaluator agreement.  `trials_scale`
 * multiplies the per-suite case counts; `seed` makes runs reproducible.
 */
std::vector<SuiteResult> run_selfcheck(long long trials_scale = 1,
                                       unsigned long long seed = 1);

} // namespace altradix
