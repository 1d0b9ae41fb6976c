#pragma once

#include "planarcut/instance.hpp"

namespace planarcut {

// Exhaustive ground truth. Labeling enumeration assigns every vertex to one
// of the p clusters (terminals pinned); the minimum over labelings of the
// weight of label-crossing edges is the exact MinMCC value.

struct OracleLimits {
    int max_n_p2 = 16;   // p == 2
    int max_n_small_p = 12;  // p <= 4
    int max_n_any = 10;  // p >= 5
};

CutSolution oracle_mcc(const MCCInstance& inst, const OracleLimits& lim = {});
CutSolution oracle_minmc(const MinMCInstance& inst, const OracleLimits& lim = {});

/// Minimum-weight edge set separating S from T, by max-flow.
CutSolution min_cut(const PlanarGraph& g, const std::vector<int>& S, const std::vector<int>& T);

/// k=2 special case: the better of the two merge patterns
/// ({s1,s2} vs {s1',s2'}) and ({s1,s2'} vs {s1',s2}).
CutSolution two_pair_multicut(const MinMCInstance& inst);

}  // namespace planarcut
