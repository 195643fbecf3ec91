// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PSM_ORACLE_H_
#define PSM_ORACLE_H_

#include <cstdint>
#include <vector>

#include "psm/instance.h"
#include "psm/item_set.h"

namespace psm {

// Default cap on the number of candidate tuples an oracle may scan.
inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

struct OracleResult {
  double opt_value = 0.0;
  std::vector<ItemSet> argmax_sets;
  std::uint64_t enumerated_count = 0;
};

// Exhaustive optimum of the two-candidate objective. Scans every unordered
// pair of sets of size <= k (N(N+1)/2 pairs for N = #sets) and returns the
// lexicographically smallest maximizing pair. opt_value equals
// PairObjective(argmax_sets[0], argmax_sets[1]) exactly.
OracleResult ExactPairSolve(const Instance& inst,
                            std::uint64_t budget = kDefaultOracleBudget);

// Exhaustive optimum of the partition relaxation: the largest value of
// max_S sum_{i in A} f_i(S) + max_S sum_{i in B} f_i(S) over all 2^m splits
// (A, B). argmax_sets holds the two per-group maximizers of the best split;
// opt_value is the relaxed value, which can exceed their pair objective.
// enumerated_count is 2^m * N.
OracleResult ExactP1Solve(const Instance& inst,
                          std::uint64_t budget = kDefaultOracleBudget);

// Exhaustive optimum of the objective with `candidates` sets, scanning every
// multiset of that many sets of size <= k (C(N + l - 1, l) tuples). With
// candidates == 2 this coincides with ExactPairSolve.
OracleResult ExactMultiSolve(const Instance& inst, int candidates,
                             std::uint64_t budget = kDefaultOracleBudget);

}  // namespace psm

#endif  // PSM_ORACLE_H_
