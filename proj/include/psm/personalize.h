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

#ifndef PSM_PERSONALIZE_H_
#define PSM_PERSONALIZE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "psm/instance.h"
#include "psm/item_set.h"
#include "psm/maximize.h"
#include "psm/random.h"

namespace psm {

inline constexpr int kDefaultPartitionCap = 20;
inline constexpr std::uint64_t kDefaultMultiPartitionBudget = 1'000'000;

// Disjoint groups of function indices covering {0, ..., m-1}. Groups may be
// empty; each group is sorted.
struct Partition {
  std::vector<std::vector<int>> groups;

  friend bool operator==(const Partition&, const Partition&) = default;
};

// All 2^(m-1) unordered two-way splits (A, B) of {0, ..., m-1}, with function
// 0 always in A. The first split is ({0}, rest) and the last is (all, {}).
// Throws ResourceError if m exceeds `cap`.
std::vector<Partition> EnumeratePartitions(int m, int cap = kDefaultPartitionCap);

// All splits of {0, ..., m-1} into at most `groups` unlabeled blocks, each
// padded with empty groups to exactly `groups` entries. Blocks are labelled
// by first appearance (function 0 is in group 0). With groups == 2 the
// sequence is exactly EnumeratePartitions(m). Throws ResourceError if the
// count exceeds `budget`.
std::vector<Partition> EnumerateGroupings(int m, int groups,
                                          std::uint64_t budget);

// Puts each function into group 0 (A) independently with probability 1/2,
// consuming exactly m outputs of `rng` (function i uses the i-th output).
Partition RandomPartition(int m, SplitMix64& rng);

// The partition of sampling round `round` for `seed`: RandomPartition over
// stream positions [round * m, (round + 1) * m).
Partition SampledPartition(std::uint64_t seed, std::uint64_t round, int m);

// Expectation guarantee of the sampling algorithm after `rounds` rounds:
//   factor = alpha * max{1/2, gamma * (1/2 + eps / sqrt(m))},
//   gamma  = 1 - (1/2 + eps * e / pi)^rounds.
struct BoundFactor {
  double gamma = 0.0;
  // alpha * gamma * (1/2 + eps / sqrt(m)).
  double gamma_term = 0.0;
  double factor = 0.0;
  // eps >= pi / (2e): the expectation bound says nothing and the factor
  // falls back to alpha / 2. gamma and gamma_term are reported as 0.
  bool vacuous = false;
};

BoundFactor GammaBound(int rounds, double eps, int m, double alpha);

struct ExpectationBound {
  double eps = 0.0;
  BoundFactor bound;
};

// One partition evaluated by a solver.
struct RoundRecord {
  int index = 0;
  Partition partition;
  std::vector<ItemSet> sets;
  // sum_{i in groups[g]} f_i(sets[g]).
  std::vector<double> group_values;
  double objective = 0.0;
  // Whether this round replaced the incumbent.
  bool incumbent = false;
  double best_so_far = 0.0;
};

struct SolveReport {
  std::string algorithm;
  std::vector<ItemSet> sets;
  double objective = 0.0;
  double certified_ratio = 0.0;
  std::vector<RoundRecord> rounds;
  std::optional<std::uint64_t> seed;
  std::vector<ExpectationBound> expectation_bounds;
  std::vector<std::string> warnings;
};

struct SolveOptions {
  // Rounds are evaluated on up to this many threads. Results do not depend
  // on the value.
  int workers = 1;
  int partition_cap = kDefaultPartitionCap;
  std::uint64_t multi_partition_budget = kDefaultMultiPartitionBudget;
};

// Tries every two-way split of the functions, solves each side with `inner`
// and keeps the best pair. A round replaces the incumbent when its objective
// is >= the incumbent's, so among equal values the last enumerated wins.
// certified_ratio is inner.alpha().
SolveReport EnumerationSolve(const Instance& inst, const InnerSolver& inner,
                             const SolveOptions& options = {});

// Same keep-if-better loop over `rounds` random splits drawn from `seed`.
// certified_ratio is inner.alpha() / 2, which holds for every single round;
// the expectation bounds for each eps in `eps_list` are recorded alongside.
SolveReport SamplingSolve(const Instance& inst, int rounds, std::uint64_t seed,
                          const InnerSolver& inner,
                          std::span<const double> eps_list = {},
                          const SolveOptions& options = {});

// Generalization to `candidates` >= 2 sets: enumerates every split of the
// functions into at most that many groups. Empty groups get the inner
// solver's default set. With candidates == 2 the result matches
// EnumerationSolve exactly.
SolveReport MultiEnumerationSolve(const Instance& inst, int candidates,
                                  const InnerSolver& inner,
                                  const SolveOptions& options = {});

}  // namespace psm

#endif  // PSM_PERSONALIZE_H_
