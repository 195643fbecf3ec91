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

#ifndef PSM_MAXIMIZE_H_
#define PSM_MAXIMIZE_H_

#include <cstdint>
#include <span>
#include <string_view>

#include "psm/instance.h"
#include "psm/item_set.h"

namespace psm {

// Default cap on the number of candidate sets ExactMax may enumerate.
inline constexpr std::uint64_t kDefaultExactBudget = 2'000'000;

// 1 - 1/e, the guarantee of the greedy algorithm for monotone submodular
// objectives under a cardinality constraint.
inline constexpr double kGreedyAlpha = 1.0 - 0.36787944117144233;

// Greedy for max_{|S| <= k} sum_{i in group} f_i(S).
//
// Runs min(k, n) rounds; each round adds the item with the largest total
// marginal gain, breaking ties toward the lowest item index. Gains are
// re-evaluated lazily from a priority queue of stale upper bounds, but the
// returned set is always the one the plain O(nk) greedy would produce under
// the same tie rule. k larger than n is clamped. An empty group yields
// {0, ..., min(k, n)-1}.
ItemSet GreedyMax(const Instance& inst, std::span<const int> group, int k);

// Exhaustive maximizer of sum_{i in group} f_i(S) over |S| <= k. Scans the
// sets of size exactly min(k, n) in lexicographic order and keeps the first
// one reaching the maximum, which for monotone families is also a maximizer
// over all smaller sets. Throws ResourceError when C(n, min(k, n)) exceeds
// `budget`.
ItemSet ExactMax(const Instance& inst, std::span<const int> group, int k,
                 std::uint64_t budget = kDefaultExactBudget);

enum class InnerKind { kGreedy, kExact };

// The pluggable subroutine used by the partition algorithms: an
// alpha-approximate solver for a single group of functions.
class InnerSolver {
 public:
  static InnerSolver Greedy() { return InnerSolver(InnerKind::kGreedy, 0); }
  static InnerSolver Exact(std::uint64_t budget = kDefaultExactBudget) {
    return InnerSolver(InnerKind::kExact, budget);
  }

  InnerKind kind() const { return kind_; }
  std::uint64_t exact_budget() const { return exact_budget_; }

  // The approximation factor this solver certifies.
  double alpha() const { return kind_ == InnerKind::kExact ? 1.0 : kGreedyAlpha; }

  std::string_view name() const {
    return kind_ == InnerKind::kExact ? "exact" : "greedy";
  }

  // Throws ResourceError up front if this is an exact solver and the
  // instance is too large for its budget.
  void CheckFeasible(const Instance& inst) const;

  ItemSet Solve(const Instance& inst, std::span<const int> group) const;

 private:
  InnerSolver(InnerKind kind, std::uint64_t budget)
      : kind_(kind), exact_budget_(budget) {}

  InnerKind kind_;
  std::uint64_t exact_budget_;
};

}  // namespace psm

#endif  // PSM_MAXIMIZE_H_
