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

#include "psm/maximize.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "psm/combinatorics.h"
#include "psm/errors.h"
#include "psm/objective.h"

namespace psm {
namespace {

void CheckGroup(const Instance& inst, std::span<const int> group) {
  for (int i : group) inst.function(i);  // throws IndexError when out of range
}

int ClampK(const Instance& inst, int k) {
  if (k < 1) throw ArgumentError("cardinality bound must be positive");
  return std::min(k, inst.n());
}

// Total marginal gain of `item` for the group, given the per-function values
// at `current`. Summed per function so every caller gets identical bits.
double GroupGain(const Instance& inst, std::span<const int> group,
                 const std::vector<double>& base, const ItemSet& current,
                 int item) {
  const ItemSet extended = current.With(item);
  double gain = 0.0;
  for (std::size_t j = 0; j < group.size(); ++j) {
    gain += Evaluate(inst.function(group[j]), extended) - base[j];
  }
  return gain;
}

struct Candidate {
  double bound;
  int item;
  int round;  // round in which `bound` was computed
};

// Max-heap order: larger bound first, then lower item index.
struct CandidateLess {
  bool operator()(const Candidate& a, const Candidate& b) const {
    if (a.bound != b.bound) return a.bound < b.bound;
    return a.item > b.item;
  }
};

}  // namespace

ItemSet GreedyMax(const Instance& inst, std::span<const int> group, int k) {
  CheckGroup(inst, group);
  const int rounds = ClampK(inst, k);

  std::priority_queue<Candidate, std::vector<Candidate>, CandidateLess> queue;
  for (int x = 0; x < inst.n(); ++x) {
    queue.push({std::numeric_limits<double>::infinity(), x, -1});
  }

  ItemSet current;
  std::vector<double> base(group.size(), 0.0);
  double base_total = 0.0;
  std::vector<Candidate> popped;
  for (int round = 0; round < rounds; ++round) {
    // Refresh stale bounds until the best entry is current.
    while (queue.top().round != round) {
      Candidate c = queue.top();
      queue.pop();
      c.bound = GroupGain(inst, group, base, current, c.item);
      c.round = round;
      queue.push(c);
    }
    // Floating-point noise can make a stale bound undershoot its true gain by
    // a few ulps, so re-check everything within `slack` of the leader before
    // committing to it.
    const double leader = queue.top().bound;
    const double slack = 1e-9 * (1.0 + std::abs(base_total) + std::abs(leader));
    popped.clear();
    while (!queue.empty() && queue.top().bound >= leader - slack) {
      Candidate c = queue.top();
      queue.pop();
      if (c.round != round) {
        c.bound = GroupGain(inst, group, base, current, c.item);
        c.round = round;
      }
      popped.push_back(c);
    }
    auto best = std::min_element(popped.begin(), popped.end(),
                                 [](const Candidate& a, const Candidate& b) {
                                   return CandidateLess()(b, a);
                                 });
    const int chosen = best->item;
    for (const auto& c : popped) {
      if (c.item != chosen) queue.push(c);
    }

    current = current.With(chosen);
    base_total = 0.0;
    for (std::size_t j = 0; j < group.size(); ++j) {
      base[j] = Evaluate(inst.function(group[j]), current);
      base_total += base[j];
    }
  }
  return current;
}

ItemSet ExactMax(const Instance& inst, std::span<const int> group, int k,
                 std::uint64_t budget) {
  CheckGroup(inst, group);
  const int size = ClampK(inst, k);
  const std::uint64_t count = Binomial(inst.n(), size);
  if (count > budget) {
    throw ResourceError("exact_max would enumerate C(" +
                        std::to_string(inst.n()) + ", " +
                        std::to_string(size) + ") = " + std::to_string(count) +
                        " sets, budget exact_max is " + std::to_string(budget));
  }

  std::vector<int> combo(size);
  for (int i = 0; i < size; ++i) combo[i] = i;
  ItemSet best = ItemSet::Prefix(size);
  double best_value = GroupEvaluate(inst, group, best);
  while (NextCombination(combo, inst.n())) {
    ItemSet candidate = ItemSet::FromItems(combo);
    const double value = GroupEvaluate(inst, group, candidate);
    if (value > best_value) {
      best_value = value;
      best = std::move(candidate);
    }
  }
  return best;
}

void InnerSolver::CheckFeasible(const Instance& inst) const {
  if (kind_ != InnerKind::kExact) return;
  const std::uint64_t count = Binomial(inst.n(), inst.k());
  if (count > exact_budget_) {
    throw ResourceError("exact inner solver would enumerate C(" +
                        std::to_string(inst.n()) + ", " +
                        std::to_string(inst.k()) + ") = " +
                        std::to_string(count) +
                        " sets, budget exact_max is " +
                        std::to_string(exact_budget_));
  }
}

ItemSet InnerSolver::Solve(const Instance& inst,
                           std::span<const int> group) const {
  if (kind_ == InnerKind::kExact) {
    return ExactMax(inst, group, inst.k(), exact_budget_);
  }
  return GreedyMax(inst, group, inst.k());
}

}  // namespace psm
