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

#include "psm/oracle.h"

#include <algorithm>
#include <string>

#include "psm/combinatorics.h"
#include "psm/errors.h"
#include "psm/objective.h"

namespace psm {
namespace {

void CheckBudget(std::uint64_t count, std::uint64_t budget,
                 const std::string& what) {
  if (count > budget) {
    throw ResourceError(what + " would scan " + std::to_string(count) +
                        " tuples, budget oracle_tuples is " +
                        std::to_string(budget));
  }
}

// Candidate sets of size <= k with their per-function values.
struct SetTable {
  std::vector<ItemSet> sets;
  std::vector<std::vector<double>> values;
};

SetTable BuildTable(const Instance& inst) {
  SetTable table;
  table.sets = AllSubsetsUpTo(inst.n(), inst.k());
  table.values.reserve(table.sets.size());
  for (const auto& s : table.sets) table.values.push_back(FunctionValues(inst, s));
  return table;
}

}  // namespace

OracleResult ExactPairSolve(const Instance& inst, std::uint64_t budget) {
  return ExactMultiSolve(inst, 2, budget);
}

OracleResult ExactMultiSolve(const Instance& inst, int candidates,
                             std::uint64_t budget) {
  if (candidates < 1) throw ArgumentError("need at least one candidate");
  const std::uint64_t sets = SubsetsUpTo(inst.n(), inst.k());
  const std::uint64_t tuples =
      sets == kSaturated
          ? kSaturated
          : Binomial(static_cast<int>(std::min<std::uint64_t>(
                         sets + candidates - 1, 1u << 30)),
                     candidates);
  CheckBudget(tuples, budget,
              "exhaustive search over " + std::to_string(candidates) +
                  "-tuples of sets");

  const SetTable table = BuildTable(inst);
  const int count = static_cast<int>(table.sets.size());

  // Non-decreasing index tuples in lexicographic order; the first maximizer
  // found is the lexicographically smallest.
  std::vector<int> tuple(candidates, 0);
  std::vector<std::vector<double>> chosen(candidates);
  OracleResult result;
  bool first = true;
  while (true) {
    for (int j = 0; j < candidates; ++j) chosen[j] = table.values[tuple[j]];
    const double value = SumOfMaxima(chosen);
    ++result.enumerated_count;
    if (first || value > result.opt_value) {
      first = false;
      result.opt_value = value;
      result.argmax_sets.clear();
      for (int j : tuple) result.argmax_sets.push_back(table.sets[j]);
    }
    int pos = candidates - 1;
    while (pos >= 0 && tuple[pos] == count - 1) --pos;
    if (pos < 0) break;
    ++tuple[pos];
    for (int j = pos + 1; j < candidates; ++j) tuple[j] = tuple[pos];
  }
  return result;
}

OracleResult ExactP1Solve(const Instance& inst, std::uint64_t budget) {
  const int m = inst.m();
  if (m >= 63) throw ResourceError("partition relaxation oracle needs m < 63");
  const std::uint64_t splits = std::uint64_t{1} << m;
  CheckBudget(SaturatingMul(splits, SubsetsUpTo(inst.n(), inst.k())), budget,
              "partition relaxation oracle");

  const SetTable table = BuildTable(inst);
  // Best set for one side of a split, scanning every set of size <= k.
  auto best_for = [&](std::uint64_t mask, bool in_mask) {
    std::size_t best = 0;
    double best_value = -1.0;
    for (std::size_t s = 0; s < table.sets.size(); ++s) {
      double value = 0.0;
      for (int i = 0; i < m; ++i) {
        if (((mask >> i) & 1) == static_cast<std::uint64_t>(in_mask)) {
          value += table.values[s][i];
        }
      }
      if (value > best_value) {
        best_value = value;
        best = s;
      }
    }
    return std::make_pair(best, best_value);
  };

  OracleResult result;
  result.opt_value = -1.0;
  for (std::uint64_t mask = 0; mask < splits; ++mask) {
    const auto [a, a_value] = best_for(mask, true);
    const auto [b, b_value] = best_for(mask, false);
    result.enumerated_count += table.sets.size();
    if (a_value + b_value > result.opt_value) {
      result.opt_value = a_value + b_value;
      result.argmax_sets = {table.sets[a], table.sets[b]};
    }
  }
  return result;
}

}  // namespace psm
