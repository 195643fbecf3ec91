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

#include "psm/objective.h"

#include <algorithm>
#include <string>

#include "psm/errors.h"

namespace psm {
namespace {

void CheckCardinality(const Instance& inst, const ItemSet& set) {
  if (static_cast<int>(set.size()) > inst.k()) {
    throw ConstraintError("candidate " + set.ToString() + " has " +
                          std::to_string(set.size()) + " items, bound is " +
                          std::to_string(inst.k()));
  }
}

}  // namespace

double GroupEvaluate(const Instance& inst, std::span<const int> group,
                     const ItemSet& set) {
  double total = 0.0;
  for (int i : group) total += Evaluate(inst.function(i), set);
  return total;
}

std::vector<double> FunctionValues(const Instance& inst, const ItemSet& set) {
  std::vector<double> values;
  values.reserve(inst.m());
  for (const auto& f : inst.functions()) values.push_back(Evaluate(f, set));
  return values;
}

double SumOfMaxima(std::span<const std::vector<double>> values) {
  if (values.empty()) throw ArgumentError("need at least one candidate");
  const std::size_t m = values.front().size();
  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double best = values.front()[i];
    for (std::size_t j = 1; j < values.size(); ++j) {
      best = std::max(best, values[j][i]);
    }
    total += best;
  }
  return total;
}

double PairObjective(const Instance& inst, const ItemSet& first,
                     const ItemSet& second) {
  const ItemSet sets[] = {first, second};
  return MultiObjective(inst, sets);
}

double MultiObjective(const Instance& inst, std::span<const ItemSet> sets) {
  if (sets.empty()) throw ArgumentError("need at least one candidate set");
  std::vector<std::vector<double>> values;
  values.reserve(sets.size());
  for (const auto& s : sets) {
    CheckCardinality(inst, s);
    values.push_back(FunctionValues(inst, s));
  }
  return SumOfMaxima(values);
}

double LiftedObjective(const Instance& inst, const ItemSet& lifted) {
  const int n = inst.n();
  std::vector<int> first;
  std::vector<int> second;
  for (int e : lifted) {
    if (e >= 2 * n) {
      throw IndexError("lifted element " + std::to_string(e) +
                       " outside [0, " + std::to_string(2 * n) + ")");
    }
    (e < n ? first : second).push_back(e % n);
  }
  const std::vector<double> values[] = {
      FunctionValues(inst, ItemSet::FromItems(std::move(first))),
      FunctionValues(inst, ItemSet::FromItems(std::move(second)))};
  return SumOfMaxima(values);
}

}  // namespace psm
