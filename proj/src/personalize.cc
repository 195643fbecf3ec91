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

#include "psm/personalize.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "psm/combinatorics.h"
#include "psm/errors.h"
#include "psm/objective.h"
#include "psm/parallel.h"

namespace psm {
namespace {

void CheckFunctionCount(int m) {
  if (m < 1) throw ArgumentError("need at least one function, got m=" + std::to_string(m));
}

RoundRecord EvaluateRound(const Instance& inst, const InnerSolver& inner,
                          int index, Partition partition) {
  RoundRecord record;
  record.index = index;
  std::vector<std::vector<double>> values;
  for (const auto& group : partition.groups) {
    ItemSet set = inner.Solve(inst, group);
    values.push_back(FunctionValues(inst, set));
    double group_value = 0.0;
    for (int i : group) group_value += values.back()[i];
    record.group_values.push_back(group_value);
    record.sets.push_back(std::move(set));
  }
  record.objective = SumOfMaxima(values);
  record.partition = std::move(partition);
  return record;
}

// Evaluates every round (possibly in parallel), then folds them in index
// order with the >= replacement rule.
SolveReport RunRounds(const Instance& inst, const InnerSolver& inner,
                      std::size_t count, int candidates,
                      const std::function<Partition(std::size_t)>& partition_of,
                      int workers) {
  inner.CheckFeasible(inst);
  SolveReport report;
  report.rounds.resize(count);
  internal::ParallelFor(count, workers, [&](std::size_t r) {
    report.rounds[r] =
        EvaluateRound(inst, inner, static_cast<int>(r), partition_of(r));
  });

  report.sets.assign(candidates, ItemSet());
  report.objective = 0.0;
  for (auto& round : report.rounds) {
    if (round.objective >= report.objective) {
      report.objective = round.objective;
      report.sets = round.sets;
      round.incumbent = true;
    }
    round.best_so_far = report.objective;
  }
  if (inst.k_clamped()) {
    report.warnings.push_back("k=" + std::to_string(inst.requested_k()) +
                              " exceeds n=" + std::to_string(inst.n()) +
                              "; clamped to " + std::to_string(inst.k()));
  }
  return report;
}

void EmitGroupings(int m, int groups, std::vector<int>& labels, int index,
                   int max_label, std::vector<Partition>& out) {
  if (index == m) {
    Partition p;
    p.groups.resize(groups);
    for (int i = 0; i < m; ++i) p.groups[labels[i]].push_back(i);
    out.push_back(std::move(p));
    return;
  }
  // Highest label first, so the two-way case starts at ({0}, rest) and ends
  // with everything in group 0.
  for (int label = std::min(max_label + 1, groups - 1); label >= 0; --label) {
    labels[index] = label;
    EmitGroupings(m, groups, labels, index + 1, std::max(max_label, label), out);
  }
}

}  // namespace

std::vector<Partition> EnumeratePartitions(int m, int cap) {
  CheckFunctionCount(m);
  if (m > cap) {
    throw ResourceError("enumerating partitions of m=" + std::to_string(m) +
                        " functions exceeds budget partition_cap=" +
                        std::to_string(cap));
  }
  return EnumerateGroupings(m, 2, kSaturated);
}

std::vector<Partition> EnumerateGroupings(int m, int groups,
                                          std::uint64_t budget) {
  CheckFunctionCount(m);
  if (groups < 2) throw ArgumentError("need at least two groups");
  const std::uint64_t count = PartitionsIntoAtMost(m, groups);
  if (count > budget) {
    throw ResourceError("splitting m=" + std::to_string(m) + " functions into <= " +
                        std::to_string(groups) + " groups gives " +
                        std::to_string(count) +
                        " partitions, budget multi_partitions is " +
                        std::to_string(budget));
  }
  std::vector<Partition> out;
  out.reserve(count);
  std::vector<int> labels(m, 0);
  EmitGroupings(m, groups, labels, 1, 0, out);
  return out;
}

Partition RandomPartition(int m, SplitMix64& rng) {
  CheckFunctionCount(m);
  Partition p;
  p.groups.resize(2);
  for (int i = 0; i < m; ++i) p.groups[rng.NextBit() ? 0 : 1].push_back(i);
  return p;
}

Partition SampledPartition(std::uint64_t seed, std::uint64_t round, int m) {
  SplitMix64 rng(seed);
  rng.Skip(round * static_cast<std::uint64_t>(m));
  return RandomPartition(m, rng);
}

BoundFactor GammaBound(int rounds, double eps, int m, double alpha) {
  if (rounds < 1) throw ArgumentError("number of rounds must be positive");
  if (m < 1) throw ArgumentError("number of functions must be positive");
  if (!std::isfinite(eps) || eps < 0.0) {
    throw ArgumentError("eps must be finite and non-negative");
  }
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw ArgumentError("alpha must lie in (0, 1]");
  }
  BoundFactor out;
  const double miss = 0.5 + eps * std::numbers::e / std::numbers::pi;
  if (miss >= 1.0) {
    out.vacuous = true;
    out.factor = alpha * 0.5;
    return out;
  }
  out.gamma = 1.0 - std::pow(miss, rounds);
  const double share = out.gamma * (0.5 + eps / std::sqrt(static_cast<double>(m)));
  out.gamma_term = alpha * share;
  out.factor = alpha * std::max(0.5, share);
  return out;
}

SolveReport EnumerationSolve(const Instance& inst, const InnerSolver& inner,
                             const SolveOptions& options) {
  const std::vector<Partition> partitions =
      EnumeratePartitions(inst.m(), options.partition_cap);
  SolveReport report = RunRounds(
      inst, inner, partitions.size(), 2,
      [&](std::size_t r) { return partitions[r]; }, options.workers);
  report.algorithm = "enumeration";
  report.certified_ratio = inner.alpha();
  return report;
}

SolveReport SamplingSolve(const Instance& inst, int rounds, std::uint64_t seed,
                          const InnerSolver& inner,
                          std::span<const double> eps_list,
                          const SolveOptions& options) {
  if (rounds < 1) throw ArgumentError("number of rounds must be positive");
  std::vector<ExpectationBound> bounds;
  for (double eps : eps_list) {
    bounds.push_back({eps, GammaBound(rounds, eps, inst.m(), inner.alpha())});
  }
  const int m = inst.m();
  SolveReport report = RunRounds(
      inst, inner, static_cast<std::size_t>(rounds), 2,
      [&](std::size_t r) { return SampledPartition(seed, r, m); },
      options.workers);
  report.algorithm = "sampling";
  report.certified_ratio = inner.alpha() / 2.0;
  report.seed = seed;
  for (const auto& b : bounds) {
    if (b.bound.vacuous) {
      report.warnings.push_back("eps=" + std::to_string(b.eps) +
                                " >= pi/(2e); expectation bound is vacuous, "
                                "reporting alpha/2");
    }
  }
  report.expectation_bounds = std::move(bounds);
  return report;
}

SolveReport MultiEnumerationSolve(const Instance& inst, int candidates,
                                  const InnerSolver& inner,
                                  const SolveOptions& options) {
  if (candidates < 2) throw ArgumentError("need at least two candidates");
  const std::vector<Partition> partitions = EnumerateGroupings(
      inst.m(), candidates, options.multi_partition_budget);
  SolveReport report = RunRounds(
      inst, inner, partitions.size(), candidates,
      [&](std::size_t r) { return partitions[r]; }, options.workers);
  report.algorithm = "multi_enumeration";
  report.certified_ratio = inner.alpha();
  return report;
}

}  // namespace psm
