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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "psm/errors.h"
#include "psm/objective.h"
#include "psm/oracle.h"
#include "psm/personalize.h"
#include "psm/report_io.h"
#include "test_support.h"

namespace psm {
namespace {

using ::psm::testing::Fixture;

// f_0 wants item 0, f_1 wants item 2; with k = 1 only two candidates can
// serve both.
Instance FavoriteSplit() {
  return Instance::Create(3, 1, {Modular{{5, 0, 0}}, Modular{{0, 0, 7}}});
}

Instance Orthogonal() {
  return Instance::Create(3, 1, {Modular{{5, 0, 0}}, Modular{{0, 6, 0}},
                                 Modular{{0, 0, 7}}});
}

// First seed whose round 0 separates functions 0 and 1; pinned below.
constexpr std::uint64_t kSeparatingSeed = 0;

TEST(EnumeratePartitionsTest, SmallCases) {
  const auto one = EnumeratePartitions(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].groups, (std::vector<std::vector<int>>{{0}, {}}));

  const auto two = EnumeratePartitions(2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].groups, (std::vector<std::vector<int>>{{0}, {1}}));
  EXPECT_EQ(two[1].groups, (std::vector<std::vector<int>>{{0, 1}, {}}));
}

TEST(EnumeratePartitionsTest, FourFunctionsAreDistinct) {
  const auto parts = EnumeratePartitions(4);
  ASSERT_EQ(parts.size(), 8u);
  std::set<std::set<std::vector<int>>> unordered;
  for (const auto& p : parts) {
    ASSERT_EQ(p.groups.size(), 2u);
    EXPECT_EQ(p.groups[0].front(), 0);
    unordered.insert({p.groups[0], p.groups[1]});
  }
  EXPECT_EQ(unordered.size(), 8u);
  EXPECT_EQ(parts.front().groups[0], std::vector<int>{0});
  EXPECT_EQ(parts.back().groups[0], (std::vector<int>{0, 1, 2, 3}));
}

TEST(EnumeratePartitionsTest, Cap) {
  EXPECT_THROW(EnumeratePartitions(21), ResourceError);
  EXPECT_THROW(EnumeratePartitions(5, 4), ResourceError);
  EXPECT_THROW(EnumeratePartitions(0), ArgumentError);
  EXPECT_THROW(EnumerateGroupings(10, 3, 100), ResourceError);
}

TEST(EnumerateGroupingsTest, TwoGroupsMatchPartitions) {
  for (int m = 1; m <= 6; ++m) {
    EXPECT_EQ(EnumerateGroupings(m, 2, 1000), EnumeratePartitions(m));
  }
}

TEST(EnumerateGroupingsTest, CoversEveryFunctionOnce) {
  const auto parts = EnumerateGroupings(4, 3, 1000);
  EXPECT_EQ(parts.size(), 1u + 7u + 6u);  // S(4,1) + S(4,2) + S(4,3)
  for (const auto& p : parts) {
    ASSERT_EQ(p.groups.size(), 3u);
    std::vector<int> all;
    for (const auto& g : p.groups) all.insert(all.end(), g.begin(), g.end());
    std::sort(all.begin(), all.end());
    EXPECT_EQ(all, (std::vector<int>{0, 1, 2, 3}));
  }
}

TEST(EnumerationSolveTest, SingleFunction) {
  const Instance inst = Instance::Create(3, 2, {Modular{{3, 1, 2}}});
  const SolveReport report = EnumerationSolve(inst, InnerSolver::Exact());
  EXPECT_EQ(report.objective, 5.0);
  EXPECT_EQ(report.sets[0], (ItemSet{0, 2}));
  EXPECT_EQ(report.certified_ratio, 1.0);
}

TEST(EnumerationSolveTest, SeparatesFavorites) {
  const SolveReport report = EnumerationSolve(FavoriteSplit(), InnerSolver::Exact());
  EXPECT_EQ(report.objective, 12.0);
  // The last split (all, {}) ties at 12 via the default set {0} and wins
  // under the >= rule, so the candidates come out in swapped order.
  std::vector<ItemSet> sets = report.sets;
  std::sort(sets.begin(), sets.end());
  EXPECT_EQ(sets, (std::vector<ItemSet>{{0}, {2}}));
  EXPECT_EQ(report.rounds[0].sets, (std::vector<ItemSet>{{0}, {2}}));
}

TEST(EnumerationSolveTest, ExactInnerRecoversOptimum) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance inst = Fixture(500 + seed, Family::kCoverage, 7, 2, 3);
    const SolveReport report = EnumerationSolve(inst, InnerSolver::Exact());
    const OracleResult opt = ExactPairSolve(inst);
    EXPECT_NEAR(report.objective, opt.opt_value, 1e-9) << seed;
    EXPECT_EQ(report.objective, MultiObjective(inst, report.sets));
    const SolveReport greedy = EnumerationSolve(inst, InnerSolver::Greedy());
    EXPECT_GE(greedy.objective, kGreedyAlpha * opt.opt_value - 1e-9);
  }
}

TEST(EnumerationSolveTest, LaterTiesReplaceIncumbent) {
  const Instance inst = Instance::Create(2, 1, {Modular{{1, 1}}, Modular{{1, 1}}});
  const SolveReport report = EnumerationSolve(inst, InnerSolver::Greedy());
  ASSERT_EQ(report.rounds.size(), 2u);
  EXPECT_EQ(report.rounds[0].objective, report.rounds[1].objective);
  EXPECT_TRUE(report.rounds[0].incumbent);
  EXPECT_TRUE(report.rounds[1].incumbent);
}

TEST(EnumerationSolveTest, ReportsClampedK) {
  const Instance inst = Instance::Create(3, 5, {Modular{{3, 1, 2}}});
  const SolveReport report = EnumerationSolve(inst, InnerSolver::Greedy());
  ASSERT_EQ(report.warnings.size(), 1u);
  EXPECT_NE(report.warnings[0].find("clamped"), std::string::npos);
}

TEST(RandomPartitionTest, SingleFunctionIsACoin) {
  int in_a = 0;
  SplitMix64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const Partition p = RandomPartition(1, rng);
    ASSERT_EQ(p.groups[0].size() + p.groups[1].size(), 1u);
    in_a += static_cast<int>(p.groups[0].size());
  }
  EXPECT_GT(in_a, 400);
  EXPECT_LT(in_a, 600);
}

TEST(RandomPartitionTest, Deterministic) {
  SplitMix64 a(42);
  SplitMix64 b(42);
  EXPECT_EQ(RandomPartition(8, a), RandomPartition(8, b));
  SplitMix64 c(42);
  EXPECT_EQ(SampledPartition(42, 0, 8), RandomPartition(8, c));
}

TEST(RandomPartitionTest, StreamPositions) {
  SplitMix64 rng(99);
  for (std::uint64_t round = 0; round < 20; ++round) {
    EXPECT_EQ(RandomPartition(5, rng), SampledPartition(99, round, 5));
  }
  // Function i of round r reads output r*m + i.
  const Partition p = SampledPartition(7, 3, 4);
  for (int i = 0; i < 4; ++i) {
    const bool in_a = (SplitMix64::At(7, 3 * 4 + i) >> 63) != 0;
    EXPECT_EQ(std::count(p.groups[0].begin(), p.groups[0].end(), i) == 1, in_a);
  }
}

TEST(RandomPartitionTest, MeanSizeIsHalf) {
  constexpr int kM = 8;
  constexpr int kSamples = 100000;
  SplitMix64 rng(12345);
  double total = 0.0;
  for (int s = 0; s < kSamples; ++s) total += RandomPartition(kM, rng).groups[0].size();
  const double mean = total / kSamples;
  const double sigma = std::sqrt(kM / 4.0 / kSamples);
  EXPECT_NEAR(mean, kM / 2.0, 3 * sigma);
}

TEST(SamplingSolveTest, SingleRoundHalfGuarantee) {
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    const SolveReport report =
        SamplingSolve(FavoriteSplit(), 1, seed, InnerSolver::Exact());
    EXPECT_GE(report.objective, 6.0);
    EXPECT_EQ(report.certified_ratio, 0.5);
    EXPECT_EQ(report.seed, seed);
  }
}

TEST(SamplingSolveTest, PinnedSeedFindsSeparation) {
  const Partition first = SampledPartition(kSeparatingSeed, 0, 2);
  EXPECT_EQ(first.groups[0].size(), 1u);
  EXPECT_EQ(first.groups[1].size(), 1u);
  const SolveReport report =
      SamplingSolve(FavoriteSplit(), 8, kSeparatingSeed, InnerSolver::Exact());
  EXPECT_EQ(report.objective, 12.0);
}

TEST(SamplingSolveTest, BestSoFarIsMonotone) {
  const Instance inst = Fixture(77, Family::kMixed, 7, 2, 6);
  const SolveReport one = SamplingSolve(inst, 1, 5, InnerSolver::Greedy());
  const SolveReport ten = SamplingSolve(inst, 10, 5, InnerSolver::Greedy());
  EXPECT_GE(ten.objective, one.objective);
  EXPECT_EQ(ten.rounds[0].sets, one.rounds[0].sets);
  for (std::size_t r = 1; r < ten.rounds.size(); ++r) {
    EXPECT_GE(ten.rounds[r].best_so_far, ten.rounds[r - 1].best_so_far);
  }
  EXPECT_EQ(ten.rounds.back().best_so_far, ten.objective);
  EXPECT_NEAR(ten.certified_ratio, kGreedyAlpha / 2, 1e-15);
}

TEST(SamplingSolveTest, RecordsExpectationBounds) {
  const Instance inst = Fixture(77, Family::kMixed, 7, 2, 6);
  const std::vector<double> eps = {0.0, 0.1, 0.9};
  const SolveReport report = SamplingSolve(inst, 4, 5, InnerSolver::Exact(), eps);
  ASSERT_EQ(report.expectation_bounds.size(), 3u);
  EXPECT_EQ(report.expectation_bounds[0].bound.factor, 0.5);
  EXPECT_TRUE(report.expectation_bounds[2].bound.vacuous);
  EXPECT_EQ(report.warnings.size(), 1u);
  EXPECT_THROW(SamplingSolve(inst, 0, 5, InnerSolver::Exact()), ArgumentError);
}

// Direct evaluation of the expectation-bound formula.
double BoundOracle(int rounds, double eps, int m, double alpha) {
  const double gamma = 1.0 - std::pow(0.5 + eps * std::exp(1.0) / std::acos(-1.0), rounds);
  return std::max(0.5, gamma * (0.5 + eps / std::sqrt(m))) * alpha;
}

TEST(GammaBoundTest, HandValues) {
  EXPECT_EQ(GammaBound(3, 0.0, 7, 1.0).factor, 0.5);
  EXPECT_DOUBLE_EQ(GammaBound(3, 0.0, 7, 1.0).gamma, 0.875);

  const BoundFactor one = GammaBound(1, 0.1, 100, 1.0);
  EXPECT_NEAR(one.gamma, 0.413474, 1e-6);
  EXPECT_NEAR(one.gamma_term, 0.413474 * 0.51, 1e-6);
  EXPECT_EQ(one.factor, 0.5);

  const BoundFactor five = GammaBound(5, 0.1, 100, 1.0);
  EXPECT_NEAR(five.gamma, 0.930587, 1e-6);
  EXPECT_EQ(five.factor, 0.5);
}

TEST(GammaBoundTest, MatchesFormulaAndIsMonotone) {
  for (int m : {1, 4, 100}) {
    for (double eps : {0.0, 0.2, 0.4, 0.55}) {
      for (double alpha : {1.0, kGreedyAlpha}) {
        double previous = 0.0;
        for (int rounds = 1; rounds <= 40; ++rounds) {
          const double factor = GammaBound(rounds, eps, m, alpha).factor;
          EXPECT_NEAR(factor, BoundOracle(rounds, eps, m, alpha), 1e-15);
          EXPECT_GE(factor, previous);
          EXPECT_GE(factor, alpha / 2);
          previous = factor;
        }
      }
    }
  }
  // A bound above 1/2 appears once eps/sqrt(m) is large enough.
  EXPECT_GT(GammaBound(30, 0.5, 1, 1.0).factor, 0.5);
}

TEST(GammaBoundTest, VacuousAndInvalid) {
  const double edge = std::numbers::pi / (2 * std::numbers::e);
  const BoundFactor b = GammaBound(3, edge + 1e-9, 10, kGreedyAlpha);
  EXPECT_TRUE(b.vacuous);
  EXPECT_EQ(b.factor, kGreedyAlpha / 2);
  EXPECT_THROW(GammaBound(0, 0.1, 10, 1.0), ArgumentError);
  EXPECT_THROW(GammaBound(1, -0.1, 10, 1.0), ArgumentError);
  EXPECT_THROW(GammaBound(1, 0.1, 10, 1.5), ArgumentError);
}

TEST(MultiEnumerationSolveTest, Orthogonal) {
  const Instance inst = Orthogonal();
  EXPECT_EQ(MultiEnumerationSolve(inst, 3, InnerSolver::Exact()).objective, 18.0);
  const double two = MultiEnumerationSolve(inst, 2, InnerSolver::Exact()).objective;
  EXPECT_EQ(two, ExactMultiSolve(inst, 2).opt_value);
  EXPECT_EQ(two, 13.0);
  EXPECT_THROW(MultiEnumerationSolve(inst, 1, InnerSolver::Exact()), ArgumentError);
}

TEST(MultiEnumerationSolveTest, TwoCandidatesMatchEnumeration) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Instance inst = Fixture(seed, Family::kMixed, 7, 2, 5);
    for (const InnerSolver& inner : {InnerSolver::Greedy(), InnerSolver::Exact()}) {
      const SolveReport multi = MultiEnumerationSolve(inst, 2, inner);
      const SolveReport pair = EnumerationSolve(inst, inner);
      EXPECT_EQ(multi.sets, pair.sets);
      EXPECT_EQ(multi.objective, pair.objective);
    }
  }
}

TEST(MultiEnumerationSolveTest, NonDecreasingInCandidates) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Instance inst = Fixture(seed, Family::kCoverage, 6, 1, 4);
    double previous = 0.0;
    for (int l = 2; l <= 5; ++l) {
      const double value = MultiEnumerationSolve(inst, l, InnerSolver::Exact()).objective;
      EXPECT_GE(value, previous - 1e-9);
      previous = value;
    }
  }
}

TEST(SolveDeterminismTest, WorkersDoNotChangeReports) {
  const Instance inst = Fixture(31, Family::kMixed, 9, 3, 7);
  const std::vector<double> eps = {0.0, 0.05, 0.1};
  auto dump = [](const SolveReport& r) { return SolveReportToJson(r, true).dump(); };
  for (int workers : {1, 3, 8}) {
    SolveOptions options;
    options.workers = workers;
    EXPECT_EQ(dump(EnumerationSolve(inst, InnerSolver::Greedy(), options)),
              dump(EnumerationSolve(inst, InnerSolver::Greedy())));
    EXPECT_EQ(dump(SamplingSolve(inst, 25, 9, InnerSolver::Greedy(), eps, options)),
              dump(SamplingSolve(inst, 25, 9, InnerSolver::Greedy(), eps)));
    EXPECT_EQ(dump(MultiEnumerationSolve(inst, 3, InnerSolver::Greedy(), options)),
              dump(MultiEnumerationSolve(inst, 3, InnerSolver::Greedy())));
  }
}

TEST(SolveDeterminismTest, WorkerErrorsPropagate) {
  const Instance inst = Fixture(1, Family::kModular, 30, 6, 3);
  SolveOptions options;
  options.workers = 4;
  EXPECT_THROW(EnumerationSolve(inst, InnerSolver::Exact(10), options), ResourceError);
}

}  // namespace
}  // namespace psm
