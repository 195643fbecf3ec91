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

#ifndef PSM_COMBINATORICS_H_
#define PSM_COMBINATORICS_H_

#include <cstdint>
#include <limits>
#include <vector>

#include "psm/item_set.h"

namespace psm {

inline constexpr std::uint64_t kSaturated =
    std::numeric_limits<std::uint64_t>::max();

// a + b and a * b, saturating at kSaturated instead of wrapping.
std::uint64_t SaturatingAdd(std::uint64_t a, std::uint64_t b);
std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b);

// C(n, r), saturating.
std::uint64_t Binomial(int n, int r);

// Number of subsets of an n-set with at most r elements, saturating.
std::uint64_t SubsetsUpTo(int n, int r);

// Number of ways to split an m-set into at most `groups` unlabeled blocks
// (sum of Stirling numbers of the second kind), saturating.
std::uint64_t PartitionsIntoAtMost(int m, int groups);

// Every subset of {0, ..., n-1} with at most r elements, in ItemSet order
// (lexicographic on the sorted item lists, so the empty set comes first).
std::vector<ItemSet> AllSubsetsUpTo(int n, int r);

// Steps `combo` (sorted, distinct values in [0, n)) to the next combination
// of the same size in lexicographic order. Returns false after the last one.
bool NextCombination(std::vector<int>& combo, int n);

}  // namespace psm

#endif  // PSM_COMBINATORICS_H_
