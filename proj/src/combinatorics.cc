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

#include "psm/combinatorics.h"

#include <algorithm>

namespace psm {

std::uint64_t SaturatingAdd(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

std::uint64_t Binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  // Multiplicative formula; every prefix product is itself a binomial, so the
  // division is exact. Saturate once the running value overflows.
  unsigned __int128 value = 1;
  for (int i = 1; i <= r; ++i) {
    value = value * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (value > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(value);
}

std::uint64_t SubsetsUpTo(int n, int r) {
  std::uint64_t total = 0;
  for (int s = 0; s <= std::min(n, r); ++s) {
    total = SaturatingAdd(total, Binomial(n, s));
  }
  return total;
}

std::uint64_t PartitionsIntoAtMost(int m, int groups) {
  if (m == 0) return 1;
  // stirling[j] holds S(i, j) for the current i.
  std::vector<std::uint64_t> stirling(groups + 1, 0);
  stirling[0] = 1;
  for (int i = 1; i <= m; ++i) {
    for (int j = std::min(i, groups); j >= 1; --j) {
      stirling[j] = SaturatingAdd(SaturatingMul(j, stirling[j]), stirling[j - 1]);
    }
    stirling[0] = 0;
  }
  std::uint64_t total = 0;
  for (int j = 1; j <= groups; ++j) total = SaturatingAdd(total, stirling[j]);
  return total;
}

std::vector<ItemSet> AllSubsetsUpTo(int n, int r) {
  std::vector<ItemSet> out;
  // Depth-first over sorted prefixes emits exactly the lexicographic order.
  std::vector<int> prefix;
  auto visit = [&](auto&& self, int next) -> void {
    out.push_back(ItemSet::FromItems(prefix));
    if (static_cast<int>(prefix.size()) == r) return;
    for (int x = next; x < n; ++x) {
      prefix.push_back(x);
      self(self, x + 1);
      prefix.pop_back();
    }
  };
  visit(visit, 0);
  return out;
}

bool NextCombination(std::vector<int>& combo, int n) {
  const int r = static_cast<int>(combo.size());
  int i = r - 1;
  while (i >= 0 && combo[i] == n - r + i) --i;
  if (i < 0) return false;
  ++combo[i];
  for (int j = i + 1; j < r; ++j) combo[j] = combo[j - 1] + 1;
  return true;
}

}  // namespace psm
