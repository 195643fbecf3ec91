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

#ifndef PSM_ITEM_SET_H_
#define PSM_ITEM_SET_H_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace psm {

// A subset of the ground set {0, ..., n-1}, stored as a sorted list of
// distinct item indices. Equality and ordering are lexicographic on that
// list, so {0} < {0, 1} < {0, 2} < {1}.
class ItemSet {
 public:
  ItemSet() = default;
  ItemSet(std::initializer_list<int> items);

  // Sorts and removes duplicates. Negative indices raise IndexError.
  static ItemSet FromItems(std::vector<int> items);

  // The first `count` items {0, ..., count-1}.
  static ItemSet Prefix(int count);

  std::span<const int> items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  bool contains(int item) const;

  // Largest item index, or -1 for the empty set.
  int max_item() const { return items_.empty() ? -1 : items_.back(); }

  // Copy of this set with `item` inserted at its sorted position.
  ItemSet With(int item) const;

  bool IsSubsetOf(const ItemSet& other) const;

  std::string ToString() const;

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  friend bool operator==(const ItemSet&, const ItemSet&) = default;
  friend auto operator<=>(const ItemSet& a, const ItemSet& b) {
    return a.items_ <=> b.items_;
  }

 private:
  std::vector<int> items_;
};

}  // namespace psm

#endif  // PSM_ITEM_SET_H_
