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

#include "psm/item_set.h"

#include <algorithm>
#include <sstream>

#include "psm/errors.h"

namespace psm {

ItemSet::ItemSet(std::initializer_list<int> items)
    : ItemSet(FromItems(std::vector<int>(items))) {}

ItemSet ItemSet::FromItems(std::vector<int> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  if (!items.empty() && items.front() < 0) {
    throw IndexError("negative item index " + std::to_string(items.front()));
  }
  ItemSet set;
  set.items_ = std::move(items);
  return set;
}

ItemSet ItemSet::Prefix(int count) {
  ItemSet set;
  set.items_.reserve(std::max(count, 0));
  for (int i = 0; i < count; ++i) set.items_.push_back(i);
  return set;
}

bool ItemSet::contains(int item) const {
  return std::binary_search(items_.begin(), items_.end(), item);
}

ItemSet ItemSet::With(int item) const {
  if (item < 0) throw IndexError("negative item index " + std::to_string(item));
  ItemSet out;
  out.items_.reserve(items_.size() + 1);
  auto pos = std::lower_bound(items_.begin(), items_.end(), item);
  out.items_.insert(out.items_.end(), items_.begin(), pos);
  if (pos == items_.end() || *pos != item) out.items_.push_back(item);
  out.items_.insert(out.items_.end(), pos, items_.end());
  return out;
}

bool ItemSet::IsSubsetOf(const ItemSet& other) const {
  return std::includes(other.items_.begin(), other.items_.end(),
                       items_.begin(), items_.end());
}

std::string ItemSet::ToString() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i > 0) out << ", ";
    out << items_[i];
  }
  out << '}';
  return out.str();
}

}  // namespace psm
