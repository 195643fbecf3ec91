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

#include "psm/instance.h"

#include <algorithm>
#include <string>

#include "psm/errors.h"

namespace psm {

Instance Instance::Create(int n, int k,
                          std::vector<SubmodularFunction> functions) {
  if (n < 1) throw ArgumentError("ground set size must be positive");
  if (k < 1) throw ArgumentError("cardinality bound must be positive");
  if (functions.empty()) throw ArgumentError("instance needs at least one function");
  for (std::size_t i = 0; i < functions.size(); ++i) {
    Validate(functions[i]);
    const int size = GroundSetSize(functions[i]);
    if (size != n) {
      throw IndexError("function " + std::to_string(i) + " is defined over " +
                       std::to_string(size) + " items, instance has " +
                       std::to_string(n));
    }
  }
  Instance inst;
  inst.n_ = n;
  inst.requested_k_ = k;
  inst.k_ = std::min(k, n);
  inst.functions_ = std::move(functions);
  return inst;
}

const SubmodularFunction& Instance::function(int i) const {
  if (i < 0 || i >= m()) {
    throw IndexError("function index " + std::to_string(i) +
                     " outside [0, " + std::to_string(m()) + ")");
  }
  return functions_[i];
}

}  // namespace psm
