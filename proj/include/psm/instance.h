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

#ifndef PSM_INSTANCE_H_
#define PSM_INSTANCE_H_

#include <span>
#include <vector>

#include "psm/submodular_function.h"

namespace psm {

// A ground set {0, ..., n-1}, a cardinality bound k and the user-specific
// functions f_0, ..., f_{m-1}. Immutable once created.
class Instance {
 public:
  // Validates every function and checks that each one is defined over
  // exactly n items. A requested k larger than n is clamped to n and
  // remembered in k_clamped(); k < 1 or an empty function list raise
  // ArgumentError.
  static Instance Create(int n, int k, std::vector<SubmodularFunction> functions);

  int n() const { return n_; }
  int k() const { return k_; }
  int m() const { return static_cast<int>(functions_.size()); }
  int requested_k() const { return requested_k_; }
  bool k_clamped() const { return requested_k_ != k_; }

  std::span<const SubmodularFunction> functions() const { return functions_; }
  const SubmodularFunction& function(int i) const;

 private:
  Instance() = default;

  int n_ = 0;
  int k_ = 0;
  int requested_k_ = 0;
  std::vector<SubmodularFunction> functions_;
};

}  // namespace psm

#endif  // PSM_INSTANCE_H_
