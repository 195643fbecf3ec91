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

#ifndef PSM_GENERATE_H_
#define PSM_GENERATE_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "psm/instance_io.h"

namespace psm {

enum class Family { kModular, kCoverage, kFacility, kConcave, kMixed };

std::optional<Family> ParseFamily(std::string_view name);
std::string_view FamilyName(Family family);

struct GeneratorParams {
  Family family = Family::kCoverage;
  int n = 0;
  int k = 0;
  int m = 0;
  std::uint64_t seed = 0;
  // Coverage: probability that an item covers a given universe element, and
  // the universe size (0 means 2n).
  double density = 0.3;
  int universe = 0;
  // Facility location: number of clients (0 means n).
  int clients = 0;
  // Concave-over-modular exponent.
  double exponent = 0.5;
};

// Deterministic random instance. Every draw comes from one SplitMix64 stream
// seeded with params.seed, so equal parameters give identical instances on
// every platform. Weights are small integers (1..9) and similarities are
// multiples of 0.01, which makes exact ties common. In the mixed family
// function i uses coverage, facility location, modular, concave in turn.
// Throws ArgumentError on invalid sizes or parameters.
InstanceFile Generate(const GeneratorParams& params);

}  // namespace psm

#endif  // PSM_GENERATE_H_
