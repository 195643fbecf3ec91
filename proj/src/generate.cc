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

#include "psm/generate.h"

#include <string>

#include "psm/errors.h"
#include "psm/random.h"

namespace psm {
namespace {

double SmallWeight(SplitMix64& rng) { return 1.0 + rng.NextBelow(9); }

std::vector<double> Weights(int n, SplitMix64& rng) {
  std::vector<double> w(n);
  for (auto& x : w) x = SmallWeight(rng);
  return w;
}

SubmodularFunction Draw(Family family, const GeneratorParams& p,
                        SplitMix64& rng) {
  switch (family) {
    case Family::kModular:
      return Modular{Weights(p.n, rng)};
    case Family::kCoverage: {
      const int universe = p.universe > 0 ? p.universe : 2 * p.n;
      WeightedCoverage f;
      f.universe_weights = Weights(universe, rng);
      f.covers.resize(p.n);
      for (auto& cover : f.covers) {
        for (int e = 0; e < universe; ++e) {
          if (rng.NextUniform() < p.density) cover.push_back(e);
        }
      }
      return f;
    }
    case Family::kFacility: {
      const int clients = p.clients > 0 ? p.clients : p.n;
      FacilityLocation f;
      f.similarity.assign(clients, std::vector<double>(p.n));
      for (auto& row : f.similarity) {
        for (auto& s : row) s = rng.NextBelow(101) / 100.0;
      }
      return f;
    }
    case Family::kConcave:
      return ConcaveOverModular{Weights(p.n, rng), p.exponent};
    case Family::kMixed:
      break;
  }
  throw ArgumentError("mixed is not a concrete family");
}

}  // namespace

std::optional<Family> ParseFamily(std::string_view name) {
  if (name == "modular") return Family::kModular;
  if (name == "coverage") return Family::kCoverage;
  if (name == "facility") return Family::kFacility;
  if (name == "concave") return Family::kConcave;
  if (name == "mixed") return Family::kMixed;
  return std::nullopt;
}

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kModular: return "modular";
    case Family::kCoverage: return "coverage";
    case Family::kFacility: return "facility";
    case Family::kConcave: return "concave";
    case Family::kMixed: return "mixed";
  }
  return "unknown";
}

InstanceFile Generate(const GeneratorParams& p) {
  if (p.n < 1 || p.k < 1 || p.m < 1) {
    throw ArgumentError("n, k and m must be positive");
  }
  if (!(p.density >= 0.0 && p.density <= 1.0)) {
    throw ArgumentError("density must lie in [0, 1]");
  }
  if (p.universe < 0 || p.clients < 0) {
    throw ArgumentError("universe and clients must be non-negative");
  }
  if (!(p.exponent > 0.0 && p.exponent <= 1.0)) {
    throw ArgumentError("exponent must lie in (0, 1]");
  }

  static constexpr Family kRoundRobin[] = {Family::kCoverage, Family::kFacility,
                                           Family::kModular, Family::kConcave};
  SplitMix64 rng(p.seed);
  std::vector<SubmodularFunction> functions;
  functions.reserve(p.m);
  for (int i = 0; i < p.m; ++i) {
    const Family family = p.family == Family::kMixed ? kRoundRobin[i % 4] : p.family;
    functions.push_back(Draw(family, p, rng));
  }

  nlohmann::json params = {{"n", p.n}, {"k", p.k}, {"m", p.m}};
  if (p.family == Family::kCoverage || p.family == Family::kMixed) {
    params["density"] = p.density;
    params["universe"] = p.universe > 0 ? p.universe : 2 * p.n;
  }
  if (p.family == Family::kFacility || p.family == Family::kMixed) {
    params["clients"] = p.clients > 0 ? p.clients : p.n;
  }
  if (p.family == Family::kConcave || p.family == Family::kMixed) {
    params["exponent"] = p.exponent;
  }
  return InstanceFile{
      Instance::Create(p.n, p.k, std::move(functions)),
      {},
      {},
      Provenance{std::string(FamilyName(p.family)), p.seed, std::move(params)}};
}

}  // namespace psm
