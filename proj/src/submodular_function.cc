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

#include "psm/submodular_function.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "psm/errors.h"

namespace psm {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void CheckReals(const std::vector<double>& values, std::string_view what) {
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0) {
      throw ArgumentError(std::string(what) +
                          " must be finite and non-negative, got " +
                          std::to_string(v));
    }
  }
}

void CheckItems(const ItemSet& set, int n) {
  if (set.max_item() >= n) {
    throw IndexError("item " + std::to_string(set.max_item()) +
                     " outside ground set of size " + std::to_string(n));
  }
}

double SumWeights(const std::vector<double>& weights, const ItemSet& set) {
  double total = 0.0;
  for (int x : set) total += weights[x];
  return total;
}

}  // namespace

int GroundSetSize(const SubmodularFunction& f) {
  return std::visit(
      Overloaded{
          [](const Modular& g) { return static_cast<int>(g.weights.size()); },
          [](const WeightedCoverage& g) {
            return static_cast<int>(g.covers.size());
          },
          [](const FacilityLocation& g) {
            return g.similarity.empty()
                       ? 0
                       : static_cast<int>(g.similarity.front().size());
          },
          [](const ConcaveOverModular& g) {
            return static_cast<int>(g.weights.size());
          },
      },
      f);
}

std::string_view FamilyName(const SubmodularFunction& f) {
  return std::visit(
      Overloaded{
          [](const Modular&) { return std::string_view("modular"); },
          [](const WeightedCoverage&) {
            return std::string_view("weighted_coverage");
          },
          [](const FacilityLocation&) {
            return std::string_view("facility_location");
          },
          [](const ConcaveOverModular&) {
            return std::string_view("concave_over_modular");
          },
      },
      f);
}

void Validate(const SubmodularFunction& f) {
  std::visit(
      Overloaded{
          [](const Modular& g) { CheckReals(g.weights, "modular weight"); },
          [](const WeightedCoverage& g) {
            CheckReals(g.universe_weights, "universe weight");
            const int universe = static_cast<int>(g.universe_weights.size());
            for (const auto& cover : g.covers) {
              for (int e : cover) {
                if (e < 0 || e >= universe) {
                  throw IndexError("cover references universe element " +
                                   std::to_string(e) + " outside [0, " +
                                   std::to_string(universe) + ")");
                }
              }
            }
          },
          [](const FacilityLocation& g) {
            if (g.similarity.empty()) {
              throw ArgumentError("facility location needs at least one client");
            }
            const std::size_t cols = g.similarity.front().size();
            for (const auto& row : g.similarity) {
              if (row.size() != cols) {
                throw ArgumentError("ragged similarity matrix");
              }
              CheckReals(row, "similarity");
            }
          },
          [](const ConcaveOverModular& g) {
            CheckReals(g.weights, "concave weight");
            if (!(g.exponent > 0.0 && g.exponent <= 1.0)) {
              throw ArgumentError("exponent must lie in (0, 1], got " +
                                  std::to_string(g.exponent));
            }
          },
      },
      f);
}

double Evaluate(const SubmodularFunction& f, const ItemSet& set) {
  CheckItems(set, GroundSetSize(f));
  if (set.empty()) return 0.0;
  return std::visit(
      Overloaded{
          [&](const Modular& g) { return SumWeights(g.weights, set); },
          [&](const WeightedCoverage& g) {
            std::vector<char> covered(g.universe_weights.size(), 0);
            for (int x : set) {
              for (int e : g.covers[x]) covered[e] = 1;
            }
            double total = 0.0;
            for (std::size_t e = 0; e < covered.size(); ++e) {
              if (covered[e]) total += g.universe_weights[e];
            }
            return total;
          },
          [&](const FacilityLocation& g) {
            double total = 0.0;
            for (const auto& row : g.similarity) {
              double best = 0.0;
              for (int x : set) best = std::max(best, row[x]);
              total += best;
            }
            return total;
          },
          [&](const ConcaveOverModular& g) {
            return std::pow(SumWeights(g.weights, set), g.exponent);
          },
      },
      f);
}

double MarginalGain(const SubmodularFunction& f, int item,
                    const ItemSet& set) {
  if (item < 0 || item >= GroundSetSize(f)) {
    throw IndexError("item " + std::to_string(item) +
                     " outside ground set of size " +
                     std::to_string(GroundSetSize(f)));
  }
  if (set.contains(item)) {
    throw PreconditionError("item " + std::to_string(item) +
                            " is already in " + set.ToString());
  }
  return Evaluate(f, set.With(item)) - Evaluate(f, set);
}

}  // namespace psm
