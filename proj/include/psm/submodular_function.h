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

#ifndef PSM_SUBMODULAR_FUNCTION_H_
#define PSM_SUBMODULAR_FUNCTION_H_

#include <string_view>
#include <variant>
#include <vector>

#include "psm/item_set.h"

namespace psm {

// f(S) = sum of weights[x] over x in S.
struct Modular {
  std::vector<double> weights;
};

// f(S) = total weight of the universe elements covered by at least one item
// of S. covers[x] lists the universe elements item x covers.
struct WeightedCoverage {
  std::vector<double> universe_weights;
  std::vector<std::vector<int>> covers;
};

// f(S) = sum over clients c of max_{x in S} similarity[c][x], with the empty
// maximum taken as 0. Rows are clients, columns are items.
struct FacilityLocation {
  std::vector<std::vector<double>> similarity;
};

// f(S) = (sum of weights[x] over x in S)^exponent, exponent in (0, 1].
struct ConcaveOverModular {
  std::vector<double> weights;
  double exponent = 1.0;
};

// The monotone submodular families understood by the solvers. All of them
// satisfy f(empty) = 0.
using SubmodularFunction =
    std::variant<Modular, WeightedCoverage, FacilityLocation,
                 ConcaveOverModular>;

// Number of items the function is defined over.
int GroundSetSize(const SubmodularFunction& f);

// Short machine name of the variant: "modular", "weighted_coverage",
// "facility_location" or "concave_over_modular".
std::string_view FamilyName(const SubmodularFunction& f);

// Throws ArgumentError if the function stores a negative or non-finite real,
// an out-of-range exponent, or a ragged similarity matrix. Throws IndexError
// for cover lists that reference elements outside the universe.
void Validate(const SubmodularFunction& f);

// Returns f(S). Throws IndexError if S contains an item >= GroundSetSize(f).
double Evaluate(const SubmodularFunction& f, const ItemSet& set);

// Returns f(S + x) - f(S). Throws PreconditionError if x is already in S.
double MarginalGain(const SubmodularFunction& f, int item, const ItemSet& set);

}  // namespace psm

#endif  // PSM_SUBMODULAR_FUNCTION_H_
