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

#ifndef PSM_OBJECTIVE_H_
#define PSM_OBJECTIVE_H_

#include <span>
#include <vector>

#include "psm/instance.h"
#include "psm/item_set.h"

namespace psm {

// Sum of f_i(S) over i in `group`, accumulated in the order given.
// An empty group sums to 0.
double GroupEvaluate(const Instance& inst, std::span<const int> group,
                     const ItemSet& set);

// f_i(S) for every function of the instance.
std::vector<double> FunctionValues(const Instance& inst, const ItemSet& set);

// Sum over i of max{f_i(S1), f_i(S2)}. Throws ConstraintError if either set
// is larger than k.
double PairObjective(const Instance& inst, const ItemSet& first,
                     const ItemSet& second);

// Sum over i of max_j f_i(S_j). With two sets this equals PairObjective
// bit for bit. Throws ArgumentError on an empty list.
double MultiObjective(const Instance& inst, std::span<const ItemSet> sets);

// Sum over i of max_j values[j][i], with values[j] = FunctionValues(S_j).
// Shared by the objective and the oracles so both sum in the same order.
double SumOfMaxima(std::span<const std::vector<double>> values);

// The pair objective viewed as a set function over the lifted ground set
// {0, ..., 2n-1}, where lifted element x + j*n puts item x into candidate j.
// This function is generally not submodular even when every f_i is; it
// exists so that fact can be checked, not for optimization.
double LiftedObjective(const Instance& inst, const ItemSet& lifted);

}  // namespace psm

#endif  // PSM_OBJECTIVE_H_
