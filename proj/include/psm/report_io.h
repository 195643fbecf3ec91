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

#ifndef PSM_REPORT_IO_H_
#define PSM_REPORT_IO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "psm/instance.h"
#include "psm/personalize.h"

namespace psm {

inline constexpr int kReportSchemaVersion = 1;

// How a report was produced; echoed verbatim into the report file.
struct SolverConfig {
  std::string algorithm;  // "enum", "sample" or "multi"
  std::string inner;      // "greedy" or "exact"
  double alpha = 0.0;
  std::optional<int> rounds;
  std::optional<std::uint64_t> seed;
  std::optional<int> candidates;
  std::vector<double> eps;
};

// Ground-truth comparison written by `compare`.
struct OracleComparison {
  double opt0 = 0.0;
  double opt1 = 0.0;
  // Optimum with `candidates` sets, present for the multi algorithm.
  std::optional<double> opt_l;
  // objective / reference optimum (OPT_l for multi, OPT_0 otherwise),
  // absent when the reference optimum is 0.
  std::optional<double> ratio;
  std::optional<double> opt1_over_opt0;
  std::uint64_t enumerated = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

nlohmann::json SolveReportToJson(const SolveReport& report, bool include_rounds);

nlohmann::json ReportToJson(const SolverConfig& config, const Instance& inst,
                            const SolveReport& report,
                            const std::optional<OracleComparison>& oracle,
                            bool include_rounds);

}  // namespace psm

#endif  // PSM_REPORT_IO_H_
