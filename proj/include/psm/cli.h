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

#ifndef PSM_CLI_H_
#define PSM_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace psm {

// Process exit codes of the psm tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitResource = 3,
  kExitCheckFailed = 4,
};

// Enumeration and oracle caps. Resolved in increasing precedence from the
// defaults, PSM_BUDGET_<KEY> environment variables, --budget-file and
// --budget key=value.
struct Budgets {
  std::uint64_t exact_max = 2'000'000;
  std::uint64_t partition_cap = 20;
  std::uint64_t multi_partitions = 1'000'000;
  std::uint64_t oracle_tuples = 10'000'000;
};

// Sets one budget by key ("exact_max", "partition_cap", "multi_partitions",
// "oracle_tuples"). Throws ArgumentError for unknown keys.
void SetBudget(Budgets& budgets, const std::string& key, std::uint64_t value);

// Runs the psm command line (args excludes the program name). Reports go to
// `out` unless --out is given; diagnostics go to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace psm

#endif  // PSM_CLI_H_
