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

#include "psm/cli.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "psm/errors.h"
#include "psm/generate.h"
#include "psm/instance_io.h"
#include "psm/maximize.h"
#include "psm/objective.h"
#include "psm/oracle.h"
#include "psm/personalize.h"
#include "psm/report_io.h"

namespace psm {
namespace {

constexpr double kCheckTolerance = 1e-9;

struct SolveArgs {
  std::string instance_path;
  std::string algo;
  std::string inner = "greedy";
  std::optional<int> rounds;
  std::optional<int> candidates;
  std::optional<std::uint64_t> seed;
  std::vector<double> eps = {0.0, 0.05, 0.1};
  int workers = 1;
  std::vector<std::string> budget_overrides;
  std::string budget_file;
  std::string out_path;
  bool no_rounds = false;
  bool timings = false;
};

struct GenArgs {
  std::string family;
  GeneratorParams params;
  bool have_seed = false;
  std::string out_path;
};

struct BoundArgs {
  std::vector<int> rounds;
  std::vector<double> eps = {0.0, 0.05, 0.1};
  int m = 0;
  std::string alpha = "1";
};

std::uint64_t ParseCount(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text.front() == '-') {
    throw ArgumentError(what + ": expected a non-negative integer, got \"" + text + "\"");
  }
  return value;
}

Budgets ResolveBudgets(const SolveArgs& args) {
  Budgets budgets;
  for (const char* key :
       {"exact_max", "partition_cap", "multi_partitions", "oracle_tuples"}) {
    std::string env = "PSM_BUDGET_";
    for (const char* c = key; *c; ++c) env += static_cast<char>(std::toupper(*c));
    if (const char* value = std::getenv(env.c_str())) {
      SetBudget(budgets, key, ParseCount(value, env));
    }
  }
  if (!args.budget_file.empty()) {
    std::ifstream in(args.budget_file);
    if (!in) throw ArgumentError("cannot open budget file " + args.budget_file);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ArgumentError("budget file: " + std::string(e.what()));
    }
    if (!j.is_object()) throw ArgumentError("budget file must hold a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (!value.is_number_unsigned()) {
        throw ArgumentError("budget " + key + " must be a non-negative integer");
      }
      SetBudget(budgets, key, value.get<std::uint64_t>());
    }
  }
  for (const auto& item : args.budget_overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw ArgumentError("--budget expects key=value, got \"" + item + "\"");
    }
    SetBudget(budgets, item.substr(0, eq), ParseCount(item.substr(eq + 1), item));
  }
  return budgets;
}

double ParseAlpha(const std::string& text) {
  if (text == "greedy") return kGreedyAlpha;
  if (text == "exact") return 1.0;
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) {
    throw ArgumentError("--alpha expects a number, \"greedy\" or \"exact\"");
  }
  return value;
}

void Emit(const std::string& content, const std::string& out_path,
          std::ostream& out) {
  if (out_path.empty()) {
    out << content;
  } else {
    WriteFileAtomically(out_path, content);
  }
}

int RunGen(const GenArgs& args, std::ostream& out) {
  const auto family = ParseFamily(args.family);
  if (!family) throw ArgumentError("unknown family \"" + args.family + "\"");
  GeneratorParams params = args.params;
  params.family = *family;
  Emit(SerializeInstance(Generate(params)), args.out_path, out);
  return kExitOk;
}

OracleComparison Compare(const Instance& inst, const SolveArgs& args,
                         const SolveReport& report, const Budgets& budgets) {
  OracleComparison cmp;
  const OracleResult pair = ExactPairSolve(inst, budgets.oracle_tuples);
  const OracleResult p1 = ExactP1Solve(inst, budgets.oracle_tuples);
  cmp.opt0 = pair.opt_value;
  cmp.opt1 = p1.opt_value;
  cmp.enumerated = pair.enumerated_count + p1.enumerated_count;
  double reference = cmp.opt0;
  if (args.algo == "multi") {
    const OracleResult multi =
        ExactMultiSolve(inst, *args.candidates, budgets.oracle_tuples);
    cmp.opt_l = multi.opt_value;
    cmp.enumerated += multi.enumerated_count;
    reference = multi.opt_value;
  }
  if (reference > 0.0) cmp.ratio = report.objective / reference;
  if (cmp.opt0 > 0.0) cmp.opt1_over_opt0 = cmp.opt1 / cmp.opt0;

  auto fail = [&](const std::string& what) { cmp.failures.push_back(what); };
  if (report.objective > reference + kCheckTolerance) {
    fail("objective exceeds the exhaustive optimum");
  }
  if (report.objective < report.certified_ratio * reference - kCheckTolerance) {
    fail("objective below certified_ratio times the optimum");
  }
  if (cmp.opt1 < cmp.opt0 - kCheckTolerance) {
    fail("partition relaxation optimum below the pair optimum");
  }
  if (MultiObjective(inst, report.sets) != report.objective) {
    fail("objective does not match the reported sets");
  }
  return cmp;
}

int RunSolve(const SolveArgs& args, bool compare, std::ostream& out,
             std::ostream& err) {
  using Clock = std::chrono::steady_clock;
  const Budgets budgets = ResolveBudgets(args);

  if (args.algo == "sample" && (!args.rounds || !args.seed)) {
    throw ArgumentError("--algo sample requires --T and --seed");
  }
  if (args.algo == "multi" && !args.candidates) {
    throw ArgumentError("--algo multi requires --l");
  }

  std::optional<InstanceFile> file;
  try {
    file = ReadInstanceFile(args.instance_path);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
  const Instance& inst = file->instance;

  const InnerSolver inner = args.inner == "exact"
                                ? InnerSolver::Exact(budgets.exact_max)
                                : InnerSolver::Greedy();
  SolveOptions options;
  options.workers = args.workers;
  options.partition_cap = static_cast<int>(
      std::min<std::uint64_t>(budgets.partition_cap, 62));
  options.multi_partition_budget = budgets.multi_partitions;

  SolverConfig config;
  config.algorithm = args.algo;
  config.inner = std::string(inner.name());
  config.alpha = inner.alpha();

  const auto start = Clock::now();
  SolveReport report;
  if (args.algo == "enum") {
    report = EnumerationSolve(inst, inner, options);
  } else if (args.algo == "sample") {
    config.rounds = args.rounds;
    config.seed = args.seed;
    config.eps = args.eps;
    report = SamplingSolve(inst, *args.rounds, *args.seed, inner, args.eps, options);
  } else {
    config.candidates = args.candidates;
    report = MultiEnumerationSolve(inst, *args.candidates, inner, options);
  }
  const double solve_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();

  std::optional<OracleComparison> oracle;
  double oracle_ms = 0.0;
  if (compare) {
    const auto oracle_start = Clock::now();
    oracle = Compare(inst, args, report, budgets);
    oracle_ms = std::chrono::duration<double, std::milli>(Clock::now() -
                                                          oracle_start)
                    .count();
  }

  nlohmann::json json = ReportToJson(config, inst, report, oracle, !args.no_rounds);
  if (args.timings) {
    json["timings_ms"] = {{"solve", solve_ms}};
    if (compare) json["timings_ms"]["oracle"] = oracle_ms;
  }
  Emit(json.dump(2) + "\n", args.out_path, out);

  err << std::fixed << std::setprecision(3) << "solve: " << solve_ms << " ms";
  if (compare) err << ", oracle: " << oracle_ms << " ms";
  err << "\n";
  for (const auto& w : report.warnings) err << "warning: " << w << "\n";
  if (oracle && !oracle->passed()) {
    for (const auto& f : oracle->failures) err << "check failed: " << f << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int RunBound(const BoundArgs& args, std::ostream& out) {
  const double alpha = ParseAlpha(args.alpha);
  std::ostringstream table;
  table << std::setprecision(17) << "# m=" << args.m << " alpha=" << alpha << "\n";
  table << "T\teps\tgamma\tgamma_term\tfactor\n";
  table << std::fixed << std::setprecision(9);
  for (int rounds : args.rounds) {
    for (double eps : args.eps) {
      const BoundFactor b = GammaBound(rounds, eps, args.m, alpha);
      table << rounds << '\t' << std::defaultfloat << eps << std::fixed << '\t'
            << b.gamma << '\t' << b.gamma_term << '\t' << b.factor;
      if (b.vacuous) table << "\tvacuous";
      table << "\n";
    }
  }
  out << table.str();
  return kExitOk;
}

}  // namespace

void SetBudget(Budgets& budgets, const std::string& key, std::uint64_t value) {
  if (key == "exact_max") {
    budgets.exact_max = value;
  } else if (key == "partition_cap") {
    budgets.partition_cap = value;
  } else if (key == "multi_partitions") {
    budgets.multi_partitions = value;
  } else if (key == "oracle_tuples") {
    budgets.oracle_tuples = value;
  } else {
    throw ArgumentError("unknown budget \"" + key + "\"");
  }
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Personalized submodular maximization with multiple candidates"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--family", gen.family, "modular|coverage|facility|concave|mixed")
      ->required();
  gen_cmd->add_option("--n", gen.params.n, "Ground set size")->required();
  gen_cmd->add_option("--k", gen.params.k, "Cardinality bound")->required();
  gen_cmd->add_option("--m", gen.params.m, "Number of functions")->required();
  gen_cmd->add_option("--seed", gen.params.seed, "Generator seed")->required();
  gen_cmd->add_option("--density", gen.params.density, "Coverage density")
      ->capture_default_str();
  gen_cmd->add_option("--universe", gen.params.universe, "Coverage universe size (0: 2n)");
  gen_cmd->add_option("--clients", gen.params.clients, "Facility clients (0: n)");
  gen_cmd->add_option("--exponent", gen.params.exponent, "Concave exponent")
      ->capture_default_str();
  gen_cmd->add_option("--out", gen.out_path, "Output path (default: stdout)");

  SolveArgs solve;
  auto add_solve_options = [&](CLI::App* cmd) {
    cmd->add_option("instance", solve.instance_path, "Instance file")->required();
    cmd->add_option("--algo", solve.algo, "enum|sample|multi")
        ->required()
        ->check(CLI::IsMember({"enum", "sample", "multi"}));
    cmd->add_option("--inner", solve.inner, "greedy|exact")
        ->check(CLI::IsMember({"greedy", "exact"}))
        ->capture_default_str();
    cmd->add_option("--T", solve.rounds, "Sampling rounds")->check(CLI::PositiveNumber);
    cmd->add_option("--l", solve.candidates, "Number of candidates for multi")
        ->check(CLI::Range(2, 64));
    cmd->add_option("--seed", solve.seed, "Sampling seed");
    cmd->add_option("--eps", solve.eps, "Expectation-bound eps values")
        ->delimiter(',');
    cmd->add_option("--workers", solve.workers, "Worker threads")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget", solve.budget_overrides, "key=value budget override");
    cmd->add_option("--budget-file", solve.budget_file, "JSON object of budgets");
    cmd->add_option("--out", solve.out_path, "Report path (default: stdout)");
    cmd->add_flag("--no-rounds", solve.no_rounds, "Omit the per-round trace");
    cmd->add_flag("--timings", solve.timings, "Include wall-clock timings");
  };
  auto* solve_cmd = app.add_subcommand("solve", "Run a solver on an instance");
  add_solve_options(solve_cmd);
  auto* compare_cmd =
      app.add_subcommand("compare", "Run a solver and check it against the oracles");
  add_solve_options(compare_cmd);

  BoundArgs bound;
  auto* bound_cmd =
      app.add_subcommand("bound", "Tabulate the sampling algorithm's guarantee");
  bound_cmd->add_option("--T", bound.rounds, "Round counts")
      ->required()
      ->delimiter(',');
  bound_cmd->add_option("--eps", bound.eps, "eps values")->delimiter(',');
  bound_cmd->add_option("--m", bound.m, "Number of functions")->required();
  bound_cmd->add_option("--alpha", bound.alpha, "Inner factor: number, greedy or exact")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return RunGen(gen, out);
    if (solve_cmd->parsed()) return RunSolve(solve, false, out, err);
    if (compare_cmd->parsed()) return RunSolve(solve, true, out, err);
    return RunBound(bound, out);
  } catch (const ResourceError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitResource;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace psm
