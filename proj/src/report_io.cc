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

#include "psm/report_io.h"

namespace psm {
namespace {

using nlohmann::json;

json SetsToJson(const std::vector<ItemSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) {
    out.push_back(std::vector<int>(s.begin(), s.end()));
  }
  return out;
}

}  // namespace

json SolveReportToJson(const SolveReport& report, bool include_rounds) {
  json out;
  out["algorithm"] = report.algorithm;
  out["sets"] = SetsToJson(report.sets);
  out["objective"] = report.objective;
  out["certified_ratio"] = report.certified_ratio;
  out["seed"] = report.seed ? json(*report.seed) : json(nullptr);
  out["warnings"] = report.warnings;
  json bounds = json::array();
  for (const auto& b : report.expectation_bounds) {
    bounds.push_back({{"eps", b.eps},
                      {"gamma", b.bound.gamma},
                      {"gamma_term", b.bound.gamma_term},
                      {"factor", b.bound.factor},
                      {"vacuous", b.bound.vacuous}});
  }
  out["expectation_bounds"] = std::move(bounds);
  out["round_count"] = report.rounds.size();
  if (include_rounds) {
    json rounds = json::array();
    for (const auto& r : report.rounds) {
      rounds.push_back({{"index", r.index},
                        {"groups", r.partition.groups},
                        {"sets", SetsToJson(r.sets)},
                        {"group_values", r.group_values},
                        {"objective", r.objective},
                        {"incumbent", r.incumbent},
                        {"best_so_far", r.best_so_far}});
    }
    out["rounds"] = std::move(rounds);
  }
  return out;
}

json ReportToJson(const SolverConfig& config, const Instance& inst,
                  const SolveReport& report,
                  const std::optional<OracleComparison>& oracle,
                  bool include_rounds) {
  json out;
  out["schema_version"] = kReportSchemaVersion;

  json solver = {{"algorithm", config.algorithm},
                 {"inner", config.inner},
                 {"alpha", config.alpha},
                 {"eps", config.eps}};
  if (config.rounds) solver["rounds"] = *config.rounds;
  if (config.seed) solver["seed"] = *config.seed;
  if (config.candidates) solver["candidates"] = *config.candidates;
  out["solver"] = std::move(solver);

  out["instance"] = {{"n", inst.n()}, {"k", inst.k()}, {"m", inst.m()}};
  out["result"] = SolveReportToJson(report, include_rounds);

  if (oracle) {
    json block = {{"opt0", oracle->opt0},
                  {"opt1", oracle->opt1},
                  {"enumerated", oracle->enumerated},
                  {"passed", oracle->passed()},
                  {"failures", oracle->failures}};
    if (oracle->opt_l) block["opt_l"] = *oracle->opt_l;
    block["ratio"] = oracle->ratio ? json(*oracle->ratio) : json(nullptr);
    block["opt1_over_opt0"] =
        oracle->opt1_over_opt0 ? json(*oracle->opt1_over_opt0) : json(nullptr);
    out["oracle"] = std::move(block);
  }
  return out;
}

}  // namespace psm
