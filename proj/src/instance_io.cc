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

#include "psm/instance_io.h"

#include <fstream>
#include <sstream>
#include <type_traits>
#include <unistd.h>

#include "psm/errors.h"

namespace psm {
namespace {

using nlohmann::json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

json FunctionToJson(const SubmodularFunction& f) {
  return std::visit(
      Overloaded{
          [](const Modular& g) {
            return json{{"type", "modular"}, {"weights", g.weights}};
          },
          [](const WeightedCoverage& g) {
            return json{{"type", "weighted_coverage"},
                        {"universe_weights", g.universe_weights},
                        {"covers", g.covers}};
          },
          [](const FacilityLocation& g) {
            return json{{"type", "facility_location"},
                        {"similarity", g.similarity}};
          },
          [](const ConcaveOverModular& g) {
            return json{{"type", "concave_over_modular"},
                        {"weights", g.weights},
                        {"exponent", g.exponent}};
          },
      },
      f);
}

const json& Field(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw ParseError(where + ": missing field \"" + key + "\"");
  }
  return *it;
}

template <class T>
T As(const json& value, const std::string& where) {
  try {
    if constexpr (std::is_same_v<T, int>) {
      if (!value.is_number_integer()) throw ParseError(where + ": expected an integer");
    }
    if constexpr (std::is_same_v<T, std::uint64_t>) {
      if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
        throw ParseError(where + ": expected a non-negative integer");
      }
    }
    if constexpr (std::is_same_v<T, double>) {
      if (!value.is_number()) throw ParseError(where + ": expected a number");
    }
    return value.get<T>();
  } catch (const json::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
}

SubmodularFunction FunctionFromJson(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  const std::string type = As<std::string>(Field(j, "type", where), where + ".type");
  if (type == "modular") {
    return Modular{As<std::vector<double>>(Field(j, "weights", where), where + ".weights")};
  }
  if (type == "weighted_coverage") {
    return WeightedCoverage{
        As<std::vector<double>>(Field(j, "universe_weights", where),
                                where + ".universe_weights"),
        As<std::vector<std::vector<int>>>(Field(j, "covers", where), where + ".covers")};
  }
  if (type == "facility_location") {
    return FacilityLocation{As<std::vector<std::vector<double>>>(
        Field(j, "similarity", where), where + ".similarity")};
  }
  if (type == "concave_over_modular") {
    return ConcaveOverModular{
        As<std::vector<double>>(Field(j, "weights", where), where + ".weights"),
        As<double>(Field(j, "exponent", where), where + ".exponent")};
  }
  throw ParseError(where + ": unknown function type \"" + type + "\"");
}

}  // namespace

json InstanceToJson(const InstanceFile& file) {
  const Instance& inst = file.instance;
  json out;
  out["schema_version"] = kInstanceSchemaVersion;
  out["n"] = inst.n();
  out["k"] = inst.requested_k();
  out["m"] = inst.m();
  json functions = json::array();
  for (const auto& f : inst.functions()) functions.push_back(FunctionToJson(f));
  out["functions"] = std::move(functions);
  if (!file.item_labels.empty() || !file.function_labels.empty()) {
    json labels = json::object();
    if (!file.item_labels.empty()) labels["items"] = file.item_labels;
    if (!file.function_labels.empty()) labels["functions"] = file.function_labels;
    out["labels"] = std::move(labels);
  }
  if (file.provenance) {
    out["provenance"] = {{"generator", file.provenance->generator},
                         {"seed", file.provenance->seed},
                         {"params", file.provenance->params}};
  }
  return out;
}

std::string SerializeInstance(const InstanceFile& file) {
  return InstanceToJson(file).dump(2) + "\n";
}

InstanceFile InstanceFromJson(const json& j) {
  if (!j.is_object()) throw ParseError("instance: expected a JSON object");
  const int version = As<int>(Field(j, "schema_version", "instance"), "schema_version");
  if (version != kInstanceSchemaVersion) {
    throw ParseError("unsupported schema_version " + std::to_string(version) +
                     " (expected " + std::to_string(kInstanceSchemaVersion) + ")");
  }
  const int n = As<int>(Field(j, "n", "instance"), "n");
  const int k = As<int>(Field(j, "k", "instance"), "k");
  const int m = As<int>(Field(j, "m", "instance"), "m");
  const json& list = Field(j, "functions", "instance");
  if (!list.is_array()) throw ParseError("functions: expected an array");
  if (static_cast<int>(list.size()) != m) {
    throw ParseError("m=" + std::to_string(m) + " but " +
                     std::to_string(list.size()) + " functions listed");
  }
  std::vector<SubmodularFunction> functions;
  for (std::size_t i = 0; i < list.size(); ++i) {
    functions.push_back(FunctionFromJson(list[i], "functions[" + std::to_string(i) + "]"));
  }

  std::optional<Instance> inst;
  try {
    inst = Instance::Create(n, k, std::move(functions));
  } catch (const Error& e) {
    throw ParseError(std::string("invalid instance: ") + e.what());
  }
  InstanceFile file{std::move(*inst), {}, {}, std::nullopt};

  if (auto it = j.find("labels"); it != j.end()) {
    if (!it->is_object()) throw ParseError("labels: expected an object");
    if (auto items = it->find("items"); items != it->end()) {
      file.item_labels = As<std::vector<std::string>>(*items, "labels.items");
      if (static_cast<int>(file.item_labels.size()) != n) {
        throw ParseError("labels.items must have n entries");
      }
    }
    if (auto fns = it->find("functions"); fns != it->end()) {
      file.function_labels = As<std::vector<std::string>>(*fns, "labels.functions");
      if (static_cast<int>(file.function_labels.size()) != m) {
        throw ParseError("labels.functions must have m entries");
      }
    }
  }
  if (auto it = j.find("provenance"); it != j.end()) {
    if (!it->is_object()) throw ParseError("provenance: expected an object");
    Provenance p;
    p.generator = As<std::string>(Field(*it, "generator", "provenance"), "provenance.generator");
    p.seed = As<std::uint64_t>(Field(*it, "seed", "provenance"), "provenance.seed");
    if (auto params = it->find("params"); params != it->end()) p.params = *params;
    file.provenance = std::move(p);
  }
  return file;
}

InstanceFile ParseInstance(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return InstanceFromJson(j);
}

InstanceFile ReadInstanceFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return ParseInstance(text.str());
}

void WriteFileAtomically(const std::filesystem::path& path,
                         std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error("failed writing " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace psm
