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

#ifndef PSM_INSTANCE_IO_H_
#define PSM_INSTANCE_IO_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "psm/instance.h"

namespace psm {

inline constexpr int kInstanceSchemaVersion = 1;

struct Provenance {
  std::string generator;
  std::uint64_t seed = 0;
  nlohmann::json params = nlohmann::json::object();

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

// An instance plus the optional metadata carried by instance files.
struct InstanceFile {
  Instance instance;
  std::vector<std::string> item_labels;
  std::vector<std::string> function_labels;
  std::optional<Provenance> provenance;
};

// Canonical JSON form (see docs/file_formats.md). Keys are sorted, so equal
// files serialize to equal bytes.
nlohmann::json InstanceToJson(const InstanceFile& file);
std::string SerializeInstance(const InstanceFile& file);

// Throws ParseError on malformed JSON, a wrong schema_version, missing or
// mistyped fields, or any instance validation failure.
InstanceFile InstanceFromJson(const nlohmann::json& json);
InstanceFile ParseInstance(std::string_view text);
InstanceFile ReadInstanceFile(const std::filesystem::path& path);

// Writes to a temporary sibling and renames it over `path`, so readers never
// see a partial file.
void WriteFileAtomically(const std::filesystem::path& path,
                         std::string_view content);

}  // namespace psm

#endif  // PSM_INSTANCE_IO_H_
