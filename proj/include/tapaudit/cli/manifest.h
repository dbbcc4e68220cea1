// Copyright 2026 The Tapaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Run manifests: what was run, on which inputs, producing which bytes.
// No timestamps or host details, so re-running a manifest reproduces it.

#ifndef TAPAUDIT_CLI_MANIFEST_H_
#define TAPAUDIT_CLI_MANIFEST_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "nlohmann/json.hpp"

namespace tapaudit {

inline constexpr char kToolVersion[] = "0.1.0";
inline constexpr char kManifestFile[] = "manifest.json";

struct RunManifest {
  std::string subcommand;
  // Arguments after the program name, without --out.
  std::vector<std::string> args;
  std::optional<uint64_t> seed;
  // Resolved settings, one JSON object per subcommand.
  nlohmann::json config = nlohmann::json::object();
  // Input path -> SHA-256 hex of its bytes.
  std::map<std::string, std::string> inputs;
  // Output file name (relative to the output directory) -> SHA-256 hex.
  std::map<std::string, std::string> outputs;
  std::string tool_version = kToolVersion;
};

nlohmann::json ManifestToJson(const RunManifest& manifest);
absl::StatusOr<RunManifest> ManifestFromJson(const nlohmann::json& json);

std::string Sha256Hex(absl::string_view bytes);

absl::StatusOr<std::string> ReadFileBytes(const std::string& path);

// Writes to a sibling temporary file and renames it over `path`.
absl::Status WriteFileAtomic(const std::string& path,
                             absl::string_view contents);

}  // namespace tapaudit

#endif  // TAPAUDIT_CLI_MANIFEST_H_
