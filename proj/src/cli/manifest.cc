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

#include "tapaudit/cli/manifest.h"

#include <openssl/evp.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "absl/strings/str_cat.h"

namespace tapaudit {

nlohmann::json ManifestToJson(const RunManifest& manifest) {
  nlohmann::json json;
  json["tool"] = "tapaudit";
  json["tool_version"] = manifest.tool_version;
  json["subcommand"] = manifest.subcommand;
  json["args"] = manifest.args;
  json["seed"] =
      manifest.seed ? nlohmann::json(*manifest.seed) : nlohmann::json(nullptr);
  json["config"] = manifest.config;
  json["inputs"] = manifest.inputs;
  json["outputs"] = manifest.outputs;
  return json;
}

absl::StatusOr<RunManifest> ManifestFromJson(const nlohmann::json& json) {
  try {
    RunManifest manifest;
    manifest.subcommand = json.at("subcommand").get<std::string>();
    manifest.args = json.at("args").get<std::vector<std::string>>();
    if (!json.at("seed").is_null()) {
      manifest.seed = json.at("seed").get<uint64_t>();
    }
    manifest.config = json.at("config");
    manifest.inputs =
        json.at("inputs").get<std::map<std::string, std::string>>();
    manifest.outputs =
        json.at("outputs").get<std::map<std::string, std::string>>();
    manifest.tool_version = json.at("tool_version").get<std::string>();
    return manifest;
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed manifest: ", e.what()));
  }
}

std::string Sha256Hex(absl::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(),
             nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0xf]);
  }
  return hex;
}

absl::StatusOr<std::string> ReadFileBytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

absl::Status WriteFileAtomic(const std::string& path,
                             absl::string_view contents) {
  const std::string temp = absl::StrCat(path, ".tmp");
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) {
      return absl::PermissionDeniedError(absl::StrCat("cannot write ", temp));
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) return absl::DataLossError(absl::StrCat("short write to ", temp));
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::remove(temp.c_str());
    return absl::PermissionDeniedError(
        absl::StrCat("cannot rename onto ", path, ": ", ec.message()));
  }
  return absl::OkStatus();
}

}  // namespace tapaudit
