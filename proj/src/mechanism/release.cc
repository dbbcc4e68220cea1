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

#include "tapaudit/mechanism/release.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "tapaudit/common/status_macros.h"
#include "tapaudit/distributions/random.h"

namespace tapaudit {

ContingencyTable CountCells(const RawDataset& data,
                            const std::set<AttributeCombination>& queries) {
  ContingencyTable table;
  std::set<TableKind> kinds;
  for (const AttributeCombination& q : queries) {
    table.counts.emplace(q, 0);
    kinds.insert(q.kind());
  }
  for (const TapEvent& event : data.events) {
    for (TableKind kind : kinds) {
      auto it = table.counts.find(ProjectEvent(event, kind));
      if (it != table.counts.end()) ++it->second;
    }
  }
  return table;
}

double ThresholdAndRound(double noisy_value, const ReleaseConfig& config) {
  if (!(noisy_value > config.threshold)) return 0.0;
  return config.round_output ? std::floor(noisy_value + 0.5) : noisy_value;
}

double CellNoise(const ReleaseConfig& config, uint64_t stream,
                 const AttributeCombination& cell) {
  SplitMix64 rng(MixSeeds(MixSeeds(config.seed, stream),
                          Fingerprint64(cell.CanonicalKey())));
  return LaplaceSample(config.scale, rng);
}

absl::StatusOr<ReleaseTrace> ReleaseWithTrace(const ContingencyTable& table,
                                              const ReleaseConfig& config,
                                              uint64_t stream) {
  RETURN_IF_ERROR(config.Validate());
  ReleaseTrace trace;
  trace.table.config_fingerprint = config.Fingerprint();
  for (const auto& [cell, count] : table.counts) {
    if (count < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("negative count for ", cell.CanonicalKey()));
    }
    if (config.zero_skip && count == 0) {
      trace.table.entries.emplace(cell, 0.0);
      trace.noise.emplace(cell, std::nullopt);
      continue;
    }
    const double noise = CellNoise(config, stream, cell);
    trace.table.entries.emplace(
        cell, ThresholdAndRound(static_cast<double>(count) + noise, config));
    trace.noise.emplace(cell, noise);
  }
  return trace;
}

absl::StatusOr<ReleasedTable> ReleaseSecondAlgorithm(
    const ContingencyTable& table, const ReleaseConfig& config) {
  if (!config.zero_skip) {
    return absl::FailedPreconditionError(
        "ReleaseSecondAlgorithm requires zero_skip; use ReleaseCorrected to "
        "perturb zero counts");
  }
  ASSIGN_OR_RETURN(ReleaseTrace trace, ReleaseWithTrace(table, config, 0));
  return std::move(trace.table);
}

absl::StatusOr<ReleasedTable> ReleaseCorrected(const ContingencyTable& table,
                                               const ReleaseConfig& config) {
  if (config.zero_skip) {
    return absl::FailedPreconditionError(
        "ReleaseCorrected requires zero_skip = false; use "
        "ReleaseSecondAlgorithm for the zero-skipping variant");
  }
  ASSIGN_OR_RETURN(ReleaseTrace trace, ReleaseWithTrace(table, config, 0));
  return std::move(trace.table);
}

absl::StatusOr<std::vector<double>> LaplaceMechanism(
    std::span<const double> values, double sensitivity, double epsilon,
    uint64_t seed) {
  if (!(sensitivity > 0) || !std::isfinite(sensitivity)) {
    return absl::InvalidArgumentError("sensitivity must be positive");
  }
  if (!(epsilon > 0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError("epsilon must be positive");
  }
  ASSIGN_OR_RETURN(NoiseScale scale, NoiseScale::Create(sensitivity / epsilon));
  SplitMix64 rng(seed);
  std::vector<double> out;
  out.reserve(values.size());
  for (double v : values) out.push_back(v + LaplaceSample(scale, rng));
  return out;
}

}  // namespace tapaudit
