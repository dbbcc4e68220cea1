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

// Exact counting and the thresholded Laplace count release.
//
// Per cell q with exact count c:
//   1. if zero_skip and c == 0, release 0;
//   2. otherwise d = c + Lap(0, b); release d if d > t, else 0;
//   3. round half-up when round_output is set.
// Noise for cell q comes from a SplitMix64 stream seeded by
// MixSeeds(MixSeeds(seed, stream), Fingerprint64(q.CanonicalKey())), so a
// cell's release depends only on (count, config, stream, q) and never on
// which other cells are in the table.

#ifndef TAPAUDIT_MECHANISM_RELEASE_H_
#define TAPAUDIT_MECHANISM_RELEASE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "tapaudit/mechanism/types.h"

namespace tapaudit {

ContingencyTable CountCells(const RawDataset& data,
                            const std::set<AttributeCombination>& queries);

// Steps 2b and 3 for an already-noised value.
double ThresholdAndRound(double noisy_value, const ReleaseConfig& config);

// The Laplace draw assigned to `cell` in noise stream `stream`.
double CellNoise(const ReleaseConfig& config, uint64_t stream,
                 const AttributeCombination& cell);

struct ReleaseTrace {
  ReleasedTable table;
  // Noise actually drawn per cell; nullopt where a zero was skipped.
  std::map<AttributeCombination, std::optional<double>> noise;
};

// Releases every cell under `config` (either zero-handling variant) using
// noise stream `stream`, recording the noise.
absl::StatusOr<ReleaseTrace> ReleaseWithTrace(const ContingencyTable& table,
                                              const ReleaseConfig& config,
                                              uint64_t stream);

// The published algorithm: zeros pass through unperturbed. Requires
// config.zero_skip.
absl::StatusOr<ReleasedTable> ReleaseSecondAlgorithm(
    const ContingencyTable& table, const ReleaseConfig& config);

// The fix: zeros are perturbed and thresholded like every other count.
// Requires !config.zero_skip.
absl::StatusOr<ReleasedTable> ReleaseCorrected(const ContingencyTable& table,
                                               const ReleaseConfig& config);

// Textbook Laplace mechanism: values[i] + Lap(0, sensitivity / epsilon).
absl::StatusOr<std::vector<double>> LaplaceMechanism(
    std::span<const double> values, double sensitivity, double epsilon,
    uint64_t seed);

}  // namespace tapaudit

#endif  // TAPAUDIT_MECHANISM_RELEASE_H_
