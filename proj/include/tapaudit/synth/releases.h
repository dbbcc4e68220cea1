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

// Published tables derived from a synthetic scenario, plus the ground
// truth an evaluator needs and an attacker never sees.

#ifndef TAPAUDIT_SYNTH_RELEASES_H_
#define TAPAUDIT_SYNTH_RELEASES_H_

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "tapaudit/mechanism/types.h"

namespace tapaudit {

// Noise stream per published table, so the three tables draw independent
// noise even under one seed.
inline constexpr uint64_t kTimeAndLocationStream = 1;
inline constexpr uint64_t kTimeOnlyStream = 2;
inline constexpr uint64_t kLocationOnlyStream = 3;

uint64_t StreamForTable(TableKind kind);

// Every cell the publisher would emit for `data`: for each mode, the dates
// and locations it touches, both tap types and all 96 bins, in the
// time-and-location, time-only and location-only tables.
std::set<AttributeCombination> QueryUniverse(const RawDataset& data,
                                             TableKind kind);

struct LedgerEntry {
  AttributeCombination cell;
  int64_t raw_count = 0;
  // nullopt where a raw zero was passed through.
  std::optional<double> noise;
  double released = 0;
};

struct GroundTruthLedger {
  std::vector<LedgerEntry> entries;
};

inline constexpr char kLedgerHeader[] =
    "table,mode,date,type,time,location,raw,noise,released";

void WriteLedgerCsv(std::ostream& out, const GroundTruthLedger& ledger);

// Per-table configs; unset tables use the base config.
struct ReleaseOverrides {
  std::optional<ReleaseConfig> time_and_location;
  std::optional<ReleaseConfig> time_only;
  std::optional<ReleaseConfig> location_only;
};

struct DerivedReleases {
  ReleasedTable time_and_location;
  ReleasedTable time_only;
  ReleasedTable location_only;
  GroundTruthLedger ledger;

  const ReleasedTable& table(TableKind kind) const;
};

// Runs the release (either zero-handling variant, per config.zero_skip)
// over the full query universe of each table.
absl::StatusOr<DerivedReleases> DeriveReleases(
    const RawDataset& data, const ReleaseConfig& config,
    const ReleaseOverrides& overrides = {});

// Recomputes raw + noise -> released for every ledger entry; used to check
// a ledger against its tables.
absl::Status ReplayLedger(const GroundTruthLedger& ledger,
                          const ReleaseConfig& config);

// Route ids whose events fall in `cell`.
std::set<std::string> RoutesContributing(const RawDataset& data,
                                         const AttributeCombination& cell);

}  // namespace tapaudit

#endif  // TAPAUDIT_SYNTH_RELEASES_H_
