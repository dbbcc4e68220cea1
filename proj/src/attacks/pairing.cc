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

#include "tapaudit/attacks/pairing.h"

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "tapaudit/common/status_macros.h"

namespace tapaudit {

absl::Status PairSpec::Validate() const {
  if (trip_duration_bins < 1) {
    return absl::InvalidArgumentError("trip duration must be at least 1 bin");
  }
  if (on_location.empty() || off_location.empty()) {
    return absl::InvalidArgumentError("pair locations must be nonempty");
  }
  if (on_location == off_location) {
    return absl::InvalidArgumentError("pair locations must differ");
  }
  return absl::OkStatus();
}

absl::StatusOr<PairedDifferences> PairPointToPoint(const ReleasedTable& table,
                                                   const PairSpec& spec) {
  RETURN_IF_ERROR(spec.Validate());
  for (const auto& [cell, value] : table.entries) {
    if (cell.kind() != TableKind::kTimeAndLocation) {
      return absl::InvalidArgumentError(absl::StrCat(
          "pairing needs a time-and-location release; found a ",
          TableKindName(cell.kind()), " row ", cell.CanonicalKey()));
    }
  }

  PairedDifferences result;
  if (!spec.auto_tap_off) {
    result.warnings.push_back(
        "route has no automatic tap-off; on and off counts may differ in the "
        "raw data");
  }
  for (const auto& [cell, on_value] : table.entries) {
    if (cell.tap_type != TapType::kOn || *cell.location != spec.on_location ||
        on_value == 0.0) {
      continue;
    }
    const int off_bin = *cell.time_bin + spec.trip_duration_bins;
    if (off_bin >= kBinsPerDay) continue;
    AttributeCombination off_cell = cell;
    off_cell.tap_type = TapType::kOff;
    off_cell.time_bin = off_bin;
    off_cell.location = spec.off_location;
    auto it = table.entries.find(off_cell);
    if (it == table.entries.end()) continue;
    if (it->second == 0.0) {
      ++result.skipped_suppressed;
      continue;
    }
    result.sample.values.push_back(on_value - it->second);
  }
  return result;
}

absl::StatusOr<ScaleEstimate> RecoverScale(const ReleasedTable& table,
                                           const PairSpec& spec) {
  ASSIGN_OR_RETURN(PairedDifferences pairs, PairPointToPoint(table, spec));
  if (pairs.sample.values.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("no usable pairs between '", spec.on_location, "' and '",
                     spec.off_location, "'"));
  }
  ASSIGN_OR_RETURN(ScaleEstimate estimate, FitScaleMle(pairs.sample));
  const int64_t usable = static_cast<int64_t>(pairs.sample.values.size());
  if (usable < kMinReliablePairs) {
    estimate.warnings.push_back(absl::StrCat(
        "only ", usable, " usable pairs (fewer than ", kMinReliablePairs,
        "); estimate is unreliable"));
  }
  for (std::string& w : pairs.warnings) estimate.warnings.push_back(w);
  return estimate;
}

}  // namespace tapaudit
