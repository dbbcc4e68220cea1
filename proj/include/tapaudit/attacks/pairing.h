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

// Noise-scale recovery from a point-to-point route. With automatic tap-off,
// the tap-ons at the origin in bin h and the tap-offs at the destination in
// bin h + duration count the same passengers, so the released pair differs
// only by the difference of two independent Laplace draws.

#ifndef TAPAUDIT_ATTACKS_PAIRING_H_
#define TAPAUDIT_ATTACKS_PAIRING_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "tapaudit/distributions/scale_fit.h"
#include "tapaudit/mechanism/types.h"

namespace tapaudit {

struct PairSpec {
  // Informational; releases carry no route column.
  std::string route;
  std::string on_location;
  std::string off_location;
  int trip_duration_bins = 2;
  // Without automatic tap-off, on and off counts need not agree.
  bool auto_tap_off = true;

  absl::Status Validate() const;
};

struct PairedDifferences {
  // on - off for each usable pair.
  DifferenceSample sample;
  // Pairs dropped because one side was suppressed to 0.
  int64_t skipped_suppressed = 0;
  std::vector<std::string> warnings;
};

// Minimum usable pairs before RecoverScale stops warning.
inline constexpr int64_t kMinReliablePairs = 30;

// Walks every (date, bin) with a nonzero on-count at spec.on_location and
// pairs it with the off-count at spec.off_location, same date, bin +
// duration. Fails if any entry lacks a time or a location.
absl::StatusOr<PairedDifferences> PairPointToPoint(const ReleasedTable& table,
                                                   const PairSpec& spec);

// PairPointToPoint followed by FitScaleMle. Fails when no pair is usable.
absl::StatusOr<ScaleEstimate> RecoverScale(const ReleasedTable& table,
                                           const PairSpec& spec);

}  // namespace tapaudit

#endif  // TAPAUDIT_ATTACKS_PAIRING_H_
