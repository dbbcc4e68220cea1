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

#ifndef TAPAUDIT_AUDIT_DETECTION_H_
#define TAPAUDIT_AUDIT_DETECTION_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "tapaudit/mechanism/types.h"

namespace tapaudit {

// How likely a group of g people, alone at an otherwise empty cell, is to
// be revealed under zero-skipping: any released value proves the raw count
// was nonzero.
struct DetectionBound {
  int64_t group_size = 0;
  double threshold = 0;
  double scale = 0;
  // Laplace density at the gap between the group and the threshold:
  // exp(-(t - g)/b) / (2b). This is the single-point lower bound on delta.
  // Can exceed 1 for very small b; see unit_density_guard.
  double density_bound = 0;
  // Pr[g + L > t] = exp(-(t - g)/b) / 2: the chance the cell is published.
  double tail_probability = 0;
  // t - g >= b ln(1/(2b)), under which density_bound <= 1.
  bool unit_density_guard = true;
};

// Requires 1 <= g <= t; a group already above the threshold is detected
// trivially.
absl::StatusOr<DetectionBound> ComputeDetectionBound(
    int64_t group_size, const ReleaseConfig& config);

}  // namespace tapaudit

#endif  // TAPAUDIT_AUDIT_DETECTION_H_
