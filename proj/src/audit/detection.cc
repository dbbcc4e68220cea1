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

#include "tapaudit/audit/detection.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "tapaudit/common/status_macros.h"

namespace tapaudit {

absl::StatusOr<DetectionBound> ComputeDetectionBound(
    int64_t group_size, const ReleaseConfig& config) {
  RETURN_IF_ERROR(config.Validate());
  if (group_size < 1) {
    return absl::InvalidArgumentError("group size must be at least 1");
  }
  if (static_cast<double>(group_size) > config.threshold) {
    return absl::InvalidArgumentError(absl::StrCat(
        "group of ", group_size, " exceeds threshold ", config.threshold,
        "; it is released (and detected) with probability above 1/2"));
  }
  const double b = config.scale.value();
  const double gap = config.threshold - static_cast<double>(group_size);
  DetectionBound bound;
  bound.group_size = group_size;
  bound.threshold = config.threshold;
  bound.scale = b;
  bound.density_bound = std::exp(-gap / b) / (2.0 * b);
  bound.tail_probability = 0.5 * std::exp(-gap / b);
  bound.unit_density_guard = gap >= b * std::log(1.0 / (2.0 * b));
  return bound;
}

}  // namespace tapaudit
