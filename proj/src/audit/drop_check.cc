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

#include "tapaudit/audit/drop_check.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"

namespace tapaudit {

absl::StatusOr<DropVerdict> CheckDropConsistency(double reported_percentage,
                                                 int64_t candidate_rows) {
  if (!(reported_percentage >= 0 && reported_percentage <= 100)) {
    return absl::InvalidArgumentError("percentage must be in [0, 100]");
  }
  if (candidate_rows <= 0) {
    return absl::InvalidArgumentError("candidate row count must be positive");
  }
  DropVerdict verdict;
  verdict.implied_rows =
      reported_percentage / 100.0 * static_cast<double>(candidate_rows);
  const double nearest = std::round(verdict.implied_rows);
  verdict.whole_rows = static_cast<int64_t>(nearest);
  verdict.consistent = std::fabs(verdict.implied_rows - nearest) <=
                       1e-9 * std::max(1.0, verdict.implied_rows);
  return verdict;
}

}  // namespace tapaudit
