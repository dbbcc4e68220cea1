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

#ifndef TAPAUDIT_AUDIT_DROP_CHECK_H_
#define TAPAUDIT_AUDIT_DROP_CHECK_H_

#include <cstdint>

#include "absl/status/statusor.h"

namespace tapaudit {

// Whether a reported "percentage of rows dropped" can be a whole number of
// rows out of the candidates.
struct DropVerdict {
  bool consistent = false;
  // percentage / 100 * candidate_rows.
  double implied_rows = 0;
  // Nearest whole row count; meaningful when consistent.
  int64_t whole_rows = 0;
};

// Consistent iff implied_rows is within 1e-9 * max(1, implied_rows) of an
// integer. Percentage must be in [0, 100]; candidate_rows positive.
absl::StatusOr<DropVerdict> CheckDropConsistency(double reported_percentage,
                                                 int64_t candidate_rows);

}  // namespace tapaudit

#endif  // TAPAUDIT_AUDIT_DROP_CHECK_H_
