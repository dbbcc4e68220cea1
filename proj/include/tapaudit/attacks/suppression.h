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

// Recovering a suppressed cell from an independently released total.
//
// If a marginal total S = x_1 + ... + x_k + z + L_0 is published next to the
// components X_i = x_i + L_i but the cell z was suppressed, then
//   S - sum X_i = z + (L_0 - L_1 - ... - L_k),
// an unbiased estimate of z whose error is a sum of m = k + 1 independent
// Lap(0, b) terms (signs do not matter by symmetry), with variance 2 m b^2.

#ifndef TAPAUDIT_ATTACKS_SUPPRESSION_H_
#define TAPAUDIT_ATTACKS_SUPPRESSION_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "tapaudit/distributions/laplace.h"

namespace tapaudit {

enum class IntervalMethod {
  // Valid bound on Pr[|L_1 + ... + L_m| >= a]: the smaller of the Chernoff
  // bound (MGF of Lap(0, b) is 1 / (1 - b^2 s^2)) and the union bound
  // m * exp(-a / (m b)). Coverage >= 1 - alpha for every m.
  kTailBound,
  // a = b ln(2^(m-1) / alpha), from requiring every Z_i = z + m L_i to
  // exceed the interval at once. That event is a subset of the miss event,
  // so this interval under-covers for m >= 2 (about 92% at m = 3, alpha =
  // 0.05). Kept for comparison; exact for m = 1.
  kEventIntersection,
};

absl::string_view IntervalMethodName(IntervalMethod method);
absl::StatusOr<IntervalMethod> ParseIntervalMethod(absl::string_view text);

struct SuppressionEstimate {
  // S - sum of components.
  double point_estimate = 0;
  double half_width = 0;
  double alpha = 0;
  double interval_low = 0;
  double interval_high = 0;
  // Integers in [low, high], clipped below at 0.
  std::vector<int64_t> captured_integers;
  // Number of independent noise terms in the estimate.
  int64_t noise_terms = 0;
  IntervalMethod method = IntervalMethod::kTailBound;
};

// Half-width a for m noise terms of scale b at level 1 - alpha.
absl::StatusOr<double> SuppressionHalfWidth(int64_t noise_terms,
                                            NoiseScale scale, double alpha,
                                            IntervalMethod method);

// Rounding of the released values is not modeled in the interval.
absl::StatusOr<SuppressionEstimate> EstimateSuppressed(
    double total_released, std::span<const double> component_released,
    NoiseScale scale, double alpha,
    IntervalMethod method = IntervalMethod::kTailBound);

}  // namespace tapaudit

#endif  // TAPAUDIT_ATTACKS_SUPPRESSION_H_
