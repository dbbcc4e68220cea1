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

#include "tapaudit/attacks/suppression.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "tapaudit/common/status_macros.h"

namespace tapaudit {
namespace {

// log of min_s e^{-s a} (1 - b^2 s^2)^{-m} in units x = a / b. The
// minimizer t = b s solves x t^2 + 2 m t - x = 0.
double LogChernoffTail(double x, double m) {
  const double t = x / (m + std::sqrt(m * m + x * x));
  return -t * x - m * std::log1p(-t * t);
}

// Smallest x with 2 * ChernoffTail(x) <= alpha.
double ChernoffHalfWidthUnits(double m, double alpha) {
  const double target = std::log(alpha / 2.0);
  double lo = 0.0;
  double hi = 1.0;
  while (LogChernoffTail(hi, m) > target) {
    lo = hi;
    hi *= 2.0;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (LogChernoffTail(mid, m) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

}  // namespace

absl::string_view IntervalMethodName(IntervalMethod method) {
  switch (method) {
    case IntervalMethod::kTailBound:
      return "tail-bound";
    case IntervalMethod::kEventIntersection:
      return "intersection";
  }
  return "unknown";
}

absl::StatusOr<IntervalMethod> ParseIntervalMethod(absl::string_view text) {
  if (text == "tail-bound") return IntervalMethod::kTailBound;
  if (text == "intersection") return IntervalMethod::kEventIntersection;
  return absl::InvalidArgumentError(absl::StrCat(
      "interval method must be 'tail-bound' or 'intersection', got '", text,
      "'"));
}

absl::StatusOr<double> SuppressionHalfWidth(int64_t noise_terms,
                                            NoiseScale scale, double alpha,
                                            IntervalMethod method) {
  if (!(alpha > 0 && alpha < 1)) {
    return absl::InvalidArgumentError(
        absl::StrCat("alpha must be in (0, 1), got ", alpha));
  }
  if (noise_terms < 1) {
    return absl::InvalidArgumentError("need at least one noise term");
  }
  const double b = scale.value();
  const double m = static_cast<double>(noise_terms);
  switch (method) {
    case IntervalMethod::kEventIntersection:
      return b * ((m - 1) * std::log(2.0) - std::log(alpha));
    case IntervalMethod::kTailBound: {
      const double union_units = m * std::log(m / alpha);
      return b * std::min(union_units, ChernoffHalfWidthUnits(m, alpha));
    }
  }
  return absl::InternalError("unhandled interval method");
}

absl::StatusOr<SuppressionEstimate> EstimateSuppressed(
    double total_released, std::span<const double> component_released,
    NoiseScale scale, double alpha, IntervalMethod method) {
  if (!std::isfinite(total_released)) {
    return absl::InvalidArgumentError("total must be finite");
  }
  SuppressionEstimate estimate;
  estimate.point_estimate = total_released;
  for (double c : component_released) {
    if (!std::isfinite(c)) {
      return absl::InvalidArgumentError("components must be finite");
    }
    estimate.point_estimate -= c;
  }
  estimate.noise_terms = static_cast<int64_t>(component_released.size()) + 1;
  estimate.alpha = alpha;
  estimate.method = method;
  ASSIGN_OR_RETURN(estimate.half_width,
                   SuppressionHalfWidth(estimate.noise_terms, scale, alpha,
                                        method));
  estimate.interval_low = estimate.point_estimate - estimate.half_width;
  estimate.interval_high = estimate.point_estimate + estimate.half_width;
  const int64_t first = std::max<int64_t>(
      0, static_cast<int64_t>(std::ceil(estimate.interval_low)));
  const int64_t last =
      static_cast<int64_t>(std::floor(estimate.interval_high));
  for (int64_t k = first; k <= last; ++k) {
    estimate.captured_integers.push_back(k);
  }
  return estimate;
}

}  // namespace tapaudit
