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

#include "tapaudit/distributions/laplace.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace tapaudit {

absl::StatusOr<NoiseScale> NoiseScale::Create(double b) {
  if (!std::isfinite(b) || b <= 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("noise scale must be positive and finite, got ", b));
  }
  return NoiseScale(b);
}

absl::StatusOr<double> LaplacePdf(double x, NoiseScale scale) {
  if (!std::isfinite(x)) {
    return absl::OutOfRangeError("laplace pdf needs a finite argument");
  }
  const double b = scale.value();
  return std::exp(-std::fabs(x) / b) / (2.0 * b);
}

absl::StatusOr<double> LaplaceCdf(double x, NoiseScale scale) {
  if (std::isnan(x)) {
    return absl::OutOfRangeError("laplace cdf argument is NaN");
  }
  const double b = scale.value();
  if (x < 0) return 0.5 * std::exp(x / b);
  return 1.0 - 0.5 * std::exp(-x / b);
}

double LaplaceUpperTail(double x, NoiseScale scale) {
  const double b = scale.value();
  if (x >= 0) return 0.5 * std::exp(-x / b);
  return 1.0 - 0.5 * std::exp(x / b);
}

double LaplaceIntervalMass(double lo, double hi, NoiseScale scale) {
  if (!(lo < hi)) return 0.0;
  const double b = scale.value();
  if (lo >= 0) {
    // 0.5 (e^{-lo/b} - e^{-hi/b}) = 0.5 e^{-lo/b} (1 - e^{-(hi-lo)/b}).
    if (std::isinf(hi)) return 0.5 * std::exp(-lo / b);
    return -0.5 * std::exp(-lo / b) * std::expm1(-(hi - lo) / b);
  }
  if (hi <= 0) {
    if (std::isinf(lo)) return 0.5 * std::exp(hi / b);
    return -0.5 * std::exp(hi / b) * std::expm1(-(hi - lo) / b);
  }
  // Straddles the mode.
  return 1.0 - 0.5 * std::exp(lo / b) - 0.5 * std::exp(-hi / b);
}

double LaplaceSample(NoiseScale scale, SplitMix64& rng) {
  const double u = UniformOpen(rng);
  const double b = scale.value();
  if (u < 0.5) return b * std::log(2.0 * u);
  return -b * std::log(2.0 * (1.0 - u));
}

}  // namespace tapaudit
