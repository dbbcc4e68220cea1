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

// Zero-mean Laplace distribution Lap(0, b): the noise added to every released
// count, so that a released value is c = c_raw + L.

#ifndef TAPAUDIT_DISTRIBUTIONS_LAPLACE_H_
#define TAPAUDIT_DISTRIBUTIONS_LAPLACE_H_

#include "absl/status/statusor.h"
#include "tapaudit/distributions/random.h"

namespace tapaudit {

// Scale parameter b of a Laplace distribution, in count units. Always
// positive and finite once constructed.
class NoiseScale {
 public:
  static absl::StatusOr<NoiseScale> Create(double b);

  double value() const { return b_; }

  friend bool operator==(NoiseScale, NoiseScale) = default;

 private:
  explicit NoiseScale(double b) : b_(b) {}
  double b_;
};

// exp(-|x|/b) / (2b). Fails on non-finite x.
absl::StatusOr<double> LaplacePdf(double x, NoiseScale scale);

// Pr[L <= x]. Accepts +-infinity; fails on NaN.
absl::StatusOr<double> LaplaceCdf(double x, NoiseScale scale);

// Pr[L > x], computed without the cancellation of 1 - cdf for large x.
double LaplaceUpperTail(double x, NoiseScale scale);

// Pr[lo < L < hi] for lo <= hi (endpoints may be infinite). Keeps full
// relative precision deep in either tail, which the exact audit relies on
// when it takes ratios of tiny masses.
double LaplaceIntervalMass(double lo, double hi, NoiseScale scale);

// One draw by inverse-CDF from a single uniform.
double LaplaceSample(NoiseScale scale, SplitMix64& rng);

}  // namespace tapaudit

#endif  // TAPAUDIT_DISTRIBUTIONS_LAPLACE_H_
