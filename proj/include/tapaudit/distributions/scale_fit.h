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

// Estimators for the Laplace scale b from observed differences of paired
// counts (each difference ~ L1 - L2).

#ifndef TAPAUDIT_DISTRIBUTIONS_SCALE_FIT_H_
#define TAPAUDIT_DISTRIBUTIONS_SCALE_FIT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace tapaudit {

// Observed on - off differences. Values come from rounded releases and are
// usually integral, but real-valued releases are accepted too.
struct DifferenceSample {
  std::vector<double> values;
};

enum class FitMethod { kMle, kMoments };

absl::string_view FitMethodName(FitMethod method);

struct ScaleEstimate {
  double b_hat = 0;
  FitMethod method = FitMethod::kMle;
  int64_t sample_size = 0;
  // Maximized log-likelihood; MLE only.
  std::optional<double> log_likelihood;
  // +infinity when the sample carries no information about b.
  double stderr_approx = 0;
  bool degenerate = false;
  std::vector<std::string> warnings;
};

// Search interval for the MLE.
inline constexpr double kMinFitScale = 1e-3;
inline constexpr double kMaxFitScale = 1e3;

// Sum over the sample of log DiffPdf(u_i; b).
double DifferenceLogLikelihood(std::span<const double> values, double b);

// Maximizes the difference-of-Laplace likelihood over b in
// [kMinFitScale, kMaxFitScale]. An all-zero sample has its supremum at the
// lower bound; that bound is returned with degenerate = true and an infinite
// stderr.
absl::StatusOr<ScaleEstimate> FitScaleMle(const DifferenceSample& sample);

// b_hat = sqrt(s^2 / 4), since Var(L1 - L2) = 4 b^2. Needs two or more
// values and nonzero variance.
absl::StatusOr<ScaleEstimate> FitScaleMoments(const DifferenceSample& sample);

}  // namespace tapaudit

#endif  // TAPAUDIT_DISTRIBUTIONS_SCALE_FIT_H_
