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

#include "tapaudit/distributions/scale_fit.h"

#include <cmath>
#include <limits>
#include <utility>

#include "absl/status/status.h"
#include "boost/math/tools/minima.hpp"

namespace tapaudit {

absl::string_view FitMethodName(FitMethod method) {
  switch (method) {
    case FitMethod::kMle:
      return "MLE";
    case FitMethod::kMoments:
      return "Moments";
  }
  return "unknown";
}

double DifferenceLogLikelihood(std::span<const double> values, double b) {
  double sum = 0;
  for (double u : values) {
    const double a = std::fabs(u);
    sum += std::log(a + b) - a / b;
  }
  return sum - static_cast<double>(values.size()) * std::log(4.0 * b * b);
}

absl::StatusOr<ScaleEstimate> FitScaleMle(const DifferenceSample& sample) {
  const std::span<const double> values(sample.values);
  if (values.empty()) {
    return absl::InvalidArgumentError("MLE fit needs a nonempty sample");
  }
  for (double u : values) {
    if (!std::isfinite(u)) {
      return absl::InvalidArgumentError("sample contains a non-finite value");
    }
  }

  ScaleEstimate estimate;
  estimate.method = FitMethod::kMle;
  estimate.sample_size = static_cast<int64_t>(values.size());

  bool all_zero = true;
  for (double u : values) all_zero = all_zero && u == 0.0;
  if (all_zero) {
    estimate.b_hat = kMinFitScale;
    estimate.log_likelihood = DifferenceLogLikelihood(values, kMinFitScale);
    estimate.stderr_approx = std::numeric_limits<double>::infinity();
    estimate.degenerate = true;
    estimate.warnings.push_back(
        "all differences are zero; likelihood is maximized at the search "
        "lower bound");
    return estimate;
  }

  auto negative_log_likelihood = [values](double b) {
    return -DifferenceLogLikelihood(values, b);
  };
  // Relative tolerance 2^-25 (the most Brent's method can deliver on a
  // double objective); absolute error stays below 1e-6 for b_hat <= 30.
  constexpr int kBits = std::numeric_limits<double>::digits / 2;
  boost::uintmax_t max_iterations = 500;
  const std::pair<double, double> best = boost::math::tools::brent_find_minima(
      negative_log_likelihood, kMinFitScale, kMaxFitScale, kBits,
      max_iterations);
  const double b_hat = best.first;
  estimate.b_hat = b_hat;
  estimate.log_likelihood = -best.second;

  // Observed Fisher information by central difference.
  const double h = 1e-4 * b_hat;
  const double second_derivative =
      (DifferenceLogLikelihood(values, b_hat + h) -
       2.0 * DifferenceLogLikelihood(values, b_hat) +
       DifferenceLogLikelihood(values, b_hat - h)) /
      (h * h);
  estimate.stderr_approx = second_derivative < 0
                               ? 1.0 / std::sqrt(-second_derivative)
                               : std::numeric_limits<double>::infinity();
  if (b_hat <= kMinFitScale * (1 + 1e-6) ||
      b_hat >= kMaxFitScale * (1 - 1e-6)) {
    estimate.warnings.push_back("estimate is at the edge of the search range");
  }
  return estimate;
}

absl::StatusOr<ScaleEstimate> FitScaleMoments(const DifferenceSample& sample) {
  const std::vector<double>& values = sample.values;
  if (values.size() < 2) {
    return absl::InvalidArgumentError(
        "moment fit needs at least two differences");
  }
  const double n = static_cast<double>(values.size());
  double mean = 0;
  for (double u : values) mean += u;
  mean /= n;
  double m2 = 0;
  double m4 = 0;
  for (double u : values) {
    const double d = (u - mean) * (u - mean);
    m2 += d;
    m4 += d * d;
  }
  const double variance = m2 / (n - 1);
  if (!(variance > 0)) {
    return absl::FailedPreconditionError(
        "differences have zero variance; scale is not identifiable");
  }
  m4 /= n;

  ScaleEstimate estimate;
  estimate.method = FitMethod::kMoments;
  estimate.sample_size = static_cast<int64_t>(values.size());
  estimate.b_hat = std::sqrt(variance / 4.0);
  // Delta method: Var(s^2) ~ (m4 - s^4) / n and db/d(s^2) = 1 / (8 b).
  const double variance_of_variance =
      std::max(0.0, (m4 - variance * variance) / n);
  estimate.stderr_approx =
      std::sqrt(variance_of_variance) / (8.0 * estimate.b_hat);
  return estimate;
}

}  // namespace tapaudit
