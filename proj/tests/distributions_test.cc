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

#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "boost/math/distributions/laplace.hpp"
#include "boost/math/distributions/poisson.hpp"
#include "boost/math/quadrature/gauss_kronrod.hpp"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "tapaudit/distributions/difference.h"
#include "tapaudit/distributions/laplace.h"
#include "tapaudit/distributions/random.h"
#include "tapaudit/distributions/scale_fit.h"
#include "test_util.h"

namespace tapaudit {
namespace {

using ::testing::DoubleNear;
using ::testing::HasSubstr;

NoiseScale Scale(double b) { return *NoiseScale::Create(b); }

// Direct numerical convolution of two Laplace densities, split at the
// kinks 0 and u.
double ConvolvedDensity(double u, double b) {
  boost::math::laplace_distribution<double> lap(0.0, b);
  auto integrand = [&](double x) {
    return boost::math::pdf(lap, x) * boost::math::pdf(lap, x - u);
  };
  using Quad = boost::math::quadrature::gauss_kronrod<double, 61>;
  const double lo = std::min(0.0, u);
  const double hi = std::max(0.0, u);
  const double inf = std::numeric_limits<double>::infinity();
  double total = Quad::integrate(integrand, -inf, lo, 15, 1e-14) +
                 Quad::integrate(integrand, hi, inf, 15, 1e-14);
  if (hi > lo) total += Quad::integrate(integrand, lo, hi, 15, 1e-14);
  return total;
}

std::vector<double> SimulateDifferences(double b, int n, uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<double> values;
  values.reserve(n);
  for (int i = 0; i < n; ++i) {
    values.push_back(LaplaceSample(Scale(b), rng) -
                     LaplaceSample(Scale(b), rng));
  }
  return values;
}

TEST(NoiseScaleTest, RejectsNonPositiveAndNonFinite) {
  EXPECT_FALSE(NoiseScale::Create(0).ok());
  EXPECT_FALSE(NoiseScale::Create(-1).ok());
  EXPECT_FALSE(NoiseScale::Create(std::nan("")).ok());
  EXPECT_FALSE(
      NoiseScale::Create(std::numeric_limits<double>::infinity()).ok());
  EXPECT_EQ(NoiseScale::Create(1.4)->value(), 1.4);
}

TEST(LaplaceTest, MatchesBoost) {
  for (double b : {0.1, 0.7, 1.4, 5.0}) {
    boost::math::laplace_distribution<double> lap(0.0, b);
    for (double x : {-30.0, -3.0, -0.5, 0.0, 0.25, 1.0, 4.0, 17.0}) {
      EXPECT_NEAR(*LaplacePdf(x, Scale(b)), boost::math::pdf(lap, x),
                  1e-15 * std::max(1.0, boost::math::pdf(lap, x)));
      EXPECT_NEAR(*LaplaceCdf(x, Scale(b)), boost::math::cdf(lap, x), 1e-15);
      const double upper =
          boost::math::cdf(boost::math::complement(lap, x));
      EXPECT_NEAR(LaplaceUpperTail(x, Scale(b)), upper, 1e-14 * upper);
    }
  }
}

TEST(LaplaceTest, PdfErrorsOnNonFinite) {
  EXPECT_FALSE(LaplacePdf(std::nan(""), Scale(1)).ok());
  EXPECT_FALSE(
      LaplacePdf(std::numeric_limits<double>::infinity(), Scale(1)).ok());
  EXPECT_FALSE(LaplaceCdf(std::nan(""), Scale(1)).ok());
  EXPECT_EQ(*LaplaceCdf(-std::numeric_limits<double>::infinity(), Scale(1)),
            0.0);
}

TEST(LaplaceTest, IntervalMassAgreesWithCdfAndKeepsTailPrecision) {
  const NoiseScale b = Scale(1.4);
  boost::math::laplace_distribution<double> lap(0.0, 1.4);
  EXPECT_NEAR(LaplaceIntervalMass(-1, 2, b),
              boost::math::cdf(lap, 2.0) - boost::math::cdf(lap, -1.0),
              1e-15);
  // Deep in the upper tail a CDF difference would cancel to zero.
  const double far = LaplaceIntervalMass(60, 61, b);
  const double expected = 0.5 * (std::exp(-60 / 1.4) - std::exp(-61 / 1.4));
  EXPECT_NEAR(far, expected, 1e-12 * expected);
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_DOUBLE_EQ(LaplaceIntervalMass(-inf, inf, b), 1.0);
  EXPECT_EQ(LaplaceIntervalMass(3, 3, b), 0.0);
}

TEST(LaplaceTest, SamplesFollowTheCdf) {
  SplitMix64 rng(11);
  std::vector<double> draws;
  for (int i = 0; i < 20000; ++i) draws.push_back(LaplaceSample(Scale(1.4), rng));
  const double p = testing::KsPValue(
      draws, [](double x) { return *LaplaceCdf(x, Scale(1.4)); });
  EXPECT_GT(p, 1e-3);
}

TEST(RandomTest, SameSeedSameStream) {
  SplitMix64 a(42);
  SplitMix64 b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a(), b());
  EXPECT_NE(MixSeeds(1, 2), MixSeeds(2, 1));
  EXPECT_NE(MixSeeds(7, 0), MixSeeds(7, 1));
}

TEST(RandomTest, Fingerprint64IsFnv1a) {
  // Published FNV-1a test vectors.
  EXPECT_EQ(Fingerprint64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(Fingerprint64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(Fingerprint64("foobar"), 0x85944171f73967e8ULL);
}

TEST(RandomTest, UniformOpenNeverHitsTheEndpoints) {
  SplitMix64 rng(3);
  double sum = 0;
  for (int i = 0; i < 100000; ++i) {
    const double u = UniformOpen(rng);
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 4 * std::sqrt(1.0 / 12 / 100000));
}

TEST(RandomTest, PoissonMatchesPmf) {
  for (double mean : {0.8, 5.0, 21.0, 90.0}) {
    SplitMix64 rng(static_cast<uint64_t>(mean * 100));
    constexpr int kDraws = 50000;
    const int cells = static_cast<int>(mean + 10 * std::sqrt(mean) + 10);
    std::vector<double> observed(cells + 1, 0.0);
    for (int i = 0; i < kDraws; ++i) {
      const int64_t k = SamplePoisson(mean, rng);
      ++observed[std::min<int64_t>(k, cells)];
    }
    boost::math::poisson_distribution<double> pois(mean);
    std::vector<double> expected(cells + 1);
    for (int k = 0; k < cells; ++k) {
      expected[k] = kDraws * boost::math::pdf(pois, k);
    }
    expected[cells] =
        kDraws * boost::math::cdf(boost::math::complement(pois, cells - 1));
    EXPECT_GT(testing::ChiSquarePValue(observed, expected), 1e-4)
        << "mean " << mean;
  }
  SplitMix64 rng(1);
  EXPECT_EQ(SamplePoisson(0.0, rng), 0);
}

TEST(RandomTest, CategoricalAndBernoulliFrequencies) {
  SplitMix64 rng(5);
  const std::vector<double> weights = {1, 0, 3, 6};
  std::vector<double> observed(4, 0.0);
  constexpr int kDraws = 40000;
  int heads = 0;
  for (int i = 0; i < kDraws; ++i) {
    ++observed[SampleCategorical(weights, rng)];
    heads += SampleBernoulli(0.95, rng) ? 1 : 0;
  }
  EXPECT_EQ(observed[1], 0);
  EXPECT_GT(testing::ChiSquarePValue({observed[0], observed[2], observed[3]},
                                     {4000, 12000, 24000}),
            1e-4);
  EXPECT_NEAR(heads, 0.95 * kDraws, 4 * std::sqrt(kDraws * 0.95 * 0.05));
}

TEST(DiffPdfTest, MatchesNumericalConvolution) {
  for (double b : {0.5, 1.4, 3.0}) {
    for (double u : {-12.0, -3.0, -1.0, -0.1, 0.0, 0.3, 1.0, 2.5, 7.0}) {
      EXPECT_NEAR(DiffPdf(u, Scale(b)), ConvolvedDensity(u, b), 1e-10)
          << "b=" << b << " u=" << u;
    }
  }
}

TEST(DiffPdfTest, IsSymmetricAndIntegratesToOne) {
  const NoiseScale b = Scale(1.4);
  EXPECT_DOUBLE_EQ(DiffPdf(0, b), 1.0 / (4 * 1.4));
  for (double u : {0.5, 2.0, 9.0}) EXPECT_EQ(DiffPdf(u, b), DiffPdf(-u, b));
  using Quad = boost::math::quadrature::gauss_kronrod<double, 61>;
  const double half = Quad::integrate(
      [&](double u) { return DiffPdf(u, b); }, 0.0,
      std::numeric_limits<double>::infinity(), 15, 1e-14);
  EXPECT_NEAR(2 * half, 1.0, 1e-10);
}

TEST(ScaleFitTest, MleRecoversScale) {
  for (double b : {0.7, 1.4, 4.0}) {
    DifferenceSample sample{SimulateDifferences(b, 100000, 17)};
    auto fit = FitScaleMle(sample);
    ASSERT_TRUE(fit.ok()) << fit.status();
    EXPECT_NEAR(fit->b_hat, b, 0.02 * b);
    EXPECT_EQ(fit->sample_size, 100000);
    EXPECT_FALSE(fit->degenerate);
    EXPECT_GT(fit->stderr_approx, 0);
    // Rough Fisher-information scale: stderr ~ b / sqrt(n).
    EXPECT_LT(fit->stderr_approx, 5 * b / std::sqrt(100000.0));
  }
}

TEST(ScaleFitTest, MleIsTheLikelihoodMaximum) {
  DifferenceSample sample{SimulateDifferences(1.4, 500, 23)};
  auto fit = FitScaleMle(sample);
  ASSERT_TRUE(fit.ok());
  // Grid search oracle.
  double best_b = 0;
  double best_ll = -std::numeric_limits<double>::infinity();
  for (double b = 0.5; b <= 3.0; b += 1e-4) {
    const double ll = DifferenceLogLikelihood(sample.values, b);
    if (ll > best_ll) {
      best_ll = ll;
      best_b = b;
    }
  }
  EXPECT_NEAR(fit->b_hat, best_b, 2e-4);
  EXPECT_GE(*fit->log_likelihood, best_ll - 1e-9);
}

TEST(ScaleFitTest, MomentsMatchesClosedForm) {
  DifferenceSample sample{{-3, 1, 0, 2, -1, 4}};
  const double mean = 0.5;
  double ss = 0;
  for (double v : sample.values) ss += (v - mean) * (v - mean);
  const double s2 = ss / 5;
  auto fit = FitScaleMoments(sample);
  ASSERT_TRUE(fit.ok());
  EXPECT_DOUBLE_EQ(fit->b_hat, std::sqrt(s2 / 4));
  EXPECT_EQ(fit->method, FitMethod::kMoments);
  EXPECT_FALSE(fit->log_likelihood.has_value());
}

TEST(ScaleFitTest, MomentsAgreesWithMleOnLargeSamples) {
  DifferenceSample sample{SimulateDifferences(1.4, 200000, 31)};
  EXPECT_NEAR(FitScaleMoments(sample)->b_hat, FitScaleMle(sample)->b_hat,
              0.03);
}

TEST(ScaleFitTest, EdgeCases) {
  EXPECT_FALSE(FitScaleMle(DifferenceSample{}).ok());
  EXPECT_FALSE(FitScaleMoments(DifferenceSample{{1.0}}).ok());
  auto constant = FitScaleMoments(DifferenceSample{{2, 2, 2}});
  EXPECT_EQ(constant.status().code(), absl::StatusCode::kFailedPrecondition);
  auto zeros = FitScaleMle(DifferenceSample{{0, 0, 0, 0}});
  ASSERT_TRUE(zeros.ok());
  EXPECT_TRUE(zeros->degenerate);
  EXPECT_EQ(zeros->b_hat, kMinFitScale);
  EXPECT_TRUE(std::isinf(zeros->stderr_approx));
  auto bad = FitScaleMle(DifferenceSample{{1, std::nan("")}});
  EXPECT_THAT(bad.status().message(), HasSubstr("non-finite"));
}

}  // namespace
}  // namespace tapaudit
