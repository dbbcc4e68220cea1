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
#include <map>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "tapaudit/attacks/pairing.h"
#include "tapaudit/attacks/presence.h"
#include "tapaudit/attacks/suppression.h"
#include "tapaudit/distributions/laplace.h"
#include "tapaudit/distributions/random.h"
#include "tapaudit/synth/releases.h"
#include "tapaudit/synth/scenarios.h"

namespace tapaudit {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

NoiseScale Scale(double b) { return *NoiseScale::Create(b); }

ReleaseConfig Config(double b, double t, bool zero_skip, uint64_t seed = 1) {
  ReleaseConfig config{.scale = Scale(b)};
  config.threshold = t;
  config.zero_skip = zero_skip;
  config.seed = seed;
  return config;
}

AttributeCombination Cell(absl::string_view location, int bin, TapType type,
                          int32_t date = 20160725) {
  return AttributeCombination{
      .mode = TransportMode::kFerry,
      .date = *CalendarDate::FromYyyymmdd(date),
      .tap_type = type,
      .time_bin = bin,
      .location = std::string(location)};
}

PairSpec ManlyToQuay() {
  return PairSpec{.route = "F1",
                  .on_location = kManlyWharf,
                  .off_location = kCircularQuay,
                  .trip_duration_bins = 2,
                  .auto_tap_off = true};
}

TEST(PairingTest, PairsOnWithOffTwoBinsLater) {
  ReleasedTable table;
  table.entries[Cell(kManlyWharf, 27, TapType::kOn)] = 88;
  table.entries[Cell(kCircularQuay, 29, TapType::kOff)] = 86;
  table.entries[Cell(kManlyWharf, 28, TapType::kOn)] = 40;
  table.entries[Cell(kCircularQuay, 30, TapType::kOff)] = 0;  // suppressed
  table.entries[Cell(kManlyWharf, 95, TapType::kOn)] = 30;     // past midnight
  table.entries[Cell(kManlyWharf, 40, TapType::kOn)] = 0;
  table.entries[Cell(kCircularQuay, 42, TapType::kOff)] = 25;
  auto pairs = PairPointToPoint(table, ManlyToQuay());
  ASSERT_TRUE(pairs.ok()) << pairs.status();
  EXPECT_THAT(pairs->sample.values, ElementsAre(2.0));
  EXPECT_EQ(pairs->skipped_suppressed, 1);
}

TEST(PairingTest, RejectsMarginalsAndBadSpecs) {
  ReleasedTable table;
  AttributeCombination marginal = Cell("", 27, TapType::kOn);
  marginal.location.reset();
  table.entries[marginal] = 150;
  EXPECT_FALSE(PairPointToPoint(table, ManlyToQuay()).ok());
  PairSpec same = ManlyToQuay();
  same.off_location = kManlyWharf;
  EXPECT_FALSE(same.Validate().ok());
  PairSpec zero = ManlyToQuay();
  zero.trip_duration_bins = 0;
  EXPECT_FALSE(zero.Validate().ok());
}

TEST(PairingTest, RecoverScaleFailsWithoutPairsAndWarnsWhenFew) {
  ReleasedTable empty;
  EXPECT_FALSE(RecoverScale(empty, ManlyToQuay()).ok());
  ReleasedTable few;
  for (int bin = 20; bin < 30; ++bin) {
    few.entries[Cell(kManlyWharf, bin, TapType::kOn)] = 50 + bin % 3;
    few.entries[Cell(kCircularQuay, bin + 2, TapType::kOff)] = 50;
  }
  PairSpec manual = ManlyToQuay();
  manual.auto_tap_off = false;
  auto estimate = RecoverScale(few, manual);
  ASSERT_TRUE(estimate.ok());
  EXPECT_EQ(estimate->sample_size, 10);
  EXPECT_EQ(estimate->warnings.size(), 2);
}

TEST(PairingTest, DifferencesEqualLedgerNoiseOnSyntheticFerry) {
  auto raw = GenerateRaw(ScenarioManlyFerry());
  ASSERT_TRUE(raw.ok());
  ReleaseConfig config = Config(1.4, 18, true, 3);
  config.round_output = false;
  auto releases = DeriveReleases(*raw, config);
  ASSERT_TRUE(releases.ok());
  std::map<AttributeCombination, const LedgerEntry*> ledger;
  for (const LedgerEntry& e : releases->ledger.entries) ledger[e.cell] = &e;

  auto pairs = PairPointToPoint(releases->time_and_location, ManlyToQuay());
  ASSERT_TRUE(pairs.ok());
  ASSERT_GT(pairs->sample.values.size(), 900);
  // Rebuild the expected differences from the ledger in table order.
  std::vector<double> expected;
  for (const auto& [cell, value] : releases->time_and_location.entries) {
    if (cell.location != kManlyWharf || cell.tap_type != TapType::kOn ||
        value == 0 || *cell.time_bin + 2 >= kBinsPerDay) {
      continue;
    }
    const LedgerEntry& on = *ledger.at(cell);
    const LedgerEntry& off = *ledger.at(
        Cell(kCircularQuay, *cell.time_bin + 2, TapType::kOff,
             cell.date.yyyymmdd()));
    if (off.released == 0) continue;
    // Auto tap-off: the same passengers on both ends.
    ASSERT_EQ(on.raw_count, off.raw_count);
    expected.push_back(*on.noise - *off.noise);
  }
  ASSERT_EQ(pairs->sample.values.size(), expected.size());
  for (size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(pairs->sample.values[i], expected[i], 1e-9);
  }
}

TEST(SuppressionTest, IntersectionHalfWidthFormula) {
  EXPECT_DOUBLE_EQ(*SuppressionHalfWidth(3, Scale(1.4), 0.05,
                                         IntervalMethod::kEventIntersection),
                   1.4 * std::log(80.0));
  EXPECT_DOUBLE_EQ(*SuppressionHalfWidth(1, Scale(1.4), 0.05,
                                         IntervalMethod::kEventIntersection),
                   1.4 * std::log(20.0));
}

TEST(SuppressionTest, TailBoundSolvesTheChernoffEquation) {
  for (int m : {1, 2, 3, 6}) {
    for (double alpha : {0.01, 0.05, 0.2}) {
      const double a =
          *SuppressionHalfWidth(m, Scale(1.0), alpha, IntervalMethod::kTailBound);
      // Grid oracle for 2 min_s e^{-sa} (1 - s^2)^{-m}.
      double best = std::numeric_limits<double>::infinity();
      for (double s = 1e-4; s < 1; s += 1e-5) {
        best = std::min(best, -s * a - m * std::log1p(-s * s));
      }
      const double union_bound = m * std::log(m / alpha);
      if (a < union_bound - 1e-9) {
        EXPECT_NEAR(2 * std::exp(best), alpha, 1e-6 * alpha)
            << "m=" << m << " alpha=" << alpha;
      } else {
        EXPECT_NEAR(a, union_bound, 1e-9);
      }
    }
  }
  EXPECT_NEAR(*SuppressionHalfWidth(3, Scale(1.4), 0.05,
                                    IntervalMethod::kTailBound),
              11.4176, 1e-3);
}

TEST(SuppressionTest, TailBoundCoversAndIntersectionDoesNot) {
  SplitMix64 rng(77);
  constexpr int kRuns = 200000;
  const double tail = *SuppressionHalfWidth(3, Scale(1.4), 0.05,
                                            IntervalMethod::kTailBound);
  const double meet = *SuppressionHalfWidth(
      3, Scale(1.4), 0.05, IntervalMethod::kEventIntersection);
  int tail_misses = 0;
  int meet_misses = 0;
  for (int i = 0; i < kRuns; ++i) {
    const double error = LaplaceSample(Scale(1.4), rng) -
                         LaplaceSample(Scale(1.4), rng) -
                         LaplaceSample(Scale(1.4), rng);
    tail_misses += std::abs(error) > tail;
    meet_misses += std::abs(error) > meet;
  }
  EXPECT_LT(tail_misses, 0.05 * kRuns);
  // The documented shortfall of the intersection formula.
  EXPECT_GT(meet_misses, 0.06 * kRuns);
}

TEST(SuppressionTest, EstimateFromReleasedMarginal) {
  const std::vector<double> components = {91, 41};
  auto estimate = EstimateSuppressed(150, components, Scale(1.4), 0.05);
  ASSERT_TRUE(estimate.ok());
  EXPECT_EQ(estimate->point_estimate, 18);
  EXPECT_EQ(estimate->noise_terms, 3);
  EXPECT_EQ(estimate->method, IntervalMethod::kTailBound);
  EXPECT_DOUBLE_EQ(estimate->interval_low, 18 - estimate->half_width);
  EXPECT_EQ(estimate->captured_integers.front(), 7);
  EXPECT_EQ(estimate->captured_integers.back(), 29);

  auto narrow = EstimateSuppressed(150, components, Scale(1.4), 0.99);
  auto wide = EstimateSuppressed(150, components, Scale(1.4), 0.01);
  EXPECT_LT(narrow->half_width, wide->half_width);

  auto clipped = EstimateSuppressed(10, components, Scale(1.4), 0.05);
  EXPECT_EQ(clipped->captured_integers.size(), 0);

  EXPECT_FALSE(EstimateSuppressed(150, components, Scale(1.4), 1.5).ok());
  EXPECT_FALSE(EstimateSuppressed(150, components, Scale(1.4), 0).ok());
  EXPECT_EQ(*ParseIntervalMethod("intersection"),
            IntervalMethod::kEventIntersection);
  EXPECT_THAT(ParseIntervalMethod("exact").status().message(),
              HasSubstr("tail-bound"));
}

TEST(SuppressionTest, EstimatorIsUnbiasedWithVarianceSixBSquared) {
  SplitMix64 rng(8);
  constexpr int kRuns = 100000;
  double sum = 0;
  double sum_sq = 0;
  for (int i = 0; i < kRuns; ++i) {
    const double total = 18 + 89 + 40 + LaplaceSample(Scale(1.4), rng);
    const std::vector<double> parts = {89 + LaplaceSample(Scale(1.4), rng),
                                       40 + LaplaceSample(Scale(1.4), rng)};
    const double z = EstimateSuppressed(total, parts, Scale(1.4), 0.05)
                         ->point_estimate;
    sum += z;
    sum_sq += z * z;
  }
  const double mean = sum / kRuns;
  const double var = sum_sq / kRuns - mean * mean;
  EXPECT_NEAR(mean, 18, 4 * std::sqrt(6 * 1.96 / kRuns));
  EXPECT_NEAR(var, 6 * 1.96, 0.03 * 6 * 1.96);
}

TEST(PresenceTest, AnyPublishedValueProvesPresenceUnderZeroSkip) {
  const ReleaseConfig skip = Config(1.4, 18, true);
  EXPECT_EQ(DetectPresence(18, skip).verdict, Presence::kCertainPresence);
  EXPECT_EQ(DetectPresence(25, skip).verdict, Presence::kCertainPresence);
  EXPECT_EQ(DetectPresence(0, skip).verdict, Presence::kInconclusive);
  EXPECT_EQ(DetectPresence(17, skip).verdict, Presence::kInconclusive);

  ReleaseConfig unrounded = skip;
  unrounded.round_output = false;
  EXPECT_EQ(DetectPresence(18, unrounded).verdict, Presence::kInconclusive);
  EXPECT_EQ(DetectPresence(18.01, unrounded).verdict,
            Presence::kCertainPresence);

  const ReleaseConfig corrected = Config(1.4, 18, false);
  for (double v : {0.0, 18.0, 19.0, 90.0}) {
    EXPECT_EQ(DetectPresence(v, corrected).verdict, Presence::kInconclusive);
  }
  EXPECT_EQ(PresenceName(Presence::kCertainPresence), "certain_presence");
}

}  // namespace
}  // namespace tapaudit
