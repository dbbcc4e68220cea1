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
#include <set>
#include <sstream>

#include "boost/math/distributions/laplace.hpp"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "tapaudit/mechanism/output_distribution.h"
#include "tapaudit/mechanism/release.h"
#include "tapaudit/mechanism/table_io.h"
#include "tapaudit/mechanism/types.h"

namespace tapaudit {
namespace {

using ::testing::HasSubstr;

CalendarDate Date(int32_t yyyymmdd) {
  return *CalendarDate::FromYyyymmdd(yyyymmdd);
}

ReleaseConfig Config(double b, double t, bool zero_skip, uint64_t seed = 1) {
  ReleaseConfig config{.scale = *NoiseScale::Create(b)};
  config.threshold = t;
  config.zero_skip = zero_skip;
  config.seed = seed;
  return config;
}

AttributeCombination Cell(absl::string_view location, int bin,
                          TapType type = TapType::kOff) {
  return AttributeCombination{.mode = TransportMode::kFerry,
                              .date = Date(20160812),
                              .tap_type = type,
                              .time_bin = bin,
                              .location = std::string(location)};
}

TapEvent Event(absl::string_view location, int bin,
               TapType type = TapType::kOff, int32_t date = 20160812) {
  return TapEvent{.mode = TransportMode::kFerry,
                  .date = Date(date),
                  .tap_type = type,
                  .time_bin = bin,
                  .location = std::string(location),
                  .route = "F1"};
}

// Independent oracle for the released value's distribution, from the
// Laplace CDF directly.
double OracleAtom(int64_t count, int64_t k, double b, double t,
                  bool zero_skip) {
  if (zero_skip && count == 0) return k == 0 ? 1.0 : 0.0;
  boost::math::laplace_distribution<double> lap(static_cast<double>(count), b);
  if (k == 0) {
    double mass = boost::math::cdf(lap, t);
    if (t < 0.5) mass += boost::math::cdf(lap, 0.5) - boost::math::cdf(lap, t);
    return mass;
  }
  const double hi = k + 0.5;
  const double lo = std::max(t, k - 0.5);
  if (hi <= lo) return 0.0;
  return boost::math::cdf(lap, hi) - boost::math::cdf(lap, lo);
}

TEST(TypesTest, CalendarDates) {
  EXPECT_FALSE(CalendarDate::FromYyyymmdd(20160230).ok());
  EXPECT_FALSE(CalendarDate::Parse("2016-08-11").ok());
  EXPECT_EQ(Date(20160831).AddDays(1), Date(20160901));
  EXPECT_EQ(Date(20161231).AddDays(1), Date(20170101));
  EXPECT_EQ(Date(20160301).AddDays(-1), Date(20160229));
  EXPECT_EQ(Date(20160811).ToString(), "20160811");
  EXPECT_LT(Date(20160811), Date(20160812));
}

TEST(TypesTest, TimeBins) {
  EXPECT_EQ(FormatTimeBin(0), "00:00");
  EXPECT_EQ(FormatTimeBin(94), "23:30");
  EXPECT_EQ(*ParseTimeBin("06:45"), 27);
  EXPECT_FALSE(ParseTimeBin("06:50").ok());
  EXPECT_FALSE(ParseTimeBin("24:00").ok());
  for (int bin = 0; bin < kBinsPerDay; ++bin) {
    EXPECT_EQ(*ParseTimeBin(FormatTimeBin(bin)), bin);
  }
}

TEST(TypesTest, CombinationKindsAndKeys) {
  AttributeCombination cell = Cell("Manly Wharf", 0);
  EXPECT_EQ(cell.kind(), TableKind::kTimeAndLocation);
  AttributeCombination time_only = cell;
  time_only.location.reset();
  EXPECT_EQ(time_only.kind(), TableKind::kTimeOnly);
  AttributeCombination loc_only = cell;
  loc_only.time_bin.reset();
  EXPECT_EQ(loc_only.kind(), TableKind::kLocationOnly);
  std::set<std::string> keys = {cell.CanonicalKey(), time_only.CanonicalKey(),
                                loc_only.CanonicalKey()};
  EXPECT_EQ(keys.size(), 3);
  EXPECT_TRUE(cell.Matches(Event("Manly Wharf", 0)));
  EXPECT_FALSE(cell.Matches(Event("Manly Wharf", 1)));
  EXPECT_TRUE(time_only.Matches(Event("Cremorne Point Wharf", 0)));
  EXPECT_FALSE(loc_only.Matches(Event("Manly Wharf", 0, TapType::kOn)));
}

TEST(CountCellsTest, MatchesBruteForceAndKeepsZeros) {
  RawDataset data;
  for (int i = 0; i < 90; ++i) data.events.push_back(Event("Manly Wharf", 0));
  for (int i = 0; i < 17; ++i) {
    data.events.push_back(Event("Cremorne Point Wharf", 0));
  }
  data.events.push_back(Event("Manly Wharf", 0, TapType::kOn));
  data.events.push_back(Event("Manly Wharf", 0, TapType::kOff, 20160811));

  std::set<AttributeCombination> queries = {
      Cell("Manly Wharf", 0), Cell("Cremorne Point Wharf", 0),
      Cell("South Mosman Wharf", 0), Cell("Manly Wharf", 1)};
  AttributeCombination marginal = Cell("", 0);
  marginal.location.reset();
  queries.insert(marginal);

  const ContingencyTable table = CountCells(data, queries);
  ASSERT_EQ(table.counts.size(), queries.size());
  for (const AttributeCombination& q : queries) {
    int64_t brute = 0;
    for (const TapEvent& e : data.events) {
      brute += e.mode == q.mode && e.date == q.date &&
               e.tap_type == q.tap_type &&
               (!q.time_bin || *q.time_bin == e.time_bin) &&
               (!q.location || *q.location == e.location);
    }
    EXPECT_EQ(table.counts.at(q), brute) << q.CanonicalKey();
  }
  EXPECT_EQ(table.counts.at(marginal), 107);
  EXPECT_EQ(table.counts.at(Cell("South Mosman Wharf", 0)), 0);
}

TEST(ReleaseTest, ThresholdAndRound) {
  const ReleaseConfig config = Config(1.4, 18, true);
  EXPECT_EQ(ThresholdAndRound(18.0, config), 0);
  EXPECT_EQ(ThresholdAndRound(18.2, config), 18);
  EXPECT_EQ(ThresholdAndRound(18.5, config), 19);
  EXPECT_EQ(ThresholdAndRound(-3, config), 0);
  ReleaseConfig raw = config;
  raw.round_output = false;
  EXPECT_EQ(ThresholdAndRound(18.2, raw), 18.2);
}

ContingencyTable SmallTable() {
  ContingencyTable table;
  for (int bin = 0; bin < kBinsPerDay; ++bin) {
    table.counts[Cell("Manly Wharf", bin)] = bin % 4 == 0 ? 0 : 5 * bin;
  }
  return table;
}

TEST(ReleaseTest, SecondAlgorithmKeepsZerosAndThresholds) {
  const ContingencyTable table = SmallTable();
  for (uint64_t seed = 0; seed < 50; ++seed) {
    auto released = ReleaseSecondAlgorithm(table, Config(1.4, 18, true, seed));
    ASSERT_TRUE(released.ok());
    for (const auto& [cell, value] : released->entries) {
      if (table.counts.at(cell) == 0) EXPECT_EQ(value, 0);
      EXPECT_TRUE(value == 0 || value >= 18) << value;
      EXPECT_EQ(value, std::floor(value));
    }
  }
  EXPECT_EQ(ReleaseSecondAlgorithm(table, Config(1.4, 18, false)).status().code(),
            absl::StatusCode::kFailedPrecondition);
  EXPECT_EQ(ReleaseCorrected(table, Config(1.4, 18, true)).status().code(),
            absl::StatusCode::kFailedPrecondition);
}

TEST(ReleaseTest, CorrectedPerturbsZeros) {
  // At t = 0 a raw zero crosses the threshold half the time.
  ContingencyTable table;
  for (int bin = 0; bin < kBinsPerDay; ++bin) {
    table.counts[Cell("Manly Wharf", bin)] = 0;
  }
  auto released = ReleaseCorrected(table, Config(1.4, 0, false));
  ASSERT_TRUE(released.ok());
  int nonzero = 0;
  for (const auto& [cell, value] : released->entries) nonzero += value > 0;
  EXPECT_GT(nonzero, 20);
  EXPECT_LT(nonzero, 76);
}

TEST(ReleaseTest, DeterministicAndIndependentOfOtherCells) {
  const ContingencyTable table = SmallTable();
  const ReleaseConfig config = Config(1.4, 18, true, 99);
  auto a = ReleaseSecondAlgorithm(table, config);
  auto b = ReleaseSecondAlgorithm(table, config);
  EXPECT_EQ(a->entries, b->entries);
  EXPECT_EQ(a->config_fingerprint, config.Fingerprint());

  ContingencyTable one;
  const AttributeCombination cell = Cell("Manly Wharf", 37);
  one.counts[cell] = table.counts.at(cell);
  EXPECT_EQ(ReleaseSecondAlgorithm(one, config)->entries.at(cell),
            a->entries.at(cell));

  ReleaseConfig other_seed = config;
  other_seed.seed = 100;
  EXPECT_NE(ReleaseSecondAlgorithm(table, other_seed)->entries, a->entries);
  EXPECT_EQ(other_seed.Fingerprint(), config.Fingerprint());
}

TEST(ReleaseTest, TraceRecordsNoiseExactly) {
  const ContingencyTable table = SmallTable();
  const ReleaseConfig config = Config(1.4, 18, true, 5);
  auto trace = ReleaseWithTrace(table, config, 3);
  ASSERT_TRUE(trace.ok());
  for (const auto& [cell, count] : table.counts) {
    const std::optional<double>& noise = trace->noise.at(cell);
    if (count == 0) {
      EXPECT_FALSE(noise.has_value());
      continue;
    }
    ASSERT_TRUE(noise.has_value());
    EXPECT_EQ(*noise, CellNoise(config, 3, cell));
    EXPECT_EQ(trace->table.entries.at(cell),
              ThresholdAndRound(count + *noise, config));
  }
}

TEST(LaplaceMechanismTest, AddsCenteredNoiseOfTheRightScale) {
  std::vector<double> values(20000, 10.0);
  auto noisy = LaplaceMechanism(values, 1.0, 0.5, 7);
  ASSERT_TRUE(noisy.ok());
  double sum = 0;
  double sum_sq = 0;
  for (double v : *noisy) {
    sum += v - 10;
    sum_sq += (v - 10) * (v - 10);
  }
  const double n = values.size();
  EXPECT_NEAR(sum / n, 0, 4 * std::sqrt(8.0 / n));
  // Var = 2 b^2 = 8.
  EXPECT_NEAR(sum_sq / n, 8.0, 0.4);
  EXPECT_FALSE(LaplaceMechanism(values, 1.0, 0.0, 7).ok());
  EXPECT_FALSE(LaplaceMechanism(values, -1.0, 1.0, 7).ok());
}

TEST(OutputDistributionTest, MatchesLaplaceCdfOracle) {
  for (bool zero_skip : {true, false}) {
    for (double t : {0.0, 0.3, 18.0, 18.5}) {
      for (int64_t count : {0, 1, 17, 20, 100}) {
        const ReleaseConfig config = Config(1.4, t, zero_skip);
        const OutputDistribution dist =
            ComputeOutputDistribution(count, config);
        EXPECT_NEAR(dist.TotalMass(), 1.0, 1e-12);
        EXPECT_LE(dist.tail_mass, 1e-15);
        for (const auto& [k, mass] : dist.atoms) {
          EXPECT_NEAR(mass, OracleAtom(count, k, 1.4, t, zero_skip),
                      1e-15 + 1e-12 * mass)
              << "count=" << count << " t=" << t << " k=" << k;
        }
        // Values strictly between 0 and the first publishable value are
        // never produced.
        for (int64_t k = 1; k + 0.5 <= t; ++k) {
          EXPECT_TRUE(dist.IsImpossible(k)) << k;
        }
      }
    }
  }
}

TEST(OutputDistributionTest, ZeroSkipZeroIsAPointMass) {
  const OutputDistribution dist =
      ComputeOutputDistribution(0, Config(1.4, 18, true));
  EXPECT_EQ(dist.Mass(0), 1.0);
  EXPECT_TRUE(dist.IsImpossible(19));
  EXPECT_EQ(dist.tail_mass, 0);
}

TEST(OutputDistributionTest, SharedUniverse) {
  const ReleaseConfig config = Config(1.4, 18, false);
  const OutputDistribution a = ComputeOutputDistribution(0, config, 100);
  const OutputDistribution b = ComputeOutputDistribution(100, config);
  EXPECT_EQ(a.max_atom, b.max_atom);
}

TEST(TableIoTest, ReleasedTableRoundTrips) {
  ReleasedTable table;
  table.entries[Cell("Manly Wharf", 0)] = 91;
  table.entries[Cell("Circular Quay, No. 3", 0)] = 41;
  AttributeCombination time_only = Cell("", 0);
  time_only.location.reset();
  table.entries[time_only] = 150;
  AttributeCombination loc_only = Cell("Manly Wharf", 0);
  loc_only.time_bin.reset();
  table.entries[loc_only] = 18.25;
  std::ostringstream out;
  WriteReleasedTableCsv(out, table);
  EXPECT_THAT(out.str(), HasSubstr("ferry,20160812,off,00:00,,150\n"));
  EXPECT_THAT(out.str(), HasSubstr("ferry,20160812,off,,Manly Wharf,18.25\n"));
  std::istringstream in(out.str());
  auto back = ReadReleasedTableCsv(in);
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(back->entries, table.entries);
}

TEST(TableIoTest, ReleasedTableErrorsNameTheLine) {
  std::istringstream bad_mode(
      "mode,date,type,time,location,count\n"
      "ferry,20160812,off,00:00,Manly Wharf,91\n"
      "boat,20160812,off,00:00,Manly Wharf,91\n");
  auto result = ReadReleasedTableCsv(bad_mode);
  ASSERT_FALSE(result.ok());
  EXPECT_THAT(result.status().message(), HasSubstr("line 3"));

  std::istringstream missing_column(
      "mode,date,type,time,count\nferry,20160812,off,00:00,91\n");
  EXPECT_FALSE(ReadReleasedTableCsv(missing_column).ok());

  std::istringstream duplicate(
      "mode,date,type,time,location,count\n"
      "ferry,20160812,off,00:00,Manly Wharf,91\n"
      "ferry,20160812,off,00:00,Manly Wharf,92\n");
  EXPECT_THAT(ReadReleasedTableCsv(duplicate).status().message(),
              HasSubstr("line 3"));

  std::istringstream negative(
      "mode,date,type,time,location,count\n"
      "ferry,20160812,off,00:00,Manly Wharf,-1\n");
  EXPECT_FALSE(ReadReleasedTableCsv(negative).ok());
}

TEST(TableIoTest, RawEventsRoundTrip) {
  RawDataset data;
  data.events = {Event("Manly Wharf", 0), Event("Cremorne Point Wharf", 95,
                                                TapType::kOn, 20160811)};
  std::ostringstream out;
  WriteRawEventsCsv(out, data);
  std::istringstream in(out.str());
  auto back = ReadRawEventsCsv(in);
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(back->events, data.events);

  std::istringstream bad_time(
      "mode,date,type,time,location,route\nbus,20160726,on,04:31,2770,N70\n");
  EXPECT_THAT(ReadRawEventsCsv(bad_time).status().message(),
              HasSubstr("line 2"));
}

}  // namespace
}  // namespace tapaudit
