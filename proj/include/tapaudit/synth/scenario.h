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

// Synthetic transit scenarios: timetabled routes, Poisson boardings per
// service and stop, and the tap events they produce.

#ifndef TAPAUDIT_SYNTH_SCENARIO_H_
#define TAPAUDIT_SYNTH_SCENARIO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "tapaudit/mechanism/types.h"

namespace tapaudit {

// Where passengers who fail to tap off are recorded.
inline constexpr char kUnknownLocation[] = "UNKNOWN";

// Departures from the first stop at first_bin, first_bin + headway, ...,
// up to last_bin.
struct HeadwayBand {
  int first_bin = 0;
  int last_bin = 0;
  int headway_bins = 1;

  friend bool operator==(const HeadwayBand&, const HeadwayBand&) = default;
};

// One direction of one route.
struct RouteSpec {
  std::string id;
  TransportMode mode = TransportMode::kBus;
  std::vector<std::string> stops;
  // Fixed travel time between adjacent stops.
  int travel_bins = 1;
  std::vector<HeadwayBand> headways;
  // Every passenger taps off at their alighting stop.
  bool auto_tap_off = false;
  // Otherwise each taps off there with this probability, else at UNKNOWN.
  double tap_off_probability = 1.0;

  friend bool operator==(const RouteSpec&, const RouteSpec&) = default;
};

enum class DemandKind {
  kPoisson,
  // Exactly round(mean_boardings) per service; pins a raw count.
  kFixed,
};

// Boardings at one stop for services departing the origin within
// [first_bin, last_bin].
struct DemandRate {
  std::string route_id;
  int boarding_stop = 0;
  int first_bin = 0;
  int last_bin = kBinsPerDay - 1;
  double mean_boardings = 0;
  DemandKind kind = DemandKind::kPoisson;
  // Over the downstream stops boarding_stop + 1, ...; empty means uniform.
  std::vector<double> alighting_weights;

  friend bool operator==(const DemandRate&, const DemandRate&) = default;
};

struct DemandModel {
  std::vector<DemandRate> rates;

  friend bool operator==(const DemandModel&, const DemandModel&) = default;
};

struct ScenarioConfig {
  std::string name;
  std::vector<CalendarDate> dates;
  std::vector<RouteSpec> routes;
  DemandModel demand;
  uint64_t seed = 0;

  absl::Status Validate() const;
  const RouteSpec* FindRoute(absl::string_view id) const;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) =
      default;
};

// One synthetic passenger: indices into the generated event list. Kept
// out of every released artifact.
struct Journey {
  size_t tap_on = 0;
  std::optional<size_t> tap_off;
};

struct SyntheticTravel {
  RawDataset raw;
  std::vector<Journey> journeys;
};

// Events past midnight roll over onto the next date. Each (date, route)
// draws from its own stream MixSeeds(MixSeeds(seed, date), route id), so
// adding a route leaves the others' events unchanged.
absl::StatusOr<SyntheticTravel> GenerateTravel(const ScenarioConfig& config);

// GenerateTravel without the journey links.
absl::StatusOr<RawDataset> GenerateRaw(const ScenarioConfig& config);

}  // namespace tapaudit

#endif  // TAPAUDIT_SYNTH_SCENARIO_H_
