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

#include "tapaudit/synth/scenarios.h"

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace tapaudit {
namespace {

CalendarDate Date(int32_t yyyymmdd) {
  return *CalendarDate::FromYyyymmdd(yyyymmdd);
}

int Bin(int hour, int minute) { return hour * 4 + minute / kBinMinutes; }

DemandRate Rate(std::string route, int stop, int first, int last, double mean,
                std::vector<double> alight = {}) {
  return DemandRate{.route_id = std::move(route),
                    .boarding_stop = stop,
                    .first_bin = first,
                    .last_bin = last,
                    .mean_boardings = mean,
                    .kind = DemandKind::kPoisson,
                    .alighting_weights = std::move(alight)};
}

}  // namespace

ScenarioConfig ScenarioSecretFerry(int hidden_count) {
  ScenarioConfig config;
  config.name = "secret-ferry";
  config.seed = 20160811;
  config.dates = {Date(20160811)};
  const int last_ferry = Bin(23, 30);
  config.routes = {
      RouteSpec{.id = "F1-CQ-MW",
                .mode = TransportMode::kFerry,
                .stops = {kCircularQuay, kManlyWharf},
                .travel_bins = 2,
                .headways = {{last_ferry, last_ferry, 1}},
                .auto_tap_off = true},
      RouteSpec{.id = "F1-MW-CQ",
                .mode = TransportMode::kFerry,
                .stops = {kManlyWharf, kCircularQuay},
                .travel_bins = 2,
                .headways = {{last_ferry, last_ferry, 1}},
                .auto_tap_off = true},
      RouteSpec{.id = "F6",
                .mode = TransportMode::kFerry,
                .stops = {kCircularQuay, kCremornePoint, kSouthMosman},
                .travel_bins = 1,
                .headways = {{Bin(23, 45), Bin(23, 45), 1}},
                .auto_tap_off = true},
  };
  DemandRate hidden = Rate("F6", 0, 0, kBinsPerDay - 1, hidden_count, {1, 0});
  hidden.kind = DemandKind::kFixed;
  config.demand.rates = {
      Rate("F1-CQ-MW", 0, 0, kBinsPerDay - 1, 90),
      Rate("F1-MW-CQ", 0, 0, kBinsPerDay - 1, 40),
      hidden,
  };
  return config;
}

ScenarioConfig ScenarioNightBus() {
  ScenarioConfig config;
  config.name = "night-bus";
  config.seed = 20160726;
  config.dates = {Date(20160726)};
  const int first_regular = Bin(5, 0);
  config.routes = {
      // Penrith, Mount Druitt, Blacktown, Parramatta, City.
      RouteSpec{.id = "N70",
                .mode = TransportMode::kBus,
                .stops = {"2750", "2770", "2148", "2150", "2000"},
                .travel_bins = 1,
                .headways = {{Bin(4, 15), Bin(4, 15), 1}},
                .auto_tap_off = false,
                .tap_off_probability = 0.95},
      RouteSpec{.id = "700",
                .mode = TransportMode::kBus,
                .stops = {"2770", "2148", "2150"},
                .travel_bins = 1,
                .headways = {{first_regular, Bin(22, 0), 2}},
                .auto_tap_off = false,
                .tap_off_probability = 0.95},
      RouteSpec{.id = "735",
                .mode = TransportMode::kBus,
                .stops = {"2750", "2770", "2148"},
                .travel_bins = 1,
                .headways = {{first_regular, Bin(22, 0), 2}},
                .auto_tap_off = false,
                .tap_off_probability = 0.95},
  };
  config.demand.rates = {
      Rate("N70", 0, 0, kBinsPerDay - 1, 6, {1, 1, 2, 4}),
      Rate("N70", 1, 0, kBinsPerDay - 1, 21, {1, 2, 5}),
      Rate("N70", 2, 0, kBinsPerDay - 1, 31, {1, 3}),
      Rate("N70", 3, 0, kBinsPerDay - 1, 10),
      Rate("700", 0, first_regular, kBinsPerDay - 1, 14),
      Rate("700", 1, first_regular, kBinsPerDay - 1, 9),
      Rate("735", 0, first_regular, kBinsPerDay - 1, 12),
      Rate("735", 1, first_regular, kBinsPerDay - 1, 8),
  };
  return config;
}

ScenarioConfig ScenarioManlyFerry() {
  ScenarioConfig config;
  config.name = "manly-ferry";
  config.seed = 20160725;
  for (int day = 0; day < 7; ++day) {
    config.dates.push_back(Date(20160725).AddDays(day));
  }
  for (int day = 0; day < 7; ++day) {
    config.dates.push_back(Date(20160808).AddDays(day));
  }
  config.routes = {
      RouteSpec{.id = "F1-MW-CQ",
                .mode = TransportMode::kFerry,
                .stops = {kManlyWharf, kCircularQuay},
                .travel_bins = 2,
                .headways = {{Bin(5, 30), Bin(23, 0), 1}},
                .auto_tap_off = true},
      RouteSpec{.id = "F1-CQ-MW",
                .mode = TransportMode::kFerry,
                .stops = {kCircularQuay, kManlyWharf},
                .travel_bins = 2,
                .headways = {{Bin(5, 30), Bin(23, 0), 1}},
                .auto_tap_off = true},
  };
  // Morning peak into the city, evening peak out of it.
  struct Band {
    int first;
    int last;
    double inbound;
    double outbound;
  };
  const Band bands[] = {{Bin(5, 30), Bin(6, 45), 30, 22},
                        {Bin(7, 0), Bin(9, 45), 80, 35},
                        {Bin(10, 0), Bin(15, 45), 40, 40},
                        {Bin(16, 0), Bin(18, 45), 35, 75},
                        {Bin(19, 0), Bin(23, 45), 22, 25}};
  for (const Band& band : bands) {
    config.demand.rates.push_back(
        Rate("F1-MW-CQ", 0, band.first, band.last, band.inbound));
    config.demand.rates.push_back(
        Rate("F1-CQ-MW", 0, band.first, band.last, band.outbound));
  }
  return config;
}

std::vector<absl::string_view> BuiltinScenarioNames() {
  return {"secret-ferry", "night-bus", "manly-ferry"};
}

absl::StatusOr<ScenarioConfig> BuiltinScenario(absl::string_view name) {
  if (name == "secret-ferry") return ScenarioSecretFerry();
  if (name == "night-bus") return ScenarioNightBus();
  if (name == "manly-ferry") return ScenarioManlyFerry();
  return absl::NotFoundError(
      absl::StrCat("unknown scenario '", name, "'; built-ins are ",
                   absl::StrJoin(BuiltinScenarioNames(), ", ")));
}

}  // namespace tapaudit
