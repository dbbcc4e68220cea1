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

#include "tapaudit/synth/scenario.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "absl/strings/str_cat.h"
#include "tapaudit/common/status_macros.h"
#include "tapaudit/distributions/random.h"

namespace tapaudit {
namespace {

bool ValidBin(int bin) { return bin >= 0 && bin < kBinsPerDay; }

absl::Status ValidateRoute(const RouteSpec& route) {
  auto error = [&](absl::string_view what) {
    return absl::InvalidArgumentError(
        absl::StrCat("route '", route.id, "': ", what));
  };
  if (route.id.empty()) return absl::InvalidArgumentError("empty route id");
  if (route.stops.size() < 2) return error("needs at least two stops");
  for (const std::string& stop : route.stops) {
    if (stop.empty()) return error("empty stop name");
  }
  if (route.travel_bins < 1) return error("travel_bins must be >= 1");
  if (route.headways.empty()) return error("no headway bands");
  for (const HeadwayBand& band : route.headways) {
    if (!ValidBin(band.first_bin) || !ValidBin(band.last_bin) ||
        band.first_bin > band.last_bin) {
      return error("headway band outside [0, 95] or reversed");
    }
    if (band.headway_bins < 1) return error("headway must be >= 1 bin");
  }
  if (!(route.tap_off_probability >= 0 && route.tap_off_probability <= 1)) {
    return error("tap_off_probability must be in [0, 1]");
  }
  return absl::OkStatus();
}

// Date and bin of `bin` (possibly past 95) counted from `date`.
std::pair<CalendarDate, int> Normalize(CalendarDate date, int bin) {
  return {date.AddDays(bin / kBinsPerDay), bin % kBinsPerDay};
}

}  // namespace

const RouteSpec* ScenarioConfig::FindRoute(absl::string_view id) const {
  for (const RouteSpec& route : routes) {
    if (route.id == id) return &route;
  }
  return nullptr;
}

absl::Status ScenarioConfig::Validate() const {
  if (dates.empty()) return absl::InvalidArgumentError("scenario has no dates");
  if (routes.empty()) {
    return absl::InvalidArgumentError("scenario has no routes");
  }
  std::set<std::string> ids;
  for (const RouteSpec& route : routes) {
    RETURN_IF_ERROR(ValidateRoute(route));
    if (!ids.insert(route.id).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate route id '", route.id, "'"));
    }
  }
  for (const DemandRate& rate : demand.rates) {
    const RouteSpec* route = FindRoute(rate.route_id);
    if (route == nullptr) {
      return absl::InvalidArgumentError(
          absl::StrCat("demand refers to unknown route '", rate.route_id, "'"));
    }
    const int downstream =
        static_cast<int>(route->stops.size()) - rate.boarding_stop - 1;
    if (rate.boarding_stop < 0 || downstream < 1) {
      return absl::InvalidArgumentError(absl::StrCat(
          "demand on '", rate.route_id, "': boarding stop ",
          rate.boarding_stop, " has no downstream stop"));
    }
    if (!ValidBin(rate.first_bin) || !ValidBin(rate.last_bin) ||
        rate.first_bin > rate.last_bin) {
      return absl::InvalidArgumentError(absl::StrCat(
          "demand on '", rate.route_id, "': band outside [0, 95]"));
    }
    if (!std::isfinite(rate.mean_boardings) || rate.mean_boardings < 0) {
      return absl::InvalidArgumentError(absl::StrCat(
          "demand on '", rate.route_id, "': mean must be finite and >= 0"));
    }
    if (!rate.alighting_weights.empty()) {
      if (static_cast<int>(rate.alighting_weights.size()) != downstream) {
        return absl::InvalidArgumentError(absl::StrCat(
            "demand on '", rate.route_id, "': expected ", downstream,
            " alighting weights"));
      }
      double total = 0;
      for (double w : rate.alighting_weights) {
        if (!(w >= 0) || !std::isfinite(w)) {
          return absl::InvalidArgumentError("alighting weights must be >= 0");
        }
        total += w;
      }
      if (!(total > 0)) {
        return absl::InvalidArgumentError(
            "alighting weights must have a positive sum");
      }
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<SyntheticTravel> GenerateTravel(const ScenarioConfig& config) {
  RETURN_IF_ERROR(config.Validate());
  SyntheticTravel travel;
  std::vector<TapEvent>& events = travel.raw.events;

  for (CalendarDate date : config.dates) {
    for (const RouteSpec& route : config.routes) {
      SplitMix64 rng(
          MixSeeds(MixSeeds(config.seed, static_cast<uint64_t>(date.yyyymmdd())),
                   Fingerprint64(route.id)));
      std::vector<int> departures;
      for (const HeadwayBand& band : route.headways) {
        for (int bin = band.first_bin; bin <= band.last_bin;
             bin += band.headway_bins) {
          departures.push_back(bin);
        }
      }
      std::sort(departures.begin(), departures.end());

      for (int departure : departures) {
        for (const DemandRate& rate : config.demand.rates) {
          if (rate.route_id != route.id || departure < rate.first_bin ||
              departure > rate.last_bin) {
            continue;
          }
          const int64_t boardings =
              rate.kind == DemandKind::kFixed
                  ? std::llround(rate.mean_boardings)
                  : SamplePoisson(rate.mean_boardings, rng);
          const int downstream =
              static_cast<int>(route.stops.size()) - rate.boarding_stop - 1;
          std::vector<double> weights = rate.alighting_weights;
          if (weights.empty()) weights.assign(downstream, 1.0);

          const auto [on_date, on_bin] =
              Normalize(date, departure + rate.boarding_stop * route.travel_bins);
          for (int64_t p = 0; p < boardings; ++p) {
            const int alight = rate.boarding_stop + 1 +
                               static_cast<int>(SampleCategorical(weights, rng));
            Journey journey;
            journey.tap_on = events.size();
            events.push_back(TapEvent{.mode = route.mode,
                                      .date = on_date,
                                      .tap_type = TapType::kOn,
                                      .time_bin = on_bin,
                                      .location = route.stops[rate.boarding_stop],
                                      .route = route.id});
            const bool at_stop =
                route.auto_tap_off ||
                SampleBernoulli(route.tap_off_probability, rng);
            const auto [off_date, off_bin] =
                Normalize(date, departure + alight * route.travel_bins);
            journey.tap_off = events.size();
            events.push_back(TapEvent{
                .mode = route.mode,
                .date = off_date,
                .tap_type = TapType::kOff,
                .time_bin = off_bin,
                .location = at_stop ? route.stops[alight] : kUnknownLocation,
                .route = route.id});
            travel.journeys.push_back(journey);
          }
        }
      }
    }
  }
  return travel;
}

absl::StatusOr<RawDataset> GenerateRaw(const ScenarioConfig& config) {
  ASSIGN_OR_RETURN(SyntheticTravel travel, GenerateTravel(config));
  return std::move(travel.raw);
}

}  // namespace tapaudit
