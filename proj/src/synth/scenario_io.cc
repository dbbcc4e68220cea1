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

#include "tapaudit/synth/scenario_io.h"

#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "tapaudit/common/csv.h"
#include "tapaudit/common/status_macros.h"

namespace tapaudit {
namespace {

std::string JoinDoubles(const std::vector<double>& values) {
  std::vector<std::string> parts;
  for (double v : values) parts.push_back(FormatDouble(v));
  return absl::StrJoin(parts, " ");
}

// Collapses consecutive dates into a..b ranges.
std::string FormatDates(const std::vector<CalendarDate>& dates) {
  std::vector<std::string> parts;
  for (size_t i = 0; i < dates.size();) {
    size_t j = i;
    while (j + 1 < dates.size() && dates[j + 1] == dates[j].AddDays(1)) ++j;
    parts.push_back(j == i ? dates[i].ToString()
                           : absl::StrCat(dates[i].ToString(), "..",
                                          dates[j].ToString()));
    i = j + 1;
  }
  return absl::StrJoin(parts, ", ");
}

class LineError {
 public:
  explicit LineError(int line) : line_(line) {}
  absl::Status operator()(absl::string_view what) const {
    return absl::InvalidArgumentError(absl::StrCat("line ", line_, ": ", what));
  }
  absl::Status Wrap(const absl::Status& status) const {
    return (*this)(status.message());
  }

 private:
  int line_;
};

absl::StatusOr<std::vector<double>> ParseDoubles(absl::string_view text) {
  std::vector<double> values;
  for (absl::string_view part :
       absl::StrSplit(text, ' ', absl::SkipWhitespace())) {
    ASSIGN_OR_RETURN(double v, ParseDouble(part));
    values.push_back(v);
  }
  return values;
}

absl::StatusOr<std::vector<int>> ParseInts(absl::string_view text,
                                           size_t expected) {
  std::vector<int> values;
  for (absl::string_view part :
       absl::StrSplit(text, ' ', absl::SkipWhitespace())) {
    ASSIGN_OR_RETURN(int64_t v, ParseInt64(part));
    values.push_back(static_cast<int>(v));
  }
  if (values.size() != expected) {
    return absl::InvalidArgumentError(
        absl::StrCat("expected ", expected, " integers"));
  }
  return values;
}

absl::StatusOr<bool> ParseBool(absl::string_view text) {
  if (text == "true") return true;
  if (text == "false") return false;
  return absl::InvalidArgumentError(
      absl::StrCat("expected true or false, got '", text, "'"));
}

absl::StatusOr<std::vector<CalendarDate>> ParseDates(absl::string_view text) {
  std::vector<CalendarDate> dates;
  for (absl::string_view part : absl::StrSplit(text, ',')) {
    part = absl::StripAsciiWhitespace(part);
    std::vector<absl::string_view> ends = absl::StrSplit(part, "..");
    if (ends.size() > 2) {
      return absl::InvalidArgumentError(absl::StrCat("bad date range ", part));
    }
    ASSIGN_OR_RETURN(CalendarDate first, CalendarDate::Parse(ends.front()));
    ASSIGN_OR_RETURN(CalendarDate last, CalendarDate::Parse(ends.back()));
    if (last < first) {
      return absl::InvalidArgumentError(absl::StrCat("reversed range ", part));
    }
    for (CalendarDate d = first; d <= last; d = d.AddDays(1)) {
      dates.push_back(d);
    }
  }
  return dates;
}

absl::Status SetRouteKey(RouteSpec& route, absl::string_view key,
                         absl::string_view value) {
  if (key == "mode") {
    ASSIGN_OR_RETURN(route.mode, ParseTransportMode(value));
  } else if (key == "stops") {
    route.stops.clear();
    for (absl::string_view stop : absl::StrSplit(value, '|')) {
      route.stops.emplace_back(absl::StripAsciiWhitespace(stop));
    }
  } else if (key == "travel_bins") {
    ASSIGN_OR_RETURN(std::vector<int> v, ParseInts(value, 1));
    route.travel_bins = v[0];
  } else if (key == "auto_tap_off") {
    ASSIGN_OR_RETURN(route.auto_tap_off, ParseBool(value));
  } else if (key == "tap_off_probability") {
    ASSIGN_OR_RETURN(route.tap_off_probability, ParseDouble(value));
  } else if (key == "headway") {
    ASSIGN_OR_RETURN(std::vector<int> v, ParseInts(value, 3));
    route.headways.push_back({v[0], v[1], v[2]});
  } else {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown route key '", key, "'"));
  }
  return absl::OkStatus();
}

absl::Status SetDemandKey(DemandRate& rate, absl::string_view key,
                          absl::string_view value) {
  if (key == "stop") {
    ASSIGN_OR_RETURN(std::vector<int> v, ParseInts(value, 1));
    rate.boarding_stop = v[0];
  } else if (key == "bins") {
    ASSIGN_OR_RETURN(std::vector<int> v, ParseInts(value, 2));
    rate.first_bin = v[0];
    rate.last_bin = v[1];
  } else if (key == "mean") {
    ASSIGN_OR_RETURN(rate.mean_boardings, ParseDouble(value));
  } else if (key == "kind") {
    if (value == "poisson") {
      rate.kind = DemandKind::kPoisson;
    } else if (value == "fixed") {
      rate.kind = DemandKind::kFixed;
    } else {
      return absl::InvalidArgumentError(
          absl::StrCat("kind must be poisson or fixed, got '", value, "'"));
    }
  } else if (key == "alight") {
    ASSIGN_OR_RETURN(rate.alighting_weights, ParseDoubles(value));
  } else {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown demand key '", key, "'"));
  }
  return absl::OkStatus();
}

}  // namespace

void WriteScenarioConfig(std::ostream& out, const ScenarioConfig& config) {
  out << "name = " << config.name << '\n'
      << "seed = " << config.seed << '\n'
      << "dates = " << FormatDates(config.dates) << '\n';
  for (const RouteSpec& route : config.routes) {
    out << "\nroute " << route.id << '\n'
        << "  mode = " << TransportModeName(route.mode) << '\n'
        << "  stops = " << absl::StrJoin(route.stops, " | ") << '\n'
        << "  travel_bins = " << route.travel_bins << '\n'
        << "  auto_tap_off = " << (route.auto_tap_off ? "true" : "false")
        << '\n'
        << "  tap_off_probability = "
        << FormatDouble(route.tap_off_probability) << '\n';
    for (const HeadwayBand& band : route.headways) {
      out << "  headway = " << band.first_bin << ' ' << band.last_bin << ' '
          << band.headway_bins << '\n';
    }
  }
  for (const DemandRate& rate : config.demand.rates) {
    out << "\ndemand " << rate.route_id << '\n'
        << "  stop = " << rate.boarding_stop << '\n'
        << "  bins = " << rate.first_bin << ' ' << rate.last_bin << '\n'
        << "  mean = " << FormatDouble(rate.mean_boardings) << '\n'
        << "  kind = "
        << (rate.kind == DemandKind::kFixed ? "fixed" : "poisson") << '\n';
    if (!rate.alighting_weights.empty()) {
      out << "  alight = " << JoinDoubles(rate.alighting_weights) << '\n';
    }
  }
}

absl::StatusOr<ScenarioConfig> ReadScenarioConfig(std::istream& in) {
  ScenarioConfig config;
  enum class Block { kTop, kRoute, kDemand } block = Block::kTop;
  bool saw_seed = false;
  std::string raw_line;
  int line_number = 0;
  while (std::getline(in, raw_line)) {
    ++line_number;
    const LineError error(line_number);
    absl::string_view line = raw_line;
    if (size_t hash = line.find('#'); hash != absl::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = absl::StripAsciiWhitespace(line);
    if (line.empty()) continue;

    const size_t eq = line.find('=');
    if (eq == absl::string_view::npos) {
      std::vector<absl::string_view> words =
          absl::StrSplit(line, absl::MaxSplits(' ', 1));
      if (words.size() != 2 || absl::StripAsciiWhitespace(words[1]).empty()) {
        return error("expected 'key = value', 'route <id>' or 'demand <id>'");
      }
      const std::string id(absl::StripAsciiWhitespace(words[1]));
      if (words[0] == "route") {
        config.routes.push_back(RouteSpec{.id = id});
        block = Block::kRoute;
      } else if (words[0] == "demand") {
        config.demand.rates.push_back(DemandRate{.route_id = id});
        block = Block::kDemand;
      } else {
        return error(absl::StrCat("unknown block '", words[0], "'"));
      }
      continue;
    }

    const absl::string_view key = absl::StripAsciiWhitespace(line.substr(0, eq));
    const absl::string_view value =
        absl::StripAsciiWhitespace(line.substr(eq + 1));
    absl::Status status;
    switch (block) {
      case Block::kTop:
        if (key == "name") {
          config.name = std::string(value);
        } else if (key == "seed") {
          auto seed = ParseInt64(value);
          if (!seed.ok() || *seed < 0) return error("seed must be >= 0");
          config.seed = static_cast<uint64_t>(*seed);
          saw_seed = true;
        } else if (key == "dates") {
          auto dates = ParseDates(value);
          if (!dates.ok()) return error.Wrap(dates.status());
          config.dates = *std::move(dates);
        } else {
          return error(absl::StrCat("unknown key '", key, "'"));
        }
        break;
      case Block::kRoute:
        status = SetRouteKey(config.routes.back(), key, value);
        break;
      case Block::kDemand:
        status = SetDemandKey(config.demand.rates.back(), key, value);
        break;
    }
    if (!status.ok()) return error.Wrap(status);
  }
  if (!saw_seed) return absl::InvalidArgumentError("missing 'seed'");
  RETURN_IF_ERROR(config.Validate());
  return config;
}

}  // namespace tapaudit
