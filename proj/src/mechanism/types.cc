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

#include "tapaudit/mechanism/types.h"

#include <bit>
#include <chrono>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "tapaudit/common/csv.h"
#include "tapaudit/distributions/random.h"

namespace tapaudit {

absl::string_view TransportModeName(TransportMode mode) {
  switch (mode) {
    case TransportMode::kTrain:
      return "train";
    case TransportMode::kBus:
      return "bus";
    case TransportMode::kFerry:
      return "ferry";
    case TransportMode::kLightRail:
      return "lightrail";
  }
  return "unknown";
}

absl::StatusOr<TransportMode> ParseTransportMode(absl::string_view text) {
  for (TransportMode mode : {TransportMode::kTrain, TransportMode::kBus,
                             TransportMode::kFerry, TransportMode::kLightRail}) {
    if (text == TransportModeName(mode)) return mode;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown transport mode '", text, "'"));
}

absl::string_view TapTypeName(TapType type) {
  return type == TapType::kOn ? "on" : "off";
}

absl::StatusOr<TapType> ParseTapType(absl::string_view text) {
  if (text == "on") return TapType::kOn;
  if (text == "off") return TapType::kOff;
  return absl::InvalidArgumentError(
      absl::StrCat("tap type must be 'on' or 'off', got '", text, "'"));
}

absl::StatusOr<CalendarDate> CalendarDate::FromYyyymmdd(int32_t yyyymmdd) {
  using namespace std::chrono;
  const year_month_day ymd{year{yyyymmdd / 10000},
                           month{static_cast<unsigned>(yyyymmdd / 100 % 100)},
                           day{static_cast<unsigned>(yyyymmdd % 100)}};
  if (yyyymmdd <= 0 || !ymd.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat("invalid calendar date ", yyyymmdd));
  }
  return CalendarDate(yyyymmdd);
}

absl::StatusOr<CalendarDate> CalendarDate::Parse(absl::string_view text) {
  if (text.size() != 8) {
    return absl::InvalidArgumentError(
        absl::StrCat("date must be YYYYMMDD, got '", text, "'"));
  }
  auto value = ParseInt64(text);
  if (!value.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat("date must be YYYYMMDD, got '", text, "'"));
  }
  return FromYyyymmdd(static_cast<int32_t>(*value));
}

CalendarDate CalendarDate::AddDays(int days) const {
  using namespace std::chrono;
  const year_month_day ymd{year{yyyymmdd_ / 10000},
                           month{static_cast<unsigned>(yyyymmdd_ / 100 % 100)},
                           day{static_cast<unsigned>(yyyymmdd_ % 100)}};
  const year_month_day next{sys_days{ymd} + std::chrono::days{days}};
  return CalendarDate(static_cast<int>(next.year()) * 10000 +
                      static_cast<int>(static_cast<unsigned>(next.month())) *
                          100 +
                      static_cast<int>(static_cast<unsigned>(next.day())));
}

std::string CalendarDate::ToString() const {
  return absl::StrCat(yyyymmdd_);
}

std::string FormatTimeBin(int bin) {
  const int minutes = bin * kBinMinutes;
  return absl::StrFormat("%02d:%02d", minutes / 60, minutes % 60);
}

absl::StatusOr<int> ParseTimeBin(absl::string_view text) {
  auto invalid = [&] {
    return absl::InvalidArgumentError(absl::StrCat(
        "time must be HH:MM on a 15-minute boundary, got '", text, "'"));
  };
  if (text.size() != 5 || text[2] != ':') return invalid();
  auto hours = ParseInt64(text.substr(0, 2));
  auto minutes = ParseInt64(text.substr(3, 2));
  if (!hours.ok() || !minutes.ok()) return invalid();
  if (*hours < 0 || *hours > 23 || *minutes < 0 || *minutes > 59 ||
      *minutes % kBinMinutes != 0) {
    return invalid();
  }
  return static_cast<int>(*hours * 60 + *minutes) / kBinMinutes;
}

absl::Status TapEvent::Validate() const {
  if (time_bin < 0 || time_bin >= kBinsPerDay) {
    return absl::InvalidArgumentError(
        absl::StrCat("time bin ", time_bin, " outside [0, 95]"));
  }
  if (location.empty()) {
    return absl::InvalidArgumentError("tap event has an empty location");
  }
  return absl::OkStatus();
}

absl::string_view TableKindName(TableKind kind) {
  switch (kind) {
    case TableKind::kTimeAndLocation:
      return "time_loc";
    case TableKind::kTimeOnly:
      return "time_only";
    case TableKind::kLocationOnly:
      return "loc_only";
    case TableKind::kTotals:
      return "totals";
  }
  return "unknown";
}

TableKind AttributeCombination::kind() const {
  if (time_bin.has_value() && location.has_value()) {
    return TableKind::kTimeAndLocation;
  }
  if (time_bin.has_value()) return TableKind::kTimeOnly;
  if (location.has_value()) return TableKind::kLocationOnly;
  return TableKind::kTotals;
}

bool AttributeCombination::Matches(const TapEvent& event) const {
  return event.mode == mode && event.date == date &&
         event.tap_type == tap_type &&
         (!time_bin.has_value() || *time_bin == event.time_bin) &&
         (!location.has_value() || *location == event.location);
}

std::string AttributeCombination::CanonicalKey() const {
  // Absent fields are spelled with a marker that no present value can take.
  return absl::StrCat(TransportModeName(mode), "|", date.yyyymmdd(), "|",
                      TapTypeName(tap_type), "|",
                      time_bin ? absl::StrCat("t", *time_bin) : "*", "|",
                      location ? absl::StrCat("l", *location) : "*");
}

AttributeCombination ProjectEvent(const TapEvent& event, TableKind kind) {
  AttributeCombination key{.mode = event.mode,
                           .date = event.date,
                           .tap_type = event.tap_type};
  if (kind == TableKind::kTimeAndLocation || kind == TableKind::kTimeOnly) {
    key.time_bin = event.time_bin;
  }
  if (kind == TableKind::kTimeAndLocation ||
      kind == TableKind::kLocationOnly) {
    key.location = event.location;
  }
  return key;
}

absl::Status ReleaseConfig::Validate() const {
  if (!std::isfinite(threshold) || threshold < 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("threshold must be finite and >= 0, got ", threshold));
  }
  return absl::OkStatus();
}

uint64_t ReleaseConfig::Fingerprint() const {
  const std::string text = absl::StrCat(
      std::bit_cast<uint64_t>(scale.value()), "/",
      std::bit_cast<uint64_t>(threshold), "/", zero_skip ? 1 : 0, "/",
      round_output ? 1 : 0);
  return Fingerprint64(text);
}

}  // namespace tapaudit
