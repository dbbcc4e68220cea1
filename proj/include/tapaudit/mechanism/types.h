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

// Tap events, the attribute combinations they are counted under, and the
// exact and released tables built from them.

#ifndef TAPAUDIT_MECHANISM_TYPES_H_
#define TAPAUDIT_MECHANISM_TYPES_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "tapaudit/distributions/laplace.h"

namespace tapaudit {

enum class TransportMode { kTrain, kBus, kFerry, kLightRail };
enum class TapType { kOn, kOff };

absl::string_view TransportModeName(TransportMode mode);
absl::StatusOr<TransportMode> ParseTransportMode(absl::string_view text);
absl::string_view TapTypeName(TapType type);
absl::StatusOr<TapType> ParseTapType(absl::string_view text);

// A calendar day stored as YYYYMMDD.
class CalendarDate {
 public:
  // 1970-01-01.
  CalendarDate() = default;
  static absl::StatusOr<CalendarDate> FromYyyymmdd(int32_t yyyymmdd);
  static absl::StatusOr<CalendarDate> Parse(absl::string_view text);

  int32_t yyyymmdd() const { return yyyymmdd_; }
  CalendarDate AddDays(int days) const;
  std::string ToString() const;

  friend auto operator<=>(const CalendarDate&, const CalendarDate&) = default;

 private:
  explicit CalendarDate(int32_t yyyymmdd) : yyyymmdd_(yyyymmdd) {}
  int32_t yyyymmdd_ = 19700101;
};

// Bins are 15 minutes wide: bin 0 is 00:00-00:14, bin 95 is 23:45-23:59.
inline constexpr int kBinMinutes = 15;
inline constexpr int kBinsPerDay = 96;

std::string FormatTimeBin(int bin);
// Accepts "HH:MM" on a bin boundary.
absl::StatusOr<int> ParseTimeBin(absl::string_view text);

struct TapEvent {
  TransportMode mode = TransportMode::kTrain;
  CalendarDate date;
  TapType tap_type = TapType::kOn;
  int time_bin = 0;
  std::string location;
  // May be empty for modes whose route is not released.
  std::string route;

  absl::Status Validate() const;
  friend auto operator<=>(const TapEvent&, const TapEvent&) = default;
};

struct RawDataset {
  std::vector<TapEvent> events;
};

// Which release a combination belongs to, by which optional fields it has.
enum class TableKind { kTimeAndLocation, kTimeOnly, kLocationOnly, kTotals };

absl::string_view TableKindName(TableKind kind);

struct AttributeCombination {
  TransportMode mode = TransportMode::kTrain;
  CalendarDate date;
  TapType tap_type = TapType::kOn;
  std::optional<int> time_bin;
  std::optional<std::string> location;

  TableKind kind() const;
  bool Matches(const TapEvent& event) const;
  // Canonical text form, used to key per-cell noise streams.
  std::string CanonicalKey() const;

  friend auto operator<=>(const AttributeCombination&,
                          const AttributeCombination&) = default;
};

// Projection of an event onto the attributes a table of `kind` keeps.
AttributeCombination ProjectEvent(const TapEvent& event, TableKind kind);

// Exact counts c_q(D).
struct ContingencyTable {
  std::map<AttributeCombination, int64_t> counts;
};

struct ReleaseConfig {
  NoiseScale scale;
  double threshold = 18;
  // true reproduces the flawed behavior: raw zeros are released as exact 0.
  bool zero_skip = true;
  bool round_output = true;
  uint64_t seed = 0;

  absl::Status Validate() const;
  // Hash of everything except the seed.
  uint64_t Fingerprint() const;
};

struct ReleasedTable {
  // Each value is 0 or above the threshold (pre-rounding); integral when
  // the config rounds.
  std::map<AttributeCombination, double> entries;
  uint64_t config_fingerprint = 0;
};

}  // namespace tapaudit

#endif  // TAPAUDIT_MECHANISM_TYPES_H_
