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

#include "tapaudit/synth/releases.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "tapaudit/common/csv.h"
#include "tapaudit/common/status_macros.h"
#include "tapaudit/mechanism/release.h"

namespace tapaudit {
namespace {

struct ModeExtent {
  std::set<CalendarDate> dates;
  std::set<std::string> locations;
};

std::map<TransportMode, ModeExtent> Extents(const RawDataset& data) {
  std::map<TransportMode, ModeExtent> extents;
  for (const TapEvent& e : data.events) {
    ModeExtent& extent = extents[e.mode];
    extent.dates.insert(e.date);
    extent.locations.insert(e.location);
  }
  return extents;
}

absl::Status ReleaseInto(const RawDataset& data, TableKind kind,
                         const ReleaseConfig& config, ReleasedTable& table,
                         GroundTruthLedger& ledger) {
  const ContingencyTable counts = CountCells(data, QueryUniverse(data, kind));
  ASSIGN_OR_RETURN(ReleaseTrace trace,
                   ReleaseWithTrace(counts, config, StreamForTable(kind)));
  for (const auto& [cell, raw] : counts.counts) {
    ledger.entries.push_back(LedgerEntry{.cell = cell,
                                         .raw_count = raw,
                                         .noise = trace.noise.at(cell),
                                         .released = trace.table.entries.at(cell)});
  }
  table = std::move(trace.table);
  return absl::OkStatus();
}

}  // namespace

uint64_t StreamForTable(TableKind kind) {
  switch (kind) {
    case TableKind::kTimeAndLocation:
      return kTimeAndLocationStream;
    case TableKind::kTimeOnly:
      return kTimeOnlyStream;
    case TableKind::kLocationOnly:
      return kLocationOnlyStream;
    case TableKind::kTotals:
      break;
  }
  return 0;
}

std::set<AttributeCombination> QueryUniverse(const RawDataset& data,
                                             TableKind kind) {
  std::set<AttributeCombination> universe;
  for (const auto& [mode, extent] : Extents(data)) {
    for (CalendarDate date : extent.dates) {
      for (TapType type : {TapType::kOn, TapType::kOff}) {
        AttributeCombination cell{.mode = mode, .date = date, .tap_type = type};
        switch (kind) {
          case TableKind::kTimeAndLocation:
            for (const std::string& location : extent.locations) {
              for (int bin = 0; bin < kBinsPerDay; ++bin) {
                cell.time_bin = bin;
                cell.location = location;
                universe.insert(cell);
              }
            }
            break;
          case TableKind::kTimeOnly:
            for (int bin = 0; bin < kBinsPerDay; ++bin) {
              cell.time_bin = bin;
              universe.insert(cell);
            }
            break;
          case TableKind::kLocationOnly:
            for (const std::string& location : extent.locations) {
              cell.location = location;
              universe.insert(cell);
            }
            break;
          case TableKind::kTotals:
            universe.insert(cell);
            break;
        }
      }
    }
  }
  return universe;
}

void WriteLedgerCsv(std::ostream& out, const GroundTruthLedger& ledger) {
  out << kLedgerHeader << '\n';
  for (const LedgerEntry& entry : ledger.entries) {
    const AttributeCombination& cell = entry.cell;
    WriteCsvRow(out,
                {std::string(TableKindName(cell.kind())),
                 std::string(TransportModeName(cell.mode)),
                 cell.date.ToString(), std::string(TapTypeName(cell.tap_type)),
                 cell.time_bin ? FormatTimeBin(*cell.time_bin) : "",
                 cell.location.value_or(""), absl::StrCat(entry.raw_count),
                 entry.noise ? FormatDouble(*entry.noise) : "",
                 FormatDouble(entry.released)});
  }
}

const ReleasedTable& DerivedReleases::table(TableKind kind) const {
  switch (kind) {
    case TableKind::kTimeOnly:
      return time_only;
    case TableKind::kLocationOnly:
      return location_only;
    default:
      return time_and_location;
  }
}

absl::StatusOr<DerivedReleases> DeriveReleases(
    const RawDataset& data, const ReleaseConfig& config,
    const ReleaseOverrides& overrides) {
  RETURN_IF_ERROR(config.Validate());
  DerivedReleases releases;
  RETURN_IF_ERROR(ReleaseInto(data, TableKind::kTimeAndLocation,
                              overrides.time_and_location.value_or(config),
                              releases.time_and_location, releases.ledger));
  RETURN_IF_ERROR(ReleaseInto(data, TableKind::kTimeOnly,
                              overrides.time_only.value_or(config),
                              releases.time_only, releases.ledger));
  RETURN_IF_ERROR(ReleaseInto(data, TableKind::kLocationOnly,
                              overrides.location_only.value_or(config),
                              releases.location_only, releases.ledger));
  return releases;
}

absl::Status ReplayLedger(const GroundTruthLedger& ledger,
                          const ReleaseConfig& config) {
  for (const LedgerEntry& entry : ledger.entries) {
    double expected = 0;
    if (entry.noise.has_value()) {
      expected = ThresholdAndRound(
          static_cast<double>(entry.raw_count) + *entry.noise, config);
    } else if (entry.raw_count != 0 || !config.zero_skip) {
      return absl::DataLossError(absl::StrCat(
          "cell ", entry.cell.CanonicalKey(), " has no noise recorded"));
    }
    if (expected != entry.released) {
      return absl::DataLossError(absl::StrCat(
          "cell ", entry.cell.CanonicalKey(), " released ", entry.released,
          " but replays to ", expected));
    }
  }
  return absl::OkStatus();
}

std::set<std::string> RoutesContributing(const RawDataset& data,
                                         const AttributeCombination& cell) {
  std::set<std::string> routes;
  for (const TapEvent& e : data.events) {
    if (cell.Matches(e)) routes.insert(e.route);
  }
  return routes;
}

}  // namespace tapaudit
