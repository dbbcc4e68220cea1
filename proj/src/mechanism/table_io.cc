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

#include "tapaudit/mechanism/table_io.h"

#include <cmath>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "tapaudit/common/csv.h"

namespace tapaudit {
namespace {

absl::Status LineError(int64_t line, const absl::Status& cause) {
  return absl::InvalidArgumentError(
      absl::StrCat("line ", line, ": ", cause.message()));
}

absl::Status CheckHeader(const std::vector<CsvRow>& rows,
                         absl::string_view expected) {
  if (rows.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("missing header row; expected '", expected, "'"));
  }
  const std::string header = absl::StrJoin(rows.front().fields, ",");
  if (header != expected) {
    return absl::InvalidArgumentError(absl::StrCat(
        "line ", rows.front().line_number, ": expected header '", expected,
        "', got '", header, "'"));
  }
  return absl::OkStatus();
}

std::string FormatCount(double value) {
  if (std::floor(value) == value && std::fabs(value) < 9e15) {
    return absl::StrCat(static_cast<int64_t>(value));
  }
  return FormatDouble(value);
}

// Shared by both formats: the first four columns.
absl::Status ParseCommonFields(const std::vector<std::string>& f,
                               TransportMode* mode, CalendarDate* date,
                               TapType* type) {
  auto parsed_mode = ParseTransportMode(f[0]);
  if (!parsed_mode.ok()) return parsed_mode.status();
  auto parsed_date = CalendarDate::Parse(f[1]);
  if (!parsed_date.ok()) return parsed_date.status();
  auto parsed_type = ParseTapType(f[2]);
  if (!parsed_type.ok()) return parsed_type.status();
  *mode = *parsed_mode;
  *date = *parsed_date;
  *type = *parsed_type;
  return absl::OkStatus();
}

}  // namespace

void WriteReleasedTableCsv(std::ostream& out, const ReleasedTable& table) {
  out << kReleasedTableHeader << '\n';
  for (const auto& [cell, value] : table.entries) {
    WriteCsvRow(out, {std::string(TransportModeName(cell.mode)),
                      cell.date.ToString(),
                      std::string(TapTypeName(cell.tap_type)),
                      cell.time_bin ? FormatTimeBin(*cell.time_bin) : "",
                      cell.location.value_or(""), FormatCount(value)});
  }
}

absl::StatusOr<ReleasedTable> ReadReleasedTableCsv(std::istream& in) {
  auto rows = ReadCsv(in);
  if (!rows.ok()) return rows.status();
  if (auto status = CheckHeader(*rows, kReleasedTableHeader); !status.ok()) {
    return status;
  }
  ReleasedTable table;
  for (size_t i = 1; i < rows->size(); ++i) {
    const CsvRow& row = (*rows)[i];
    const std::vector<std::string>& f = row.fields;
    if (f.size() != 6) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", row.line_number, ": expected 6 columns, got ", f.size()));
    }
    AttributeCombination cell;
    if (auto status =
            ParseCommonFields(f, &cell.mode, &cell.date, &cell.tap_type);
        !status.ok()) {
      return LineError(row.line_number, status);
    }
    if (!f[3].empty() && f[3] != "-") {
      auto bin = ParseTimeBin(f[3]);
      if (!bin.ok()) return LineError(row.line_number, bin.status());
      cell.time_bin = *bin;
    }
    if (!f[4].empty() && f[4] != "-") cell.location = f[4];
    auto value = ParseDouble(f[5]);
    if (!value.ok()) return LineError(row.line_number, value.status());
    if (!std::isfinite(*value) || *value < 0) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", row.line_number, ": count must be finite and >= 0"));
    }
    if (!table.entries.emplace(cell, *value).second) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", row.line_number, ": duplicate cell ", cell.CanonicalKey()));
    }
  }
  return table;
}

void WriteRawEventsCsv(std::ostream& out, const RawDataset& data) {
  out << kRawEventsHeader << '\n';
  for (const TapEvent& e : data.events) {
    WriteCsvRow(out, {std::string(TransportModeName(e.mode)), e.date.ToString(),
                      std::string(TapTypeName(e.tap_type)),
                      FormatTimeBin(e.time_bin), e.location, e.route});
  }
}

absl::StatusOr<RawDataset> ReadRawEventsCsv(std::istream& in) {
  auto rows = ReadCsv(in);
  if (!rows.ok()) return rows.status();
  if (auto status = CheckHeader(*rows, kRawEventsHeader); !status.ok()) {
    return status;
  }
  RawDataset data;
  data.events.reserve(rows->size() - 1);
  for (size_t i = 1; i < rows->size(); ++i) {
    const CsvRow& row = (*rows)[i];
    const std::vector<std::string>& f = row.fields;
    if (f.size() != 6) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", row.line_number, ": expected 6 columns, got ", f.size()));
    }
    TapEvent event;
    if (auto status =
            ParseCommonFields(f, &event.mode, &event.date, &event.tap_type);
        !status.ok()) {
      return LineError(row.line_number, status);
    }
    auto bin = ParseTimeBin(f[3]);
    if (!bin.ok()) return LineError(row.line_number, bin.status());
    event.time_bin = *bin;
    event.location = f[4];
    event.route = f[5];
    if (auto status = event.Validate(); !status.ok()) {
      return LineError(row.line_number, status);
    }
    data.events.push_back(std::move(event));
  }
  return data;
}

}  // namespace tapaudit
