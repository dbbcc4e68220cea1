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

#include "tapaudit/common/csv.h"

#include <charconv>
#include <cmath>
#include <sstream>
#include <system_error>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace tapaudit {

absl::StatusOr<std::vector<CsvRow>> ReadCsv(std::istream& in) {
  std::vector<CsvRow> rows;
  std::string line;
  int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    CsvRow row;
    row.line_number = line_number;
    std::string field;
    bool in_quotes = false;
    bool field_was_quoted = false;
    size_t i = 0;
    while (true) {
      if (i == line.size()) {
        if (!in_quotes) break;
        // Quoted field continues on the next physical line.
        if (!std::getline(in, line)) {
          return absl::InvalidArgumentError(absl::StrCat(
              "line ", row.line_number, ": unterminated quoted field"));
        }
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        field.push_back('\n');
        i = 0;
        continue;
      }
      const char c = line[i];
      if (in_quotes) {
        if (c == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') {
            field.push_back('"');
            ++i;
          } else {
            in_quotes = false;
          }
        } else {
          field.push_back(c);
        }
      } else if (c == '"' && field.empty() && !field_was_quoted) {
        in_quotes = true;
        field_was_quoted = true;
      } else if (c == ',') {
        row.fields.push_back(std::move(field));
        field.clear();
        field_was_quoted = false;
      } else {
        field.push_back(c);
      }
      ++i;
    }
    row.fields.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

absl::StatusOr<std::vector<std::string>> SplitCsvLine(absl::string_view line) {
  std::string copy(line);
  std::istringstream stream(copy);
  auto rows = ReadCsv(stream);
  if (!rows.ok()) return rows.status();
  if (rows->empty()) return std::vector<std::string>{""};
  if (rows->size() != 1) {
    return absl::InvalidArgumentError("expected a single CSV record");
  }
  return std::move(rows->front().fields);
}

void WriteCsvRow(std::ostream& out, const std::vector<std::string>& fields) {
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out << ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n\r") == std::string::npos) {
      out << f;
      continue;
    }
    out << '"';
    for (char c : f) {
      if (c == '"') out << '"';
      out << c;
    }
    out << '"';
  }
  out << '\n';
}

std::string FormatDouble(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

absl::StatusOr<double> ParseDouble(absl::string_view text) {
  double value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("not a number: '", text, "'"));
  }
  return value;
}

absl::StatusOr<int64_t> ParseInt64(absl::string_view text) {
  int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("not an integer: '", text, "'"));
  }
  return value;
}

}  // namespace tapaudit
