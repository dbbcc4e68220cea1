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

// Minimal RFC 4180 CSV support. Fields containing a comma, quote or line
// break are quoted on output; quoted fields are accepted on input.

#ifndef TAPAUDIT_COMMON_CSV_H_
#define TAPAUDIT_COMMON_CSV_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace tapaudit {

struct CsvRow {
  // 1-based physical line number the record started on.
  int64_t line_number = 0;
  std::vector<std::string> fields;
};

// Reads every record. Fails on an unterminated quote, naming the line.
absl::StatusOr<std::vector<CsvRow>> ReadCsv(std::istream& in);

// Parses one record from a single line (no embedded line breaks).
absl::StatusOr<std::vector<std::string>> SplitCsvLine(absl::string_view line);

void WriteCsvRow(std::ostream& out, const std::vector<std::string>& fields);

// Shortest decimal text that round-trips to the same double.
std::string FormatDouble(double value);

// Strict numeric parsing: the whole field must be consumed.
absl::StatusOr<double> ParseDouble(absl::string_view text);
absl::StatusOr<int64_t> ParseInt64(absl::string_view text);

}  // namespace tapaudit

#endif  // TAPAUDIT_COMMON_CSV_H_
