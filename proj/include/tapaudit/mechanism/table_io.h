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

// CSV forms of raw and released tables. UTF-8, header row required.
//
// Released tables:  mode,date,type,time,location,count
//   e.g. ferry,20160725,on,06:45,Manly Wharf,88
//   `time` is empty for location-only rows; `location` is empty for
//   time-only rows ("-" is accepted on input as well).
// Raw events:       mode,date,type,time,location,route

#ifndef TAPAUDIT_MECHANISM_TABLE_IO_H_
#define TAPAUDIT_MECHANISM_TABLE_IO_H_

#include <istream>
#include <ostream>

#include "absl/status/statusor.h"
#include "tapaudit/mechanism/types.h"

namespace tapaudit {

inline constexpr char kReleasedTableHeader[] =
    "mode,date,type,time,location,count";
inline constexpr char kRawEventsHeader[] =
    "mode,date,type,time,location,route";

// Counts print as integers when integral, otherwise in shortest
// round-trip form.
void WriteReleasedTableCsv(std::ostream& out, const ReleasedTable& table);
// Errors name the offending line. The config fingerprint is not part of
// the file and comes back as 0.
absl::StatusOr<ReleasedTable> ReadReleasedTableCsv(std::istream& in);

void WriteRawEventsCsv(std::ostream& out, const RawDataset& data);
absl::StatusOr<RawDataset> ReadRawEventsCsv(std::istream& in);

}  // namespace tapaudit

#endif  // TAPAUDIT_MECHANISM_TABLE_IO_H_
