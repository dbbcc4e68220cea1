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

// Plain-text scenario files.
//
//   # comment
//   name = manly-ferry
//   seed = 20160725
//   dates = 20160725..20160731, 20160808..20160814
//
//   route F1-MW-CQ
//     mode = ferry
//     stops = Manly Wharf | Circular Quay No. 3 Wharf
//     travel_bins = 2
//     auto_tap_off = true
//     tap_off_probability = 1
//     headway = 22 92 1          # first_bin last_bin headway_bins
//
//   demand F1-MW-CQ
//     stop = 0                   # index of the boarding stop
//     bins = 28 39               # origin departure bins covered
//     mean = 80
//     kind = poisson             # or fixed
//     alight = 1                 # weights over downstream stops, optional
//
// Top-level keys come before the first block. A `route` or `demand` line
// opens a block; its keys follow until the next block. `headway` may repeat.
// Indentation is ignored.

#ifndef TAPAUDIT_SYNTH_SCENARIO_IO_H_
#define TAPAUDIT_SYNTH_SCENARIO_IO_H_

#include <istream>
#include <ostream>

#include "absl/status/statusor.h"
#include "tapaudit/synth/scenario.h"

namespace tapaudit {

void WriteScenarioConfig(std::ostream& out, const ScenarioConfig& config);

// Errors name the offending line. The result is validated.
absl::StatusOr<ScenarioConfig> ReadScenarioConfig(std::istream& in);

}  // namespace tapaudit

#endif  // TAPAUDIT_SYNTH_SCENARIO_IO_H_
