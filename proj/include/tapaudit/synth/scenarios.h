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

// Built-in scenarios mirroring the situations the attacks target.

#ifndef TAPAUDIT_SYNTH_SCENARIOS_H_
#define TAPAUDIT_SYNTH_SCENARIOS_H_

#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "tapaudit/synth/scenario.h"

namespace tapaudit {

// Locations used by the built-in scenarios.
inline constexpr char kManlyWharf[] = "Manly Wharf";
inline constexpr char kCircularQuay[] = "Circular Quay No. 3 Wharf";
inline constexpr char kCremornePoint[] = "Cremorne Point Wharf";
inline constexpr char kSouthMosman[] = "South Mosman Wharf";

// One late night, 11 Aug 2016. Three ferries leave Circular Quay and Manly
// at 23:30/23:45 and arrive at 00:00 on 12 Aug: about 90 tap-offs at
// Manly, about 40 at Circular Quay, and exactly `hidden_count` at Cremorne
// Point, which sits below the threshold and is suppressed.
ScenarioConfig ScenarioSecretFerry(int hidden_count = 17);

// One weekday with a single night bus (N70 Penrith to the city) running
// before 05:00, so every early cell comes from one vehicle; regular routes
// sharing its postcodes start at 05:00. Buses do not auto tap-off.
ScenarioConfig ScenarioNightBus();

// Two weeks of Manly <-> Circular Quay ferries every 15 minutes in both
// directions, 30 minutes travel, auto tap-off, and demand mostly above the
// threshold: enough point-to-point pairs to recover the noise scale.
ScenarioConfig ScenarioManlyFerry();

std::vector<absl::string_view> BuiltinScenarioNames();
absl::StatusOr<ScenarioConfig> BuiltinScenario(absl::string_view name);

}  // namespace tapaudit

#endif  // TAPAUDIT_SYNTH_SCENARIOS_H_
