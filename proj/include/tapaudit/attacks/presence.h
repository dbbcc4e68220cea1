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

#ifndef TAPAUDIT_ATTACKS_PRESENCE_H_
#define TAPAUDIT_ATTACKS_PRESENCE_H_

#include "absl/strings/string_view.h"

#include "tapaudit/mechanism/types.h"

namespace tapaudit {

enum class Presence { kCertainPresence, kInconclusive };

absl::string_view PresenceName(Presence presence);

struct PresenceVerdict {
  Presence verdict = Presence::kInconclusive;
  double released_value = 0;
  double threshold = 0;
  bool zero_skip = false;
};

// Under zero-skipping a raw zero always releases 0, so any published value
// proves someone was there: anything above the threshold, and with rounding
// anything above t - 1/2 (an 18 at t = 18 comes from (18, 18.5)). Under the
// corrected mechanism every output is reachable from a raw zero.
PresenceVerdict DetectPresence(double released_value,
                               const ReleaseConfig& config);

}  // namespace tapaudit

#endif  // TAPAUDIT_ATTACKS_PRESENCE_H_
