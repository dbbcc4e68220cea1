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

#include "tapaudit/attacks/presence.h"

namespace tapaudit {

absl::string_view PresenceName(Presence presence) {
  return presence == Presence::kCertainPresence ? "certain_presence"
                                                : "inconclusive";
}

PresenceVerdict DetectPresence(double released_value,
                               const ReleaseConfig& config) {
  PresenceVerdict verdict;
  verdict.released_value = released_value;
  verdict.threshold = config.threshold;
  verdict.zero_skip = config.zero_skip;
  // Smallest value a published (unsuppressed) cell can show: anything above
  // t, or after half-up rounding anything above t - 1/2.
  const double floor_of_published =
      config.round_output ? config.threshold - 0.5 : config.threshold;
  const bool published =
      released_value > 0 && released_value > floor_of_published;
  verdict.verdict = config.zero_skip && published ? Presence::kCertainPresence
                                                  : Presence::kInconclusive;
  return verdict;
}

}  // namespace tapaudit
