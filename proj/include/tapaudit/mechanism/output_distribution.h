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

#ifndef TAPAUDIT_MECHANISM_OUTPUT_DISTRIBUTION_H_
#define TAPAUDIT_MECHANISM_OUTPUT_DISTRIBUTION_H_

#include <cstdint>
#include <map>

#include "tapaudit/mechanism/types.h"

namespace tapaudit {

// Atoms of the released integer value for one cell. Atoms run contiguously
// from the smallest producible positive value up to max_atom (plus the 0
// atom); tail_mass is Pr[release > max_atom].
struct OutputDistribution {
  std::map<int64_t, double> atoms;
  double tail_mass = 0;
  int64_t max_atom = 0;
  uint64_t config_fingerprint = 0;

  // Mass of atom `value`; 0 if not enumerated.
  double Mass(int64_t value) const;
  // True when `value` is known to have probability exactly 0: it lies
  // inside the enumerated range (or there is no tail) and has no mass.
  bool IsImpossible(int64_t value) const;
  double TotalMass() const;
};

// Enumeration reaches at least this many scales beyond the count (and
// beyond the threshold), so tail_mass <= exp(-40)/2.
inline constexpr double kAtomSpanScales = 40.0;

// Exact distribution of the rounded release of a cell with exact `count`.
// With zero_skip and count 0 it is the point mass at 0. Atom k >= 1 holds
// Pr[d in (max(t, k - 1/2), k + 1/2)]; the 0 atom holds Pr[d <= t] plus the
// rounding bin of 0 above t when t < 1/2. When round_output is false the
// atoms describe the rounding bins of the real-valued release.
// `min_max_atom` widens the enumeration so two distributions can share one
// atom universe.
OutputDistribution ComputeOutputDistribution(int64_t count,
                                             const ReleaseConfig& config,
                                             int64_t min_max_atom = 0);

}  // namespace tapaudit

#endif  // TAPAUDIT_MECHANISM_OUTPUT_DISTRIBUTION_H_
