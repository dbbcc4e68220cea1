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

#include "tapaudit/mechanism/output_distribution.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tapaudit/distributions/laplace.h"

namespace tapaudit {

double OutputDistribution::Mass(int64_t value) const {
  auto it = atoms.find(value);
  return it == atoms.end() ? 0.0 : it->second;
}

bool OutputDistribution::IsImpossible(int64_t value) const {
  if (value > max_atom) return tail_mass == 0.0;
  return Mass(value) == 0.0;
}

double OutputDistribution::TotalMass() const {
  double total = tail_mass;
  for (const auto& [value, mass] : atoms) total += mass;
  return total;
}

OutputDistribution ComputeOutputDistribution(int64_t count,
                                             const ReleaseConfig& config,
                                             int64_t min_max_atom) {
  OutputDistribution dist;
  dist.config_fingerprint = config.Fingerprint();
  if (config.zero_skip && count == 0) {
    dist.atoms[0] = 1.0;
    dist.max_atom = 0;
    dist.tail_mass = 0.0;
    return dist;
  }

  const double t = config.threshold;
  const double b = config.scale.value();
  const double c = static_cast<double>(count);
  const int64_t above_threshold = static_cast<int64_t>(std::floor(t)) + 1;
  const int64_t max_atom =
      std::max({count, above_threshold, min_max_atom}) +
      static_cast<int64_t>(std::ceil(kAtomSpanScales * b));
  // Smallest k >= 1 whose rounding bin (k - 1/2, k + 1/2) reaches above t.
  const int64_t min_positive =
      std::max<int64_t>(1, static_cast<int64_t>(std::floor(t - 0.5)) + 1);
  const double inf = std::numeric_limits<double>::infinity();

  // Masses are taken on the noise L = d - c so both tails keep full
  // relative precision.
  double zero_mass = LaplaceIntervalMass(-inf, t - c, config.scale);
  if (t < 0.5) zero_mass += LaplaceIntervalMass(t - c, 0.5 - c, config.scale);
  dist.atoms[0] = zero_mass;
  for (int64_t k = min_positive; k <= max_atom; ++k) {
    const double lo = std::max(t, static_cast<double>(k) - 0.5);
    const double hi = static_cast<double>(k) + 0.5;
    dist.atoms[k] = LaplaceIntervalMass(lo - c, hi - c, config.scale);
  }
  dist.max_atom = max_atom;
  dist.tail_mass = LaplaceIntervalMass(static_cast<double>(max_atom) + 0.5 - c,
                                       inf, config.scale);
  return dist;
}

}  // namespace tapaudit
