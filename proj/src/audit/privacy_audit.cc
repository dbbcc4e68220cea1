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

#include "tapaudit/audit/privacy_audit.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "tapaudit/common/status_macros.h"

namespace tapaudit {
namespace {

std::set<int64_t> AtomUnion(const OutputDistribution& p,
                            const OutputDistribution& q) {
  std::set<int64_t> atoms;
  for (const auto& [value, mass] : p.atoms) atoms.insert(value);
  for (const auto& [value, mass] : q.atoms) atoms.insert(value);
  return atoms;
}

}  // namespace

absl::StatusOr<double> DeltaAtEpsilon(const OutputDistribution& p,
                                      const OutputDistribution& q,
                                      double epsilon) {
  if (!(epsilon >= 0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("epsilon must be >= 0, got ", epsilon));
  }
  const double scale = std::exp(epsilon);
  // On a shared universe every tail atom lies above both counts and the
  // threshold, where P(k) / Q(k) is constant, so the tails compare as a
  // whole. Otherwise P's tail is charged in full.
  double delta = p.tail_mass;
  if (p.max_atom == q.max_atom && q.tail_mass > 0) {
    delta = std::max(0.0, p.tail_mass - scale * q.tail_mass);
  }
  for (int64_t atom : AtomUnion(p, q)) {
    const double pm = p.Mass(atom);
    const double qm = q.Mass(atom);
    // Written so that an infinite epsilon never forms inf * 0.
    const double excess = qm == 0.0 ? pm : pm - scale * qm;
    if (excess > 0) delta += excess;
  }
  return std::clamp(delta, 0.0, 1.0);
}

std::vector<double> DefaultEpsilonGrid() {
  constexpr int kPoints = 21;
  const double lo = std::log10(0.01);
  const double hi = std::log10(10.0);
  std::vector<double> grid;
  grid.reserve(kPoints);
  for (int i = 0; i < kPoints; ++i) {
    grid.push_back(std::pow(10.0, lo + (hi - lo) * i / (kPoints - 1)));
  }
  return grid;
}

absl::StatusOr<DpAuditResult> AuditPair(int64_t count, int64_t neighbor,
                                        const ReleaseConfig& config,
                                        std::span<const double> epsilon_grid) {
  RETURN_IF_ERROR(config.Validate());
  if (count < 0 || neighbor < 0) {
    return absl::InvalidArgumentError("counts must be nonnegative");
  }
  if (epsilon_grid.empty()) {
    return absl::InvalidArgumentError("epsilon grid is empty");
  }
  for (double eps : epsilon_grid) {
    if (!std::isfinite(eps) || eps < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("epsilon grid entries must be finite and >= 0, got ",
                       eps));
    }
  }

  const int64_t shared_max = std::max(count, neighbor);
  const OutputDistribution p =
      ComputeOutputDistribution(count, config, shared_max);
  const OutputDistribution q =
      ComputeOutputDistribution(neighbor, config, shared_max);

  DpAuditResult result;
  result.count = count;
  result.neighbor = neighbor;
  result.epsilon_grid.assign(epsilon_grid.begin(), epsilon_grid.end());
  for (double eps : epsilon_grid) {
    ASSIGN_OR_RETURN(double forward, DeltaAtEpsilon(p, q, eps));
    ASSIGN_OR_RETURN(double backward, DeltaAtEpsilon(q, p, eps));
    result.delta.push_back(std::max(forward, backward));
  }

  const int64_t preferred =
      static_cast<int64_t>(std::floor(config.threshold)) + 1;
  for (int64_t atom : AtomUnion(p, q)) {
    const double pm = p.Mass(atom);
    const double qm = q.Mass(atom);
    if (pm > 0 && qm > 0) {
      result.max_atom_ratio =
          std::max({result.max_atom_ratio, pm / qm, qm / pm});
    }
    std::optional<PrivacyWitness> candidate;
    if (pm > 0 && q.IsImpossible(atom)) {
      candidate = PrivacyWitness{atom, pm, count};
    } else if (qm > 0 && p.IsImpossible(atom)) {
      candidate = PrivacyWitness{atom, qm, neighbor};
    }
    if (!candidate) continue;
    if (!result.witness || atom == preferred) result.witness = candidate;
  }
  return result;
}

}  // namespace tapaudit
