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

// Exact (epsilon, delta) auditing of a single released cell on neighbouring
// counts. Works on the atomic distribution of the rounded release, so every
// quantity is computed rather than sampled.

#ifndef TAPAUDIT_AUDIT_PRIVACY_AUDIT_H_
#define TAPAUDIT_AUDIT_PRIVACY_AUDIT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "tapaudit/mechanism/output_distribution.h"
#include "tapaudit/mechanism/types.h"

namespace tapaudit {

// Smallest delta such that Pr[M(D) in T] <= e^eps Pr[M(D') in T] + delta
// for every event T:
//   sum_o max(0, P(o) - e^eps Q(o)) + tail term.
// Atoms missing from one side count as mass 0 there. When both sides were
// enumerated up to the same max_atom with nonzero tails (as AuditPair
// does) the tail term is max(0, P.tail - e^eps Q.tail), which is exact.
// Otherwise it is P.tail, an upper bound.
absl::StatusOr<double> DeltaAtEpsilon(const OutputDistribution& p,
                                      const OutputDistribution& q,
                                      double epsilon);

// An output that one side can produce and the other provably cannot. Its
// existence rules out pure epsilon-DP for every epsilon.
struct PrivacyWitness {
  int64_t atom = 0;
  // Mass under the count that can produce the atom.
  double pr_possible = 0;
  // Count that can produce it.
  int64_t producing_count = 0;
};

struct DpAuditResult {
  int64_t count = 0;
  int64_t neighbor = 0;
  std::vector<double> epsilon_grid;
  // delta[i] is for epsilon_grid[i]; the max over both orderings of the pair.
  std::vector<double> delta;
  std::optional<PrivacyWitness> witness;
  // Largest P(o)/Q(o) over atoms where both sides are positive, either
  // ordering. For an epsilon-DP mechanism this is at most e^epsilon.
  double max_atom_ratio = 1.0;
};

// 21 log-spaced points on [0.01, 10].
std::vector<double> DefaultEpsilonGrid();

// Audits one cell released with exact count `count` against `neighbor`.
// Both distributions are enumerated over a common atom universe. When a
// witness exists, the atom floor(t) + 1 (the first value strictly above
// the threshold) is preferred, otherwise the smallest witnessing atom.
absl::StatusOr<DpAuditResult> AuditPair(int64_t count, int64_t neighbor,
                                        const ReleaseConfig& config,
                                        std::span<const double> epsilon_grid);

}  // namespace tapaudit

#endif  // TAPAUDIT_AUDIT_PRIVACY_AUDIT_H_
