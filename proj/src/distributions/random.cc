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

#include "tapaudit/distributions/random.h"

#include <cmath>

namespace tapaudit {

uint64_t Fingerprint64(absl::string_view bytes) {
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

double UniformOpen(SplitMix64& rng) {
  // (k + 0.5) / 2^53 for k in [0, 2^53): never 0, never 1.
  const uint64_t k = rng() >> 11;
  return (static_cast<double>(k) + 0.5) * 0x1.0p-53;
}

bool SampleBernoulli(double p, SplitMix64& rng) {
  if (p >= 1.0) return true;
  if (p <= 0.0) return false;
  return UniformOpen(rng) < p;
}

namespace {

constexpr double kPoissonChunk = 30.0;

int64_t SmallPoisson(double mean, SplitMix64& rng) {
  if (mean <= 0.0) return 0;
  const double u = UniformOpen(rng);
  double pmf = std::exp(-mean);
  double cdf = pmf;
  int64_t k = 0;
  // The cap only matters for u within rounding error of 1.
  while (u > cdf && k < 1000) {
    ++k;
    pmf *= mean / static_cast<double>(k);
    cdf += pmf;
  }
  return k;
}

}  // namespace

int64_t SamplePoisson(double mean, SplitMix64& rng) {
  int64_t total = 0;
  while (mean > kPoissonChunk) {
    total += SmallPoisson(kPoissonChunk, rng);
    mean -= kPoissonChunk;
  }
  return total + SmallPoisson(mean, rng);
}

size_t SampleCategorical(std::span<const double> weights, SplitMix64& rng) {
  double total = 0;
  for (double w : weights) total += w;
  const double target = UniformOpen(rng) * total;
  double running = 0;
  size_t last_positive = 0;
  for (size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0) continue;
    last_positive = i;
    running += weights[i];
    if (target < running) return i;
  }
  return last_positive;
}

}  // namespace tapaudit
