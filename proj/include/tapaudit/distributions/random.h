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

// Seeded randomness. Every random draw in the library flows from an explicit
// 64-bit seed through the SplitMix64 generator below; sub-streams are keyed
// by hashing (root seed, stream label) so results never depend on iteration
// order. The samplers here are written out rather than taken from <random>
// because the standard distributions are implementation-defined, and pinned
// outputs must not change between standard libraries.

#ifndef TAPAUDIT_DISTRIBUTIONS_RANDOM_H_
#define TAPAUDIT_DISTRIBUTIONS_RANDOM_H_

#include <cstdint>
#include <limits>
#include <span>

#include "absl/strings/string_view.h"

namespace tapaudit {

// Steele, Lea & Flood's SplitMix64. Satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = uint64_t;

  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return Finalize(state_);
  }

  // The SplitMix64 output function; a good 64-bit avalanche mixer.
  static constexpr uint64_t Finalize(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  uint64_t state_;
};

// Derives a sub-seed from a parent seed and a stream label.
constexpr uint64_t MixSeeds(uint64_t parent, uint64_t label) {
  return SplitMix64::Finalize(SplitMix64::Finalize(parent) ^
                              (label + 0x632be59bd9b4e019ULL));
}

// 64-bit FNV-1a. Stable across platforms, unlike std::hash.
uint64_t Fingerprint64(absl::string_view bytes);

// Uniform on the open interval (0, 1) with 53 random bits.
double UniformOpen(SplitMix64& rng);

bool SampleBernoulli(double p, SplitMix64& rng);

// Exact Poisson draw by sequential CDF inversion. Means above 30 are split
// into chunks (Poisson additivity) to keep exp(-mean) away from underflow.
int64_t SamplePoisson(double mean, SplitMix64& rng);

// Index drawn proportionally to nonnegative weights (at least one positive).
size_t SampleCategorical(std::span<const double> weights, SplitMix64& rng);

}  // namespace tapaudit

#endif  // TAPAUDIT_DISTRIBUTIONS_RANDOM_H_
