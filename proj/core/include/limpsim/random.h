// Copyright 2026 The limpsim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Deterministic random streams for Monte Carlo trials.
//
// Each trial owns a std::mt19937_64 seeded with TrialSeed(master, index):
//
//   z = master + 0x9E3779B97F4A7C15 * (index + 1)        (mod 2^64)
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   seed = z ^ (z >> 31)
//
// i.e. the splitmix64 output for state `master` after index + 1 steps. The
// engine and every sampler below are bit-exact across standard libraries:
// none of them goes through <random> distributions, whose algorithms are
// implementation-defined.

#include <array>
#include <cstdint>
#include <random>

namespace limpsim {

using Engine = std::mt19937_64;

// splitmix64 finalizer.
constexpr std::uint64_t Mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t TrialSeed(std::uint64_t master_seed, std::uint64_t trial_index) {
  return Mix64(master_seed + 0x9E3779B97F4A7C15ULL * (trial_index + 1));
}

inline Engine TrialEngine(std::uint64_t master_seed, std::uint64_t trial_index) {
  return Engine(TrialSeed(master_seed, trial_index));
}

// Uniform integer in [0, bound), bound >= 1. Rejection sampling, unbiased.
std::uint64_t UniformBelow(Engine& engine, std::uint64_t bound);

// Uniform double in [0, 1) with 53 random bits.
double UniformUnit(Engine& engine);

bool Bernoulli(Engine& engine, double p);

// Number of failures before the first success of Bernoulli(p) trials,
// 0 < p < 1. Inverse-CDF sampling.
std::uint64_t GeometricFailures(Engine& engine, double p);

// Uniform 3-subset of {0 .. n-1} (Floyd's algorithm), returned sorted.
std::array<std::int32_t, 3> SampleTriple(Engine& engine, std::int32_t n);

}  // namespace limpsim
