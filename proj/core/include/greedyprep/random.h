// Copyright 2026 The greedyprep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GREEDYPREP_RANDOM_H
#define GREEDYPREP_RANDOM_H

#include <cstdint>
#include <random>

// Everything here is built on std::mt19937_64, whose output sequence is fixed by the standard.
// The distribution transforms are written out by hand because the std:: distributions are
// implementation-defined, and reports must be reproducible across toolchains.

namespace greedyprep {

inline constexpr const char *kGeneratorName = "mt19937_64";
inline constexpr const char *kUniformIntMethod = "rejection-sampled modulo";
inline constexpr const char *kNormalMethod = "Box-Muller (cosine branch, fresh pair per draw)";
inline constexpr const char *kSeedSplitRule = "splitmix64(splitmix64(splitmix64(base) ^ task) ^ realization)";

/// One round of the SplitMix64 finalizer.
constexpr uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Seed for an independent stream identified by (task, realization) under a base seed.
constexpr uint64_t derive_seed(uint64_t base, uint64_t task, uint64_t realization) {
    return splitmix64(splitmix64(splitmix64(base) ^ task) ^ realization);
}

/// Uniform integer in [0, n). n must be positive.
uint64_t uniform_below(std::mt19937_64 &rng, uint64_t n);

/// Uniform double in [0, 1) with 53 random bits.
double uniform01(std::mt19937_64 &rng);

/// Standard normal deviate.
double standard_normal(std::mt19937_64 &rng);

}  // namespace greedyprep

#endif
