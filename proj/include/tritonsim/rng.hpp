// Copyright 2026 The tritonsim authors
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

#include <cmath>
#include <cstdint>

namespace tritonsim::rng {

// Counter-based generator built on the splitmix64 finalizer. Every draw is a
// pure function of (seed, counter), so sweeps and Monte-Carlo batches are
// reproducible independently of evaluation order or thread count.

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

inline std::uint64_t at(std::uint64_t seed, std::uint64_t counter) {
  return mix64(seed + (counter + 1) * kGolden);
}

/// Independent stream key for task `index` of a seeded run.
inline std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
  return at(seed, index);
}

/// Uniform double in [0, 1).
inline double uniform(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>(at(seed, counter) >> 11) * 0x1.0p-53;
}

/// Standard normal via Box-Muller; consumes counters 2k and 2k+1.
inline double normal(std::uint64_t seed, std::uint64_t counter) {
  double u1 = uniform(seed, 2 * counter);
  double u2 = uniform(seed, 2 * counter + 1);
  if (u1 < 0x1.0p-60) u1 = 0x1.0p-60;
  constexpr double two_pi = 6.283185307179586476925286766559;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

}  // namespace tritonsim::rng
