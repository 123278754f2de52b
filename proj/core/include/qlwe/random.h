/*
 * Copyright 2026 The qlwe Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef QLWE_RANDOM_H_
#define QLWE_RANDOM_H_

#include <cstdint>
#include <random>

namespace qlwe {

// SplitMix64 finalizer. Used to expand one master seed into independent
// per-trial seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Seed for trial `counter` under `master`. Counter-based, so trial i gets the
// same seed whether trials run in order, in parallel, or individually.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter) {
  return splitmix64(splitmix64(master) ^ (counter * 0xD1B54A32D192ED03ULL));
}

// Seeded generator with platform-independent derived draws.
//
// std::uniform_int_distribution and friends are implementation-defined, so
// every derived draw here is computed from the raw 64-bit engine output. Two
// builds on different standard libraries produce the same stream for the same
// seed.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() { return engine_(); }

  // Uniform integer in [0, bound). bound must be nonzero.
  std::uint64_t uniform_below(std::uint64_t bound);

  // Uniform integer in [lo, hi] (inclusive).
  std::int64_t uniform_between(std::int64_t lo, std::int64_t hi);

  // Uniform double in [0, 1) with 53 random bits.
  double uniform_unit();

  // Standard normal via Box-Muller.
  double standard_normal();

  int bit() { return static_cast<int>(engine_() >> 63); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qlwe

#endif  // QLWE_RANDOM_H_
