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

#ifndef QLWE_ATTACKS_ANALYSIS_H_
#define QLWE_ATTACKS_ANALYSIS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

#include "qlwe/lrf.h"
#include "qlwe/noise.h"
#include "qlwe/zq.h"

// Success probabilities computed directly from their defining sums. Nothing
// here touches the state-vector simulator, so these serve as independent
// oracles for the simulated attacks.
namespace qlwe::attacks {

// Largest q^n that brute_force_success will enumerate.
inline constexpr std::uint64_t kMaxEnumeration = 1'000'000;

// Maps <x, k> in Z_q to an output in Z_c.
using BlockMap = std::function<std::uint64_t(Residue)>;

// |q^{-n} sum_{x in Z_q^n} w_c^{-block(<x,k>)} w_q^{<x,k>}|^2: the probability
// that one phase-kickback query followed by QFT and measurement returns
// exactly `key`. Throws ResourceError if q^n > kMaxEnumeration.
double brute_force_success(std::uint64_t q, std::span<const Residue> key, std::uint64_t c,
                           const BlockMap& block);

// Same, for the LRF with the given geometry.
double brute_force_success(const LrfParams& params, const ZqVector& key);

// The closed form |q^{-1} sum_v w_c^{-v} w_q^{vb} T_v|^2 with
// T_v = sum_{z < L_v} w_q^z, L_v = b except L_{c-1} = b - d. Valid for every
// key with a unit entry and every offset. O(q) time.
double exact_success_probability(std::uint64_t q, std::uint64_t b);

// |q^{-1} sum_z w_c^{-block(z)} w_q^z|^2: the brute-force value for any key
// with a unit entry, folded to one dimension. O(q) time.
double unit_key_success(std::uint64_t q, std::uint64_t c, const BlockMap& block);

// Decryption output of the LWE bit schemes as a function of c - <a, k>.
std::uint64_t lwe_decryption_block(Residue z, std::uint64_t q);

// Expected success of the randomness-access attack when every branch gets an
// independent error: |mu|^2 + (1 - |mu|^2) / q^n with mu = E[w_q^{-e}].
double iid_error_expected_success(const ErrorDistribution& dist, std::size_t n);

// phi(q) / (24 eta q).
double iid_error_lower_bound(std::uint64_t q, std::uint64_t eta);

struct WilsonInterval {
  double lo;
  double hi;
};

// Wilson score interval; z = 1.96 gives 95% coverage.
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                               double z = 1.959963984540054);

}  // namespace qlwe::attacks

#endif  // QLWE_ATTACKS_ANALYSIS_H_
