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

#ifndef QLWE_SCHEMES_RING_LWE_H_
#define QLWE_SCHEMES_RING_LWE_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "qlwe/noise.h"
#include "qlwe/random.h"
#include "qlwe/ring_poly.h"
#include "qlwe/zq.h"

namespace qlwe::schemes {

// Bit encryption over R_q = Z_q[x]/(x^n + 1), n a power of two.
struct RingLweParams {
  std::uint64_t q;
  std::size_t n;
  ErrorDistribution noise;

  static RingLweParams make(std::uint64_t q, std::size_t n, std::uint64_t eta);
};

struct RingLwePublicKey {
  RingPoly a;
  RingPoly c;  // a s + e
};

struct RingLweKeyPair {
  RingPoly s;
  RingLwePublicKey pk;
};

struct RingLweCiphertext {
  RingPoly u;
  RingPoly v;
};

RingLweKeyPair ringlwe_keygen(const RingLweParams& params, Rng& rng);

// u = a r + e1, v = c r + e2 + bit * floor(q/2) (added to the constant term).
RingLweCiphertext ringlwe_encrypt(const RingLweParams& params, const RingLwePublicKey& pk,
                                  int bit, Rng& rng);

// 0 iff the constant term t of v - u s has centered_abs(t) <= floor(q/4).
int ringlwe_decrypt(const RingPoly& s, const RingLweCiphertext& ct);

// The same rule for a ciphertext whose v is the constant polynomial v0, on raw
// coefficients. Allocation-free; used by oracles evaluated per basis state.
int ringlwe_decrypt_constant(std::span<const Residue> s, std::span<const Residue> u,
                             Residue v0, std::uint64_t q);
int ringlwe_decrypt_constant(std::span<const Residue> s, std::span<const Residue> u,
                             Residue v0, const FixedModulus& q);

}  // namespace qlwe::schemes

#endif  // QLWE_SCHEMES_RING_LWE_H_
