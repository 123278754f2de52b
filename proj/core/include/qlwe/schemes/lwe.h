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

#ifndef QLWE_SCHEMES_LWE_H_
#define QLWE_SCHEMES_LWE_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "qlwe/noise.h"
#include "qlwe/random.h"
#include "qlwe/zq.h"

namespace qlwe::schemes {

// Regev-style bit encryption with a secret vector k in Z_q^n.
struct SkeParams {
  std::uint64_t q;
  std::size_t n;
  ErrorDistribution noise;

  // Bounded-uniform noise with eta = default_eta(q).
  static SkeParams with_defaults(std::uint64_t q, std::size_t n);
};

struct SkeKey {
  ZqVector k;
};

// (a, c) with c = <a, k> + bit * floor(q/2) + e.
struct LweCiphertext {
  ZqVector a;
  Residue c;
};

SkeKey ske_keygen(const SkeParams& params, Rng& rng);
LweCiphertext ske_encrypt(const SkeParams& params, const SkeKey& key, int bit, Rng& rng);
// 0 iff centered_abs(c - <a, k>) <= floor(q/4).
int ske_decrypt(const SkeKey& key, const LweCiphertext& ct);

// The shared decryption rule of the SKE and PKE variants, on raw residues.
int lwe_decrypt(std::span<const Residue> key, std::span<const Residue> a, Residue c,
                std::uint64_t q);

// Public-key variant: pk = (A, t = A k + e) with A uniform m x n.
struct PkeParams {
  std::uint64_t q;
  std::size_t n;
  std::size_t m;
  ErrorDistribution noise;

  // m = 2 n ceil(log2 q) and bounded-uniform noise with eta = 1.
  static PkeParams with_defaults(std::uint64_t q, std::size_t n);
};

std::size_t default_pke_samples(std::uint64_t q, std::size_t n);

struct PkePublicKey {
  ZqMatrix a;
  ZqVector t;
};

struct PkeKeyPair {
  ZqVector sk;
  PkePublicKey pk;
};

PkeKeyPair pke_keygen(const PkeParams& params, Rng& rng);
// (v^T A, v^T t + bit * floor(q/2)) with v of Hamming weight floor(m/2).
LweCiphertext pke_encrypt(const PkePublicKey& pk, int bit, Rng& rng);
int pke_decrypt(const ZqVector& sk, const LweCiphertext& ct);

}  // namespace qlwe::schemes

#endif  // QLWE_SCHEMES_LWE_H_
