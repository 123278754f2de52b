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

#include "qlwe/schemes/lwe.h"

#include <bit>
#include <utility>

#include "qlwe/errors.h"

namespace qlwe::schemes {

namespace {

void check_bit(int bit) {
  if (bit != 0 && bit != 1) throw ParameterError("plaintext must be a single bit");
}

}  // namespace

SkeParams SkeParams::with_defaults(std::uint64_t q, std::size_t n) {
  return SkeParams{q, n, ErrorDistribution::bounded_uniform(q, default_eta(q))};
}

SkeKey ske_keygen(const SkeParams& params, Rng& rng) {
  if (params.n == 0) throw ParameterError("LWE dimension must be at least 1");
  return SkeKey{sample_uniform_vector(params.q, params.n, rng)};
}

LweCiphertext ske_encrypt(const SkeParams& params, const SkeKey& key, int bit, Rng& rng) {
  check_bit(bit);
  if (key.k.modulus() != params.q || key.k.size() != params.n) {
    throw ShapeError("SKE key does not match parameters");
  }
  ZqVector a = sample_uniform_vector(params.q, params.n, rng);
  const std::uint64_t q = params.q;
  Residue c = inner_product(a, key.k);
  c = add_mod(c, static_cast<Residue>(bit) * (q / 2), q);
  c = add_mod(c, sample_error(params.noise, rng), q);
  return LweCiphertext{std::move(a), c};
}

int lwe_decrypt(std::span<const Residue> key, std::span<const Residue> a, Residue c,
                std::uint64_t q) {
  const Residue diff = sub_mod(c % q, inner_product(a, key, q), q);
  return centered_abs(diff, q) <= q / 4 ? 0 : 1;
}

int ske_decrypt(const SkeKey& key, const LweCiphertext& ct) {
  if (ct.a.modulus() != key.k.modulus() || ct.a.size() != key.k.size()) {
    throw ShapeError("ciphertext does not match key");
  }
  return lwe_decrypt(key.k.entries(), ct.a.entries(), ct.c, key.k.modulus());
}

std::size_t default_pke_samples(std::uint64_t q, std::size_t n) {
  const auto log_q = static_cast<std::size_t>(std::bit_width(q - 1));
  return 2 * n * log_q;
}

PkeParams PkeParams::with_defaults(std::uint64_t q, std::size_t n) {
  return PkeParams{q, n, default_pke_samples(q, n), ErrorDistribution::bounded_uniform(q, 1)};
}

PkeKeyPair pke_keygen(const PkeParams& params, Rng& rng) {
  if (params.n == 0) throw ParameterError("LWE dimension must be at least 1");
  if (params.m < params.n) throw ParameterError("PKE needs m >= n samples");
  ZqVector sk = sample_uniform_vector(params.q, params.n, rng);
  ZqMatrix a = sample_uniform_matrix(params.q, params.m, params.n, rng);
  ZqVector t = a * sk + sample_error_vector(params.noise, params.m, rng);
  return PkeKeyPair{std::move(sk), PkePublicKey{std::move(a), std::move(t)}};
}

LweCiphertext pke_encrypt(const PkePublicKey& pk, int bit, Rng& rng) {
  check_bit(bit);
  const std::uint64_t q = pk.a.modulus();
  const auto selector = sample_hamming_vector(pk.a.rows(), rng);
  std::vector<Residue> v(selector.begin(), selector.end());
  const ZqVector vv(q, std::move(v));
  ZqVector a = pk.a.left_multiply(vv);
  Residue c = inner_product(vv, pk.t);
  c = add_mod(c, static_cast<Residue>(bit) * (q / 2), q);
  return LweCiphertext{std::move(a), c};
}

int pke_decrypt(const ZqVector& sk, const LweCiphertext& ct) {
  if (ct.a.modulus() != sk.modulus() || ct.a.size() != sk.size()) {
    throw ShapeError("ciphertext does not match key");
  }
  return lwe_decrypt(sk.entries(), ct.a.entries(), ct.c, sk.modulus());
}

}  // namespace qlwe::schemes
