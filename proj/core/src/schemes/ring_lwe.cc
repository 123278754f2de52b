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

#include "qlwe/schemes/ring_lwe.h"

#include <algorithm>
#include <utility>
#include <vector>

#include "qlwe/errors.h"
#include "qlwe/zq.h"

namespace qlwe::schemes {

RingLweParams RingLweParams::make(std::uint64_t q, std::size_t n, std::uint64_t eta) {
  check_modulus(q);
  if (!is_power_of_two(n)) throw ParameterError("ring dimension must be a power of two");
  return RingLweParams{q, n, ErrorDistribution::bounded_uniform(q, eta)};
}

RingLweKeyPair ringlwe_keygen(const RingLweParams& p, Rng& rng) {
  RingPoly a = sample_uniform_poly(p.q, p.n, rng);
  RingPoly s = sample_error_poly(p.noise, p.n, rng);
  RingPoly c = negacyclic_mul(a, s) + sample_error_poly(p.noise, p.n, rng);
  return RingLweKeyPair{std::move(s), RingLwePublicKey{std::move(a), std::move(c)}};
}

RingLweCiphertext ringlwe_encrypt(const RingLweParams& p, const RingLwePublicKey& pk, int bit,
                                  Rng& rng) {
  if (bit != 0 && bit != 1) throw ParameterError("plaintext must be a single bit");
  if (pk.a.modulus() != p.q || pk.a.degree_bound() != p.n) {
    throw ShapeError("Ring-LWE public key does not match parameters");
  }
  const RingPoly r = sample_error_poly(p.noise, p.n, rng);
  RingPoly u = negacyclic_mul(pk.a, r) + sample_error_poly(p.noise, p.n, rng);
  RingPoly v = negacyclic_mul(pk.c, r) + sample_error_poly(p.noise, p.n, rng) +
               RingPoly::constant(p.q, p.n, static_cast<Residue>(bit) * (p.q / 2));
  return RingLweCiphertext{std::move(u), std::move(v)};
}

int ringlwe_decrypt(const RingPoly& s, const RingLweCiphertext& ct) {
  const std::uint64_t q = s.modulus();
  if (ct.u.modulus() != q || ct.v.modulus() != q || ct.u.degree_bound() != s.degree_bound() ||
      ct.v.degree_bound() != s.degree_bound()) {
    throw ShapeError("ciphertext does not match key");
  }
  const Residue t = sub_mod(ct.v[0], negacyclic_constant_term(ct.u, s), q);
  return centered_abs(t, q) <= q / 4 ? 0 : 1;
}

int ringlwe_decrypt_constant(std::span<const Residue> s, std::span<const Residue> u,
                             Residue v0, std::uint64_t q) {
  return ringlwe_decrypt_constant(s, u, v0, FixedModulus(q));
}

int ringlwe_decrypt_constant(std::span<const Residue> s, std::span<const Residue> u,
                             Residue v0, const FixedModulus& modulus) {
  const std::uint64_t q = modulus.value();
  const std::size_t n = s.size();
  if (u.size() != n || n == 0) throw ShapeError("ciphertext does not match key");
  // v0 - (u s)_0 = v0 - u_0 s_0 + sum_{j >= 1} u_j s_{n-j}, accumulated as
  // nonnegative terms with lazy reduction. Keeping the sum below 2^32 when the
  // products allow it keeps the final reduction division-free.
  const std::uint64_t step = (q - 1) * (q - 1);
  const std::uint64_t limit = step < 0xFFFFFFFFu ? 0xFFFFFFFFu : ~std::uint64_t{0};
  const std::uint64_t headroom = limit - step;
  Residue top = std::max(v0, std::max(u[0], s[0]));
  std::uint64_t acc = v0 + u[0] * neg_mod(s[0], q);
  for (std::size_t j = 1; j < n; ++j) {
    top = std::max(top, std::max(u[j], s[n - j]));
    if (acc > headroom) acc = modulus.reduce(acc);
    acc += u[j] * s[n - j];
  }
  if (top >= q) throw ParameterError("entry not reduced");
  const Residue t = modulus.reduce(acc);
  return std::min(t, q - t) <= q / 4 ? 0 : 1;
}

}  // namespace qlwe::schemes
