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

#include "qlwe/schemes/frodo.h"

#include <string>
#include <utility>

#include "qlwe/errors.h"

namespace qlwe::schemes {

FrodoParams FrodoParams::make(unsigned log_q, unsigned bits, std::size_t n, std::size_t n_bar,
                              std::size_t m_bar, std::uint64_t eta, FrodoDecode decode) {
  if (log_q < 1 || log_q > 32) throw ParameterError("Frodo needs 1 <= D <= 32");
  if (bits < 1 || bits > log_q) {
    throw ParameterError("Frodo needs 1 <= B <= D, got B=" + std::to_string(bits));
  }
  if (n == 0 || n_bar == 0 || m_bar == 0) throw ParameterError("Frodo dimensions must be positive");
  const std::uint64_t q = std::uint64_t{1} << log_q;
  return FrodoParams{log_q, bits, n, n_bar, m_bar, ErrorDistribution::bounded_uniform(q, eta),
                     decode};
}

FrodoKeyPair frodo_keygen(const FrodoParams& p, Rng& rng) {
  ZqMatrix a = sample_uniform_matrix(p.q(), p.n, p.n, rng);
  ZqMatrix s = sample_error_matrix(p.noise, p.n, p.n_bar, rng);
  ZqMatrix e = sample_error_matrix(p.noise, p.n, p.n_bar, rng);
  ZqMatrix b = a * s + e;
  return FrodoKeyPair{std::move(s), FrodoPublicKey{std::move(a), std::move(b)}};
}

ZqMatrix frodo_encode(const FrodoParams& p, const ZqMatrix& message) {
  if (message.modulus() != p.message_modulus() || message.rows() != p.m_bar ||
      message.cols() != p.n_bar) {
    throw ShapeError("Frodo message must be m_bar x n_bar over Z_{2^B}");
  }
  std::vector<Residue> out(message.entries().begin(), message.entries().end());
  for (Residue& v : out) v *= p.block();
  return ZqMatrix(p.q(), p.m_bar, p.n_bar, std::move(out));
}

FrodoCiphertext frodo_encrypt(const FrodoParams& p, const FrodoPublicKey& pk,
                              const ZqMatrix& encoded, Rng& rng) {
  if (encoded.modulus() != p.q() || encoded.rows() != p.m_bar || encoded.cols() != p.n_bar) {
    throw ShapeError("encoded Frodo message has the wrong shape");
  }
  for (Residue v : encoded.entries()) {
    if (v % p.block() != 0) {
      throw ParameterError("Frodo message entry " + std::to_string(v) +
                           " uses bits below the top B");
    }
  }
  const ZqMatrix s_prime = sample_error_matrix(p.noise, p.m_bar, p.n, rng);
  const ZqMatrix e_prime = sample_error_matrix(p.noise, p.m_bar, p.n, rng);
  const ZqMatrix e_second = sample_error_matrix(p.noise, p.m_bar, p.n_bar, rng);
  ZqMatrix c1 = s_prime * pk.a + e_prime;
  ZqMatrix c2 = encoded + s_prime * pk.b + e_second;
  return FrodoCiphertext{std::move(c1), std::move(c2)};
}

std::uint64_t frodo_truncate(const FrodoParams& p, Residue value) {
  return (value % p.q()) >> (p.log_q - p.bits);
}

ZqMatrix frodo_decrypt(const FrodoParams& p, const ZqMatrix& s, const FrodoCiphertext& ct) {
  if (s.rows() != p.n || s.cols() != p.n_bar || ct.c1.rows() != p.m_bar ||
      ct.c1.cols() != p.n || ct.c2.rows() != p.m_bar || ct.c2.cols() != p.n_bar) {
    throw ShapeError("Frodo ciphertext/key shape mismatch");
  }
  const ZqMatrix m = ct.c2 - ct.c1 * s;
  const Residue half_block = p.decode == FrodoDecode::kRound ? p.block() / 2 : 0;
  std::vector<Residue> out(m.entries().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = frodo_truncate(p, add_mod(m.entries()[i], half_block, p.q()));
  }
  return ZqMatrix(p.message_modulus(), p.m_bar, p.n_bar, std::move(out));
}

}  // namespace qlwe::schemes
