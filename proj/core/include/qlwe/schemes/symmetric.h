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

#ifndef QLWE_SCHEMES_SYMMETRIC_H_
#define QLWE_SCHEMES_SYMMETRIC_H_

#include <array>
#include <cstdint>

#include "qlwe/random.h"

// Toy keyed function families for the PRF and PRP encryption schemes. They
// are NOT cryptographic; they exist so the schemes can be exercised end to
// end.
namespace qlwe::schemes {

// Messages are n-bit strings, 1 <= n <= 32, held in the low bits of a word.
class ToyPrf {
 public:
  ToyPrf(std::uint64_t key, unsigned bits);

  unsigned bits() const { return bits_; }
  std::uint64_t operator()(std::uint64_t input) const;

 private:
  std::uint64_t key_;
  unsigned bits_;
};

struct PrfCiphertext {
  std::uint64_t r;
  std::uint64_t body;  // f_k(r) xor m
};

PrfCiphertext prf_encrypt(const ToyPrf& prf, std::uint64_t message, Rng& rng);
std::uint64_t prf_decrypt(const ToyPrf& prf, const PrfCiphertext& ct);

// Four-round balanced Feistel network on 2n-bit strings, round keys derived
// from one scheme key.
class FeistelPrp {
 public:
  static constexpr int kRounds = 4;

  FeistelPrp(std::uint64_t key, unsigned half_bits);

  unsigned half_bits() const { return half_bits_; }
  std::uint64_t forward(std::uint64_t block) const;
  std::uint64_t inverse(std::uint64_t block) const;

 private:
  std::uint64_t round(int i, std::uint64_t half) const;
  std::uint64_t half_mask() const;

  std::array<std::uint64_t, kRounds> round_keys_;
  unsigned half_bits_;
};

// P_k(m || r): the message occupies the high half, fresh randomness the low.
std::uint64_t prp_encrypt(const FeistelPrp& prp, std::uint64_t message, Rng& rng);
// High half of P_k^{-1}(c). Throws ShapeError if c is wider than 2n bits.
std::uint64_t prp_decrypt(const FeistelPrp& prp, std::uint64_t ciphertext);

}  // namespace qlwe::schemes

#endif  // QLWE_SCHEMES_SYMMETRIC_H_
