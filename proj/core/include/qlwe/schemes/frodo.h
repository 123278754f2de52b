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

#ifndef QLWE_SCHEMES_FRODO_H_
#define QLWE_SCHEMES_FRODO_H_

#include <cstddef>
#include <cstdint>

#include "qlwe/noise.h"
#include "qlwe/random.h"
#include "qlwe/zq.h"

namespace qlwe::schemes {

// How a decrypted entry of C2 - C1 S is turned back into B message bits.
enum class FrodoDecode {
  // Keep the B most significant of the D bits. This is the literal rule and
  // makes each entry LRF_{s^j, 0, q/2^B}(c^i) when C2 = 0.
  kTruncate,
  // Add half a block (q/2^{B+1}) before truncating, so symmetric noise of
  // magnitude below q/2^{B+1} decodes correctly.
  kRound,
};

// Matrix-LWE public-key encryption with q = 2^D and B-bit message entries.
struct FrodoParams {
  unsigned log_q;        // D
  unsigned bits;         // B, 1 <= B <= D
  std::size_t n;         // secret dimension
  std::size_t n_bar;     // columns of S
  std::size_t m_bar;     // rows of a ciphertext
  ErrorDistribution noise;
  FrodoDecode decode = FrodoDecode::kTruncate;

  // Bounded-uniform noise of magnitude eta.
  static FrodoParams make(unsigned log_q, unsigned bits, std::size_t n, std::size_t n_bar,
                          std::size_t m_bar, std::uint64_t eta,
                          FrodoDecode decode = FrodoDecode::kTruncate);

  std::uint64_t q() const { return std::uint64_t{1} << log_q; }
  // Block size q / 2^B of the rounding function each entry decrypts through.
  std::uint64_t block() const { return std::uint64_t{1} << (log_q - bits); }
  std::uint64_t message_modulus() const { return std::uint64_t{1} << bits; }
};

struct FrodoPublicKey {
  ZqMatrix a;  // n x n
  ZqMatrix b;  // n x n_bar, B = A S + E
};

struct FrodoKeyPair {
  ZqMatrix s;  // n x n_bar
  FrodoPublicKey pk;
};

struct FrodoCiphertext {
  ZqMatrix c1;  // m_bar x n
  ZqMatrix c2;  // m_bar x n_bar
};

FrodoKeyPair frodo_keygen(const FrodoParams& params, Rng& rng);

// Places each B-bit value of `message` (m_bar x n_bar over Z_{2^B}) in the
// top B bits of a D-bit entry.
ZqMatrix frodo_encode(const FrodoParams& params, const ZqMatrix& message);

// C1 = S'A + E', C2 = M + S'B + E''. Throws ParameterError if an entry of
// `encoded` has nonzero bits below the top B.
FrodoCiphertext frodo_encrypt(const FrodoParams& params, const FrodoPublicKey& pk,
                              const ZqMatrix& encoded, Rng& rng);

// Top B bits of a D-bit value.
std::uint64_t frodo_truncate(const FrodoParams& params, Residue value);

// Decodes C2 - C1 S entrywise per params.decode; result is m_bar x n_bar over
// Z_{2^B}.
ZqMatrix frodo_decrypt(const FrodoParams& params, const ZqMatrix& s, const FrodoCiphertext& ct);

}  // namespace qlwe::schemes

#endif  // QLWE_SCHEMES_FRODO_H_
