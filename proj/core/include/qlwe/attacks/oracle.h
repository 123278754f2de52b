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

#ifndef QLWE_ATTACKS_ORACLE_H_
#define QLWE_ATTACKS_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "qlwe/noise.h"
#include "qlwe/random.h"
#include "qlwe/ring_poly.h"
#include "qlwe/schemes/frodo.h"
#include "qlwe/zq.h"

namespace qlwe::attacks {

// Counts applications of a quantum oracle against a fixed allowance.
class OracleBudget {
 public:
  explicit OracleBudget(std::uint64_t allowed = 1) : allowed_(allowed) {}

  std::uint64_t allowed() const { return allowed_; }
  std::uint64_t consumed() const { return consumed_; }

  // Records one oracle application. Throws BudgetExhausted if none is left.
  void charge();

 private:
  std::uint64_t allowed_;
  std::uint64_t consumed_ = 0;
};

// Classical decryption of an LWE bit ciphertext (a, c); the SKE and PKE
// schemes both expose this.
using LweDecOracle = std::function<int(std::span<const Residue> a, Residue c)>;

LweDecOracle ske_dec_oracle(const ZqVector& key);
LweDecOracle pke_dec_oracle(const ZqVector& sk);

// Ring-LWE decryption restricted to ciphertexts (u, v0) with constant v.
using RingDecOracle = std::function<int(std::span<const Residue> u, Residue v0)>;

RingDecOracle ringlwe_dec_oracle(const RingPoly& s);

// One row of Frodo decryption: for the ciphertext with C1 = c (one row) and
// C2 = 0, returns the n_bar decoded entries in Z_{2^B}.
using FrodoRowOracle = std::function<std::vector<Residue>(std::span<const Residue> c)>;

FrodoRowOracle frodo_row_oracle(const schemes::FrodoParams& params, const ZqMatrix& s);

// Encryption with randomness access: the caller picks the message bit m and
// the vector a; the oracle answers <a, k> + m floor(q/2) + e with an error it
// chooses itself.
using RaEncOracle = std::function<Residue(int m, std::span<const Residue> a)>;

// Every query uses the same error e.
RaEncOracle ra_shared_error_oracle(const ZqVector& key, std::int64_t e);

// Each (m, a) gets its own error drawn independently from `dist`, tabulated
// lazily so repeated queries on the same input agree. The table is seeded
// from `seed` and holds 2 q^n entries; throws ResourceError when that exceeds
// the amplitude cap.
RaEncOracle ra_iid_error_oracle(const ZqVector& key, const ErrorDistribution& dist,
                                std::uint64_t seed);

// Encryption where the caller also fixes the error e.
using RaFullOracle = std::function<Residue(int m, std::span<const Residue> a, std::int64_t e)>;

RaFullOracle ra_full_control_oracle(const ZqVector& key);

}  // namespace qlwe::attacks

#endif  // QLWE_ATTACKS_ORACLE_H_
