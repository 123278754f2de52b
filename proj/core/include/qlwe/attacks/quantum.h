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

#ifndef QLWE_ATTACKS_QUANTUM_H_
#define QLWE_ATTACKS_QUANTUM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qlwe/attacks/oracle.h"
#include "qlwe/qsim/operations.h"
#include "qlwe/random.h"
#include "qlwe/ring_poly.h"
#include "qlwe/schemes/frodo.h"
#include "qlwe/zq.h"

namespace qlwe::attacks {

// |x>|z> -> |x>|z + f(x) mod c> for x in Z_q^arity.
struct AdditiveOracle {
  std::size_t arity;
  std::uint64_t q;
  std::uint64_t c;
  qsim::ClassicalFunction f;
};

// One-query key recovery for a function whose output is (close to) a
// rounding of <x, k>: uniform superposition over Z_q^arity, phase-kickback
// register (1/sqrt c) sum_z w_c^z |z>, one oracle call, discard the kickback
// register, QFT on every input register, measure. Returns the measured tuple.
std::vector<Residue> bv_lrf_attack(const AdditiveOracle& oracle, Rng& rng,
                                   OracleBudget& budget,
                                   qsim::QftBackend backend = qsim::QftBackend::kFftw);

// Decryption-oracle attacks on the LWE bit schemes. Decryption of (a, c) is a
// binary rounding of <(a, c), (-k, 1)>, so a measured tuple ending in 1 gives
// k = -(first n entries). Any other ending is a failed trial (nullopt).
std::optional<ZqVector> attack_lwe_dec(const LweDecOracle& dec, std::uint64_t q, std::size_t n,
                                       Rng& rng, OracleBudget& budget,
                                       qsim::QftBackend backend = qsim::QftBackend::kFftw);

inline std::optional<ZqVector> attack_ske(const LweDecOracle& dec, std::uint64_t q,
                                          std::size_t n, Rng& rng, OracleBudget& budget) {
  return attack_lwe_dec(dec, q, n, rng, budget);
}
inline std::optional<ZqVector> attack_pke(const LweDecOracle& dec, std::uint64_t q,
                                          std::size_t n, Rng& rng, OracleBudget& budget) {
  return attack_lwe_dec(dec, q, n, rng, budget);
}

// Recovers the chosen columns of S (one per ciphertext row, so at most m_bar
// of them) with a single decryption query. Row i holds the kickback state in
// the slot of columns[i] and the shift-invariant uniform state in the other
// slots; rows are independent and simulated one at a time, but the whole
// query is charged once. Returns one candidate column per entry of `columns`.
std::vector<ZqVector> attack_frodo(const FrodoRowOracle& dec, const schemes::FrodoParams& params,
                                   std::span<const std::size_t> columns, Rng& rng,
                                   OracleBudget& budget,
                                   qsim::QftBackend backend = qsim::QftBackend::kFftw);

// Decryption-oracle attack on Ring-LWE through constant-v ciphertexts. The
// measured tuple estimates (-s_0, s_{n-1}, ..., s_1, 1).
std::optional<RingPoly> attack_ringlwe(const RingDecOracle& dec, std::uint64_t q, std::size_t n,
                                       Rng& rng, OracleBudget& budget,
                                       qsim::QftBackend backend = qsim::QftBackend::kFftw);

// Randomness-access attack: queries |m = 0>|uniform a>|kickback over Z_q>,
// applies QFT to the a registers and measures them. With a shared error the
// result is k with certainty; with per-branch errors it is k with the
// probability given by iid_error_expected_success on average.
ZqVector attack_randomness_access(const RaEncOracle& enc, std::uint64_t q, std::size_t n,
                                  Rng& rng, OracleBudget& budget,
                                  qsim::QftBackend backend = qsim::QftBackend::kFftw);

}  // namespace qlwe::attacks

#endif  // QLWE_ATTACKS_QUANTUM_H_
