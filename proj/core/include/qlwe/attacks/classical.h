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

#ifndef QLWE_ATTACKS_CLASSICAL_H_
#define QLWE_ATTACKS_CLASSICAL_H_

#include <cstddef>
#include <cstdint>

#include "qlwe/attacks/oracle.h"
#include "qlwe/zq.h"

namespace qlwe::attacks {

struct ClassicalRecovery {
  ZqVector key;
  std::uint64_t queries;
};

// Recovers each k_i from decryptions of (e_i, c): the answer is 0 exactly
// when c lies within floor(q/4) of k_i. Each query picks the c that splits the
// remaining candidates for k_i most evenly, so the count stays within
// ceil(log2 q) + 2 per coordinate.
ClassicalRecovery classical_dec_keyrec(const LweDecOracle& dec, std::uint64_t q, std::size_t n);

// With control of the error, query (m = 0, a = e_i, e = 0) to read k_i
// directly: exactly n queries.
ClassicalRecovery classical_ra_keyrec(const RaFullOracle& enc, std::uint64_t q, std::size_t n);

}  // namespace qlwe::attacks

#endif  // QLWE_ATTACKS_CLASSICAL_H_
