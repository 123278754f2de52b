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

#ifndef QLWE_ATTACKS_EXPERIMENT_H_
#define QLWE_ATTACKS_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlwe/attacks/analysis.h"
#include "qlwe/qsim/operations.h"
#include "qlwe/schemes/frodo.h"
#include "qlwe/zq.h"

namespace qlwe::attacks {

enum class AttackKind {
  kLrf,           // generic rounding-function oracle with block size b
  kSke,
  kPke,
  kFrodo,
  kRingLwe,
  kRaShared,      // randomness access, one error for every branch
  kRaIid,         // randomness access, independent error per branch
  kClassicalDec,
  kClassicalRa,
};

std::string_view attack_name(AttackKind kind);
// Throws ParameterError for an unknown name.
AttackKind parse_attack_kind(std::string_view name);
const std::vector<AttackKind>& all_attack_kinds();
bool is_quantum(AttackKind kind);

struct AttackParams {
  AttackKind kind = AttackKind::kSke;
  std::uint64_t q = 7;
  std::size_t n = 2;
  // Block size and offset for kLrf; b = 0 selects ceil(q/2).
  std::uint64_t b = 0;
  Residue a = 0;
  // Noise magnitude; unset selects the per-scheme default.
  std::optional<std::uint64_t> eta;
  // Frodo: q must be 2^D; the attack targets columns 0..min(m_bar, n_bar)-1.
  unsigned frodo_bits = 2;
  std::size_t n_bar = 2;
  std::size_t m_bar = 2;
  schemes::FrodoDecode frodo_decode = schemes::FrodoDecode::kTruncate;
  qsim::QftBackend backend = qsim::QftBackend::kFftw;

  // Throws ParameterError if the parameters violate the attack's
  // preconditions. Does no simulation work.
  void validate() const;
  std::uint64_t effective_b() const;
  std::uint64_t effective_eta() const;
};

struct AttackReport {
  std::string attack;
  std::uint64_t seed = 0;
  bool success = false;
  // Recovered key, flattened (Frodo: chosen columns, concatenated). Empty
  // when the measurement did not identify a key.
  std::vector<Residue> candidate;
  std::vector<Residue> truth;
  // Frodo only: per chosen column, recovered or not, and whether the true
  // column has an odd entry (the case the guarantee covers).
  std::vector<bool> column_success;
  std::vector<bool> column_has_unit;
  std::uint64_t quantum_queries = 0;
  std::uint64_t classical_queries = 0;
  double elapsed_seconds = 0.0;
};

// Generates a fresh key from `seed`, runs one attack against it and scores
// the result by exact key equality.
AttackReport run_trial(const AttackParams& params, std::uint64_t seed);

// Success probability from an analytic oracle, when one applies: the closed
// form for kLrf, the unit-key block sum for the decryption attacks, 1 for the
// exact attacks and the expectation over errors for kRaIid. Frodo has none
// because its success depends on the parity of the sampled key.
std::optional<double> analytic_success(const AttackParams& params);

struct RateEstimate {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double rate = 0.0;
  WilsonInterval wilson{0.0, 0.0};
  // Worst case over trials.
  std::uint64_t quantum_queries = 0;
  std::uint64_t classical_queries = 0;
  double elapsed_seconds = 0.0;
};

// Trial t uses seed derive_seed(seed, t). Reports keep their trial order.
RateEstimate success_rate_experiment(const AttackParams& params, std::uint64_t trials,
                                     std::uint64_t seed,
                                     std::vector<AttackReport>* reports = nullptr);

}  // namespace qlwe::attacks

#endif  // QLWE_ATTACKS_EXPERIMENT_H_
