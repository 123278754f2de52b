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

#ifndef QLWE_QSIM_OPERATIONS_H_
#define QLWE_QSIM_OPERATIONS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qlwe/qsim/state_vector.h"
#include "qlwe/random.h"

namespace qlwe::qsim {

// A classical function of the values held by a chosen list of input
// registers. Its result is reduced modulo the target dimension by the oracle.
using ClassicalFunction = std::function<std::uint64_t(std::span<const std::uint64_t>)>;

// |x>|z> -> |x>|z + f(x) mod c> where c is the dimension of `target` and x
// the values of `inputs` (in the given order). `target` must not appear in
// `inputs`. The map permutes basis states.
StateVector apply_additive_oracle(StateVector state, std::span<const std::size_t> inputs,
                                  std::size_t target, const ClassicalFunction& f);

// Same, with every register other than `target` as input, in register order.
StateVector apply_additive_oracle(StateVector state, std::size_t target,
                                  const ClassicalFunction& f);

// |x> -> omega_c^{-f(x)} |x>.
StateVector apply_phase_oracle(StateVector state, std::span<const std::size_t> inputs,
                               const ClassicalFunction& f, std::uint64_t c);

enum class QftBackend {
  kDense,  // per-register dense DFT matrix; reference implementation
  kFftw,   // FFTW with cached plans
};

// Applies QFT_{Z_q}|x> = q^{-1/2} sum_y omega_q^{xy}|y> to each listed register.
StateVector qft(StateVector state, std::span<const std::size_t> registers,
                QftBackend backend = QftBackend::kFftw);
// Kernel omega_q^{-xy} / sqrt(q).
StateVector inverse_qft(StateVector state, std::span<const std::size_t> registers,
                        QftBackend backend = QftBackend::kFftw);

StateVector qft(StateVector state, std::size_t reg, QftBackend backend = QftBackend::kFftw);
StateVector inverse_qft(StateVector state, std::size_t reg,
                        QftBackend backend = QftBackend::kFftw);

// Probability that measuring `registers` yields `outcome`.
double outcome_probability(const StateVector& state, std::span<const std::size_t> registers,
                           std::span<const std::uint64_t> outcome);

// Marginal distribution of one register.
std::vector<double> register_distribution(const StateVector& state, std::size_t reg);

// Samples a computational-basis outcome for `registers` by inverse CDF over
// the dense amplitude index. Deterministic given the generator state.
std::vector<std::uint64_t> measure(const StateVector& state,
                                   std::span<const std::size_t> registers, Rng& rng);
std::vector<std::uint64_t> measure_all(const StateVector& state, Rng& rng);

// Removes a register that is in a product state with the rest.
//
// The factor phi on `reg` is taken from the largest-norm slice and phased so
// its first maximal-magnitude entry is real and positive; the reduced state
// is <phi|state>. Throws ContractViolation if state != reduced (x) phi within
// kTolerance.
StateVector discard_register(const StateVector& state, std::size_t reg);

// Same, projecting onto a known normalized factor (keeps the global phase
// exactly as the caller expects).
StateVector discard_register(const StateVector& state, std::size_t reg,
                             const StateVector& factor);

}  // namespace qlwe::qsim

#endif  // QLWE_QSIM_OPERATIONS_H_
