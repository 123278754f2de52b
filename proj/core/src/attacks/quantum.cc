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

#include "qlwe/attacks/quantum.h"

#include <numeric>
#include <string>
#include <utility>

#include "qlwe/errors.h"
#include "qlwe/qsim/state_vector.h"

namespace qlwe::attacks {

namespace {

using qsim::RegisterLayout;
using qsim::StateVector;

std::vector<std::size_t> first_registers(std::size_t count, std::size_t offset = 0) {
  std::vector<std::size_t> regs(count);
  std::iota(regs.begin(), regs.end(), offset);
  return regs;
}

// Dense index of x in Z_q^n, most significant entry first.
std::size_t tuple_index(std::span<const std::uint64_t> x, std::uint64_t q) {
  std::size_t index = 0;
  for (std::uint64_t v : x) index = index * q + v;
  return index;
}

}  // namespace

std::vector<Residue> bv_lrf_attack(const AdditiveOracle& oracle, Rng& rng, OracleBudget& budget,
                                   qsim::QftBackend backend) {
  if (oracle.arity == 0) throw ParameterError("oracle must take at least one input");
  if (oracle.c < 2) throw ParameterError("oracle output alphabet must have at least 2 symbols");
  const RegisterLayout inputs = RegisterLayout::uniform(oracle.q, oracle.arity);
  const StateVector kickback = qsim::phase_eigenstate(oracle.c);
  StateVector state = qsim::uniform_tensor(inputs, kickback);

  budget.charge();
  state = qsim::apply_additive_oracle(std::move(state), oracle.arity, oracle.f);

  state = qsim::discard_register(state, oracle.arity, kickback);
  state = qsim::qft(std::move(state), first_registers(oracle.arity), backend);
  return qsim::measure_all(state, rng);
}

std::optional<ZqVector> attack_lwe_dec(const LweDecOracle& dec, std::uint64_t q, std::size_t n,
                                       Rng& rng, OracleBudget& budget,
                                       qsim::QftBackend backend) {
  if (n == 0) throw ParameterError("LWE dimension must be at least 1");
  const AdditiveOracle oracle{n + 1, q, 2, [&dec, n](std::span<const std::uint64_t> x) {
                                return static_cast<std::uint64_t>(dec(x.first(n), x[n]));
                              }};
  const auto outcome = bv_lrf_attack(oracle, rng, budget, backend);
  if (outcome[n] != 1) return std::nullopt;
  ZqVector key(q, n);
  for (std::size_t i = 0; i < n; ++i) key.set(i, -static_cast<std::int64_t>(outcome[i]));
  return key;
}

std::vector<ZqVector> attack_frodo(const FrodoRowOracle& dec, const schemes::FrodoParams& params,
                                   std::span<const std::size_t> columns, Rng& rng,
                                   OracleBudget& budget, qsim::QftBackend backend) {
  if (columns.empty()) throw ParameterError("choose at least one column");
  if (columns.size() > params.m_bar) {
    throw ParameterError("at most m_bar = " + std::to_string(params.m_bar) +
                         " columns per query");
  }
  for (std::size_t j : columns) {
    if (j >= params.n_bar) throw ParameterError("column index " + std::to_string(j) + " out of range");
  }
  const std::uint64_t q = params.q();
  const std::uint64_t c = params.message_modulus();
  const std::size_t n = params.n;
  const std::size_t n_bar = params.n_bar;

  const RegisterLayout ciphertext = RegisterLayout::uniform(q, n);
  const StateVector kickback = qsim::phase_eigenstate(c);
  const StateVector flat = qsim::uniform_superposition(RegisterLayout::uniform(c, 1));

  // Each row's decryption depends only on its own C1 row, so the answers for
  // every basis row are tabulated once.
  std::vector<std::vector<Residue>> answers(ciphertext.total());
  std::vector<std::uint64_t> row(n);
  for (std::size_t idx = 0; idx < ciphertext.total(); ++idx) {
    for (std::size_t i = 0; i < n; ++i) row[i] = ciphertext.digit(idx, i);
    answers[idx] = dec(row);
    if (answers[idx].size() != n_bar) throw ShapeError("Frodo oracle returned a wrong-size row");
  }

  budget.charge();
  std::vector<ZqVector> recovered;
  recovered.reserve(columns.size());
  for (std::size_t j : columns) {
    StateVector state = qsim::uniform_superposition(ciphertext);
    for (std::size_t t = 0; t < n_bar; ++t) state = qsim::tensor(state, t == j ? kickback : flat);
    for (std::size_t t = 0; t < n_bar; ++t) {
      const std::vector<std::size_t> inputs = first_registers(n);
      state = qsim::apply_additive_oracle(
          std::move(state), inputs, n + t,
          [&answers, q, t](std::span<const std::uint64_t> x) {
            return answers[tuple_index(x, q)][t];
          });
    }
    for (std::size_t t = n_bar; t-- > 0;) {
      state = qsim::discard_register(state, n + t, t == j ? kickback : flat);
    }
    // Decryption subtracts C1 S, so the kickback phase carries +<c, s^j>.
    state = qsim::inverse_qft(std::move(state), first_registers(n), backend);
    const auto outcome = qsim::measure_all(state, rng);
    recovered.emplace_back(q, std::vector<Residue>(outcome.begin(), outcome.end()));
  }
  return recovered;
}

std::optional<RingPoly> attack_ringlwe(const RingDecOracle& dec, std::uint64_t q, std::size_t n,
                                       Rng& rng, OracleBudget& budget,
                                       qsim::QftBackend backend) {
  if (!is_power_of_two(n)) throw ParameterError("ring dimension must be a power of two");
  const AdditiveOracle oracle{n + 1, q, 2, [&dec, n](std::span<const std::uint64_t> x) {
                                return static_cast<std::uint64_t>(dec(x.first(n), x[n]));
                              }};
  const auto outcome = bv_lrf_attack(oracle, rng, budget, backend);
  if (outcome[n] != 1) return std::nullopt;
  std::vector<Residue> s(n);
  s[0] = neg_mod(outcome[0], q);
  for (std::size_t j = 1; j < n; ++j) s[j] = outcome[n - j];
  return RingPoly(q, std::move(s));
}

ZqVector attack_randomness_access(const RaEncOracle& enc, std::uint64_t q, std::size_t n,
                                  Rng& rng, OracleBudget& budget, qsim::QftBackend backend) {
  if (n == 0) throw ParameterError("LWE dimension must be at least 1");
  // Registers: message bit, a_1..a_n, response.
  const StateVector message = qsim::basis_state(RegisterLayout({2}), std::vector<std::uint64_t>{0});
  const StateVector kickback = qsim::phase_eigenstate(q);
  StateVector state = qsim::tensor(
      qsim::tensor(message, qsim::uniform_superposition(RegisterLayout::uniform(q, n))), kickback);

  budget.charge();
  state = qsim::apply_additive_oracle(std::move(state), n + 1,
                                      [&enc, n](std::span<const std::uint64_t> x) {
                                        return enc(static_cast<int>(x[0]), x.subspan(1, n));
                                      });

  state = qsim::discard_register(state, n + 1, kickback);
  const auto a_regs = first_registers(n, 1);
  state = qsim::qft(std::move(state), a_regs, backend);
  const auto outcome = qsim::measure(state, a_regs, rng);
  return ZqVector(q, std::vector<Residue>(outcome.begin(), outcome.end()));
}

}  // namespace qlwe::attacks
