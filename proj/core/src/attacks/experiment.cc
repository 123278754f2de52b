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

#include "qlwe/attacks/experiment.h"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <numeric>
#include <string>
#include <utility>

#include "qlwe/attacks/classical.h"
#include "qlwe/attacks/oracle.h"
#include "qlwe/attacks/quantum.h"
#include "qlwe/errors.h"
#include "qlwe/lrf.h"
#include "qlwe/noise.h"
#include "qlwe/qsim/register_layout.h"
#include "qlwe/ring_poly.h"
#include "qlwe/schemes/lwe.h"
#include "qlwe/schemes/ring_lwe.h"

namespace qlwe::attacks {

namespace {

struct NamedKind {
  AttackKind kind;
  std::string_view name;
};

constexpr std::array<NamedKind, 9> kNames = {{
    {AttackKind::kLrf, "lrf"},
    {AttackKind::kSke, "ske"},
    {AttackKind::kPke, "pke"},
    {AttackKind::kFrodo, "frodo"},
    {AttackKind::kRingLwe, "ringlwe"},
    {AttackKind::kRaShared, "ra-shared"},
    {AttackKind::kRaIid, "ra-iid"},
    {AttackKind::kClassicalDec, "classical-dec"},
    {AttackKind::kClassicalRa, "classical-ra"},
}};

std::vector<Residue> to_residues(const ZqVector& v) { return {v.entries().begin(), v.entries().end()}; }

ZqVector uniform_unit_key(std::uint64_t q, std::size_t n, Rng& rng) {
  while (true) {
    ZqVector key = sample_uniform_vector(q, n, rng);
    if (has_unit_entry(key)) return key;
  }
}

// Amplitudes of the largest state the attack builds.
std::uint64_t state_size(const AttackParams& p) {
  auto power = [](std::uint64_t base, std::size_t exp) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
      if (out > qsim::max_amplitudes() / base + 1) return qsim::max_amplitudes() + 1;
      out *= base;
    }
    return out;
  };
  auto product = [](std::uint64_t x, std::uint64_t y) {
    const std::uint64_t cap = qsim::max_amplitudes() + 1;
    return x > cap / y ? cap : x * y;
  };
  switch (p.kind) {
    case AttackKind::kLrf:
      return product(power(p.q, p.n), LrfParams(p.q, p.n, p.a, p.effective_b()).c());
    case AttackKind::kSke:
    case AttackKind::kPke:
    case AttackKind::kRingLwe:
      return product(power(p.q, p.n + 1), 2);
    case AttackKind::kFrodo:
      return product(power(p.q, p.n), power(std::uint64_t{1} << p.frodo_bits, p.n_bar));
    case AttackKind::kRaShared:
    case AttackKind::kRaIid:
      return product(product(power(p.q, p.n), p.q), 2);
    case AttackKind::kClassicalDec:
    case AttackKind::kClassicalRa:
      return 0;
  }
  return 0;
}

}  // namespace

std::string_view attack_name(AttackKind kind) {
  for (const auto& entry : kNames) {
    if (entry.kind == kind) return entry.name;
  }
  throw ParameterError("unknown attack kind");
}

AttackKind parse_attack_kind(std::string_view name) {
  for (const auto& entry : kNames) {
    if (entry.name == name) return entry.kind;
  }
  throw ParameterError("unknown scheme/attack '" + std::string(name) + "'");
}

const std::vector<AttackKind>& all_attack_kinds() {
  static const std::vector<AttackKind> kinds = [] {
    std::vector<AttackKind> out;
    for (const auto& entry : kNames) out.push_back(entry.kind);
    return out;
  }();
  return kinds;
}

bool is_quantum(AttackKind kind) {
  return kind != AttackKind::kClassicalDec && kind != AttackKind::kClassicalRa;
}

std::uint64_t AttackParams::effective_b() const { return b == 0 ? (q + 1) / 2 : b; }

std::uint64_t AttackParams::effective_eta() const {
  if (eta) return *eta;
  return kind == AttackKind::kSke ? default_eta(q) : 1;
}

void AttackParams::validate() const {
  check_modulus(q);
  if (n == 0) throw ParameterError("n must be at least 1");
  switch (kind) {
    case AttackKind::kLrf:
      LrfParams(q, n, a, effective_b());
      break;
    case AttackKind::kFrodo: {
      if (!std::has_single_bit(q)) throw ParameterError("Frodo needs q a power of two");
      const auto log_q = static_cast<unsigned>(std::countr_zero(q));
      schemes::FrodoParams::make(log_q, frodo_bits, n, n_bar, m_bar, effective_eta(), frodo_decode);
      break;
    }
    case AttackKind::kRingLwe:
      schemes::RingLweParams::make(q, n, effective_eta());
      break;
    case AttackKind::kSke:
    case AttackKind::kPke:
    case AttackKind::kRaShared:
    case AttackKind::kRaIid:
      ErrorDistribution::bounded_uniform(q, effective_eta());
      break;
    case AttackKind::kClassicalDec:
    case AttackKind::kClassicalRa:
      break;
  }
  if (state_size(*this) > qsim::max_amplitudes()) {
    throw ResourceError("attack state would exceed the cap of " +
                        std::to_string(qsim::max_amplitudes()) + " amplitudes");
  }
}

AttackReport run_trial(const AttackParams& p, std::uint64_t seed) {
  p.validate();
  const auto start = std::chrono::steady_clock::now();
  Rng rng(seed);
  OracleBudget budget(1);
  AttackReport report;
  report.attack = std::string(attack_name(p.kind));
  report.seed = seed;
  const std::uint64_t eta = p.effective_eta();

  switch (p.kind) {
    case AttackKind::kLrf: {
      const LrfParams lp(p.q, p.n, p.a, p.effective_b());
      const ZqVector key = uniform_unit_key(p.q, p.n, rng);
      const AdditiveOracle oracle{p.n, p.q, lp.c(), [&](std::span<const std::uint64_t> x) {
                                    return lrf_eval(x, key.entries(), lp);
                                  }};
      report.candidate = bv_lrf_attack(oracle, rng, budget, p.backend);
      report.truth = to_residues(key);
      break;
    }
    case AttackKind::kSke: {
      schemes::SkeParams sp{p.q, p.n, ErrorDistribution::bounded_uniform(p.q, eta)};
      const auto key = schemes::ske_keygen(sp, rng);
      report.truth = to_residues(key.k);
      if (auto k = attack_lwe_dec(ske_dec_oracle(key.k), p.q, p.n, rng, budget, p.backend)) {
        report.candidate = to_residues(*k);
      }
      break;
    }
    case AttackKind::kPke: {
      schemes::PkeParams pp = schemes::PkeParams::with_defaults(p.q, p.n);
      pp.noise = ErrorDistribution::bounded_uniform(p.q, eta);
      const auto kp = schemes::pke_keygen(pp, rng);
      report.truth = to_residues(kp.sk);
      if (auto k = attack_lwe_dec(pke_dec_oracle(kp.sk), p.q, p.n, rng, budget, p.backend)) {
        report.candidate = to_residues(*k);
      }
      break;
    }
    case AttackKind::kFrodo: {
      const auto log_q = static_cast<unsigned>(std::countr_zero(p.q));
      const auto fp = schemes::FrodoParams::make(log_q, p.frodo_bits, p.n, p.n_bar, p.m_bar, eta,
                                                 p.frodo_decode);
      const auto kp = schemes::frodo_keygen(fp, rng);
      std::vector<std::size_t> columns(std::min(p.m_bar, p.n_bar));
      std::iota(columns.begin(), columns.end(), std::size_t{0});
      const auto recovered =
          attack_frodo(frodo_row_oracle(fp, kp.s), fp, columns, rng, budget, p.backend);
      bool all = true;
      for (std::size_t i = 0; i < columns.size(); ++i) {
        const ZqVector truth = kp.s.column_vector(columns[i]);
        const bool ok = recovered[i] == truth;
        all = all && ok;
        report.column_success.push_back(ok);
        report.column_has_unit.push_back(has_unit_entry(truth));
        const auto c = to_residues(recovered[i]);
        const auto t = to_residues(truth);
        report.candidate.insert(report.candidate.end(), c.begin(), c.end());
        report.truth.insert(report.truth.end(), t.begin(), t.end());
      }
      report.quantum_queries = budget.consumed();
      report.success = all;
      report.elapsed_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return report;
    }
    case AttackKind::kRingLwe: {
      const auto rp = schemes::RingLweParams::make(p.q, p.n, eta);
      const auto kp = schemes::ringlwe_keygen(rp, rng);
      report.truth.assign(kp.s.coefficients().begin(), kp.s.coefficients().end());
      if (auto s = attack_ringlwe(ringlwe_dec_oracle(kp.s), p.q, p.n, rng, budget, p.backend)) {
        report.candidate.assign(s->coefficients().begin(), s->coefficients().end());
      }
      break;
    }
    case AttackKind::kRaShared:
    case AttackKind::kRaIid: {
      const auto dist = ErrorDistribution::bounded_uniform(p.q, eta);
      const ZqVector key = sample_uniform_vector(p.q, p.n, rng);
      const RaEncOracle enc = p.kind == AttackKind::kRaShared
                                  ? ra_shared_error_oracle(key, sample_centered_error(dist, rng))
                                  : ra_iid_error_oracle(key, dist, rng());
      report.candidate = to_residues(attack_randomness_access(enc, p.q, p.n, rng, budget, p.backend));
      report.truth = to_residues(key);
      break;
    }
    case AttackKind::kClassicalDec: {
      const ZqVector key = sample_uniform_vector(p.q, p.n, rng);
      const auto rec = classical_dec_keyrec(ske_dec_oracle(key), p.q, p.n);
      report.candidate = to_residues(rec.key);
      report.truth = to_residues(key);
      report.classical_queries = rec.queries;
      break;
    }
    case AttackKind::kClassicalRa: {
      const ZqVector key = sample_uniform_vector(p.q, p.n, rng);
      const auto rec = classical_ra_keyrec(ra_full_control_oracle(key), p.q, p.n);
      report.candidate = to_residues(rec.key);
      report.truth = to_residues(key);
      report.classical_queries = rec.queries;
      break;
    }
  }
  report.quantum_queries = budget.consumed();
  report.success = !report.candidate.empty() && report.candidate == report.truth;
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::optional<double> analytic_success(const AttackParams& p) {
  p.validate();
  switch (p.kind) {
    case AttackKind::kLrf:
      return exact_success_probability(p.q, p.effective_b());
    case AttackKind::kSke:
    case AttackKind::kPke:
    case AttackKind::kRingLwe: {
      const std::uint64_t q = p.q;
      return unit_key_success(q, 2, [q](Residue z) { return lwe_decryption_block(z, q); });
    }
    case AttackKind::kRaIid:
      return iid_error_expected_success(ErrorDistribution::bounded_uniform(p.q, p.effective_eta()),
                                        p.n);
    case AttackKind::kRaShared:
    case AttackKind::kClassicalDec:
    case AttackKind::kClassicalRa:
      return 1.0;
    case AttackKind::kFrodo:
      return std::nullopt;
  }
  return std::nullopt;
}

RateEstimate success_rate_experiment(const AttackParams& params, std::uint64_t trials,
                                     std::uint64_t seed, std::vector<AttackReport>* reports) {
  if (trials == 0) throw ParameterError("trials must be at least 1");
  params.validate();
  RateEstimate est;
  est.trials = trials;
  if (reports) reports->clear();
  for (std::uint64_t t = 0; t < trials; ++t) {
    AttackReport r = run_trial(params, derive_seed(seed, t));
    est.successes += r.success ? 1 : 0;
    est.quantum_queries = std::max(est.quantum_queries, r.quantum_queries);
    est.classical_queries = std::max(est.classical_queries, r.classical_queries);
    est.elapsed_seconds += r.elapsed_seconds;
    if (reports) reports->push_back(std::move(r));
  }
  est.rate = static_cast<double>(est.successes) / static_cast<double>(trials);
  est.wilson = wilson_interval(est.successes, trials);
  return est;
}

}  // namespace qlwe::attacks
