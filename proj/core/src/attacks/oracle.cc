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

#include "qlwe/attacks/oracle.h"

#include <optional>
#include <string>
#include <utility>

#include "qlwe/errors.h"
#include "qlwe/qsim/register_layout.h"
#include "qlwe/schemes/lwe.h"
#include "qlwe/schemes/ring_lwe.h"

namespace qlwe::attacks {

namespace {

void check_bit(int m) {
  if (m != 0 && m != 1) throw ParameterError("message must be a single bit");
}

void check_shape(const ZqVector& key, std::span<const Residue> a) {
  if (a.size() != key.size()) throw ShapeError("query length does not match key");
}

}  // namespace

void OracleBudget::charge() {
  if (consumed_ >= allowed_) {
    throw BudgetExhausted("oracle budget of " + std::to_string(allowed_) + " call(s) exhausted");
  }
  ++consumed_;
}

LweDecOracle ske_dec_oracle(const ZqVector& key) {
  return [key](std::span<const Residue> a, Residue c) {
    check_shape(key, a);
    return schemes::lwe_decrypt(key.entries(), a, c, key.modulus());
  };
}

LweDecOracle pke_dec_oracle(const ZqVector& sk) {
  return [sk](std::span<const Residue> a, Residue c) {
    check_shape(sk, a);
    return schemes::pke_decrypt(sk, schemes::LweCiphertext{ZqVector(sk.modulus(),
                                                                     {a.begin(), a.end()}),
                                                            c % sk.modulus()});
  };
}

RingDecOracle ringlwe_dec_oracle(const RingPoly& s) {
  return [s, modulus = FixedModulus(s.modulus())](std::span<const Residue> u, Residue v0) {
    return schemes::ringlwe_decrypt_constant(s.coefficients(), u, v0, modulus);
  };
}

FrodoRowOracle frodo_row_oracle(const schemes::FrodoParams& params, const ZqMatrix& s) {
  schemes::FrodoParams row = params;
  row.m_bar = 1;
  return [row, s](std::span<const Residue> c) {
    if (c.size() != row.n) throw ShapeError("Frodo row has the wrong length");
    schemes::FrodoCiphertext ct{ZqMatrix(row.q(), 1, row.n, {c.begin(), c.end()}),
                                ZqMatrix(row.q(), 1, row.n_bar)};
    const ZqMatrix m = schemes::frodo_decrypt(row, s, ct);
    return std::vector<Residue>(m.entries().begin(), m.entries().end());
  };
}

RaEncOracle ra_shared_error_oracle(const ZqVector& key, std::int64_t e) {
  const std::uint64_t q = key.modulus();
  const Residue shift = mod_reduce(e, q);
  return [key, q, shift](int m, std::span<const Residue> a) {
    check_bit(m);
    check_shape(key, a);
    Residue c = inner_product(a, key.entries(), q);
    c = add_mod(c, static_cast<Residue>(m) * (q / 2), q);
    return add_mod(c, shift, q);
  };
}

RaEncOracle ra_iid_error_oracle(const ZqVector& key, const ErrorDistribution& dist,
                                std::uint64_t seed) {
  const std::uint64_t q = key.modulus();
  std::size_t entries = 2;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (entries > qsim::max_amplitudes() / q) {
      throw ResourceError("i.i.d. error table exceeds the amplitude cap");
    }
    entries *= q;
  }
  struct Table {
    Rng rng;
    std::vector<std::optional<Residue>> errors;
  };
  auto table = std::make_shared<Table>(Table{Rng(seed), std::vector<std::optional<Residue>>(entries)});
  return [key, q, dist, table](int m, std::span<const Residue> a) {
    check_bit(m);
    check_shape(key, a);
    std::size_t index = static_cast<std::size_t>(m);
    for (Residue x : a) index = index * q + x % q;
    auto& slot = table->errors[index];
    if (!slot) slot = sample_error(dist, table->rng);
    Residue c = inner_product(a, key.entries(), q);
    c = add_mod(c, static_cast<Residue>(m) * (q / 2), q);
    return add_mod(c, *slot, q);
  };
}

RaFullOracle ra_full_control_oracle(const ZqVector& key) {
  const std::uint64_t q = key.modulus();
  return [key, q](int m, std::span<const Residue> a, std::int64_t e) {
    check_bit(m);
    check_shape(key, a);
    Residue c = inner_product(a, key.entries(), q);
    c = add_mod(c, static_cast<Residue>(m) * (q / 2), q);
    return add_mod(c, mod_reduce(e, q), q);
  };
}

}  // namespace qlwe::attacks
