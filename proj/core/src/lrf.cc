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

#include "qlwe/lrf.h"

#include <algorithm>
#include <string>

#include "qlwe/errors.h"

namespace qlwe {

LrfParams::LrfParams(std::uint64_t q, std::size_t n, Residue a, std::uint64_t b)
    : q_(q), n_(n), a_(a), b_(b) {
  check_modulus(q);
  if (n == 0) throw ParameterError("LRF dimension n must be at least 1");
  if (a >= q) throw ParameterError("LRF offset a must be a residue mod q");
  if (b < 1 || b >= q) {
    throw ParameterError("LRF block size b must lie in [1, q-1], got " + std::to_string(b));
  }
  c_ = (q + b - 1) / b;
  d_ = c_ * b - q;
}

std::uint64_t block_index(Residue z, const LrfParams& params) {
  if (z >= params.q()) throw ParameterError("block_index: value not reduced");
  const Residue shifted = sub_mod(z, params.a(), params.q());
  return std::min(shifted / params.b(), params.c() - 1);
}

std::uint64_t lrf_eval(const ZqVector& x, const ZqVector& key, const LrfParams& params) {
  if (x.modulus() != params.q() || key.modulus() != params.q()) {
    throw ShapeError("lrf_eval: modulus mismatch");
  }
  if (x.size() != params.n() || key.size() != params.n()) {
    throw ShapeError("lrf_eval: dimension mismatch");
  }
  return block_index(inner_product(x, key), params);
}

std::uint64_t lrf_eval(std::span<const Residue> x, std::span<const Residue> key,
                       const LrfParams& params) {
  if (x.size() != params.n() || key.size() != params.n()) {
    throw ShapeError("lrf_eval: dimension mismatch");
  }
  return block_index(inner_product(x, key, params.q()), params);
}

}  // namespace qlwe
