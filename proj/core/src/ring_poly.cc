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

#include "qlwe/ring_poly.h"

#include <string>
#include <utility>

#include "qlwe/errors.h"

namespace qlwe {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

namespace {

void check_degree(std::size_t n) {
  if (!is_power_of_two(n)) {
    throw ParameterError("ring degree must be a power of two, got " + std::to_string(n));
  }
}

void require_same_ring(const RingPoly& a, const RingPoly& b) {
  if (a.modulus() != b.modulus() || a.degree_bound() != b.degree_bound()) {
    throw ShapeError("RingPoly ring mismatch");
  }
}

}  // namespace

RingPoly::RingPoly(std::uint64_t q, std::size_t n) : q_(q), coefficients_(n, 0) {
  check_modulus(q);
  check_degree(n);
}

RingPoly::RingPoly(std::uint64_t q, std::vector<Residue> coefficients)
    : q_(q), coefficients_(std::move(coefficients)) {
  check_modulus(q);
  check_degree(coefficients_.size());
  for (Residue c : coefficients_) {
    if (c >= q) throw ParameterError("RingPoly coefficient not below modulus");
  }
}

RingPoly RingPoly::constant(std::uint64_t q, std::size_t n, Residue value) {
  RingPoly p(q, n);
  p.coefficients_[0] = value % q;
  return p;
}

RingPoly RingPoly::from_vector(const ZqVector& v) {
  return RingPoly(v.modulus(), std::vector<Residue>(v.entries().begin(), v.entries().end()));
}

RingPoly RingPoly::operator+(const RingPoly& other) const {
  require_same_ring(*this, other);
  RingPoly out(q_, degree_bound());
  for (std::size_t i = 0; i < degree_bound(); ++i) {
    out.coefficients_[i] = add_mod(coefficients_[i], other.coefficients_[i], q_);
  }
  return out;
}

RingPoly RingPoly::operator-(const RingPoly& other) const {
  require_same_ring(*this, other);
  RingPoly out(q_, degree_bound());
  for (std::size_t i = 0; i < degree_bound(); ++i) {
    out.coefficients_[i] = sub_mod(coefficients_[i], other.coefficients_[i], q_);
  }
  return out;
}

RingPoly negacyclic_mul(const RingPoly& lhs, const RingPoly& rhs) {
  require_same_ring(lhs, rhs);
  const std::size_t n = lhs.degree_bound();
  const std::uint64_t q = lhs.modulus();
  std::vector<Residue> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Residue t = mul_mod(lhs[i], rhs[j], q);
      const std::size_t k = i + j;
      if (k < n) {
        out[k] = add_mod(out[k], t, q);
      } else {
        out[k - n] = sub_mod(out[k - n], t, q);
      }
    }
  }
  return RingPoly(q, std::move(out));
}

Residue negacyclic_constant_term(const RingPoly& u, const RingPoly& s) {
  require_same_ring(u, s);
  const std::size_t n = u.degree_bound();
  const std::uint64_t q = u.modulus();
  Residue acc = mul_mod(u[0], s[0], q);
  for (std::size_t j = 1; j < n; ++j) acc = sub_mod(acc, mul_mod(u[j], s[n - j], q), q);
  return acc;
}

}  // namespace qlwe
