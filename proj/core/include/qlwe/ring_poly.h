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

#ifndef QLWE_RING_POLY_H_
#define QLWE_RING_POLY_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "qlwe/zq.h"

namespace qlwe {

// Element of Z_q[x]/(x^n + 1), n a power of two. Coefficient of x^0 first.
class RingPoly {
 public:
  RingPoly(std::uint64_t q, std::size_t n);
  RingPoly(std::uint64_t q, std::vector<Residue> coefficients);
  RingPoly(std::uint64_t q, std::initializer_list<Residue> coefficients)
      : RingPoly(q, std::vector<Residue>(coefficients)) {}

  static RingPoly constant(std::uint64_t q, std::size_t n, Residue value);
  static RingPoly from_vector(const ZqVector& v);

  std::uint64_t modulus() const { return q_; }
  std::size_t degree_bound() const { return coefficients_.size(); }
  Residue operator[](std::size_t i) const { return coefficients_[i]; }
  std::span<const Residue> coefficients() const { return coefficients_; }
  ZqVector to_vector() const { return ZqVector(q_, coefficients_); }

  RingPoly operator+(const RingPoly& other) const;
  RingPoly operator-(const RingPoly& other) const;

  friend bool operator==(const RingPoly&, const RingPoly&) = default;

 private:
  std::uint64_t q_;
  std::vector<Residue> coefficients_;
};

// Product in Z_q[x]/(x^n + 1): schoolbook convolution with x^n folded to -1.
RingPoly negacyclic_mul(const RingPoly& lhs, const RingPoly& rhs);

// Constant coefficient of lhs * rhs without forming the full product:
//   (u s)_0 = u_0 s_0 - sum_{j>=1} u_j s_{n-j}.
Residue negacyclic_constant_term(const RingPoly& u, const RingPoly& s);

bool is_power_of_two(std::size_t n);

}  // namespace qlwe

#endif  // QLWE_RING_POLY_H_
