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

#ifndef QLWE_ZQ_H_
#define QLWE_ZQ_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace qlwe {

// A canonical representative in {0, ..., q-1}. Centered values only appear
// transiently (centered_abs, noise samplers).
using Residue = std::uint64_t;

// 128-bit accumulator for products of residues.
__extension__ typedef unsigned __int128 WideUint;

// Largest supported modulus. Keeps every product of two residues inside
// 128-bit intermediate arithmetic with room for accumulation.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

// Throws ParameterError unless 2 <= q <= kMaxModulus.
void check_modulus(std::uint64_t q);

// x mod q in {0, ..., q-1}; correct for negative x.
Residue mod_reduce(std::int64_t x, std::uint64_t q);

// Distance of x from 0 on the cycle Z_q, i.e. min(x, q - x).
std::uint64_t centered_abs(Residue x, std::uint64_t q);

// Signed representative of x in (-q/2, q/2].
std::int64_t centered(Residue x, std::uint64_t q);

inline Residue add_mod(Residue x, Residue y, std::uint64_t q) {
  const Residue s = x + y;
  return s >= q ? s - q : s;
}
inline Residue sub_mod(Residue x, Residue y, std::uint64_t q) {
  return x >= y ? x - y : x + q - y;
}
// x mod q, through a 32-bit division when x fits (several times cheaper than
// a 64-bit one on common x86 parts).
inline Residue reduce(std::uint64_t x, std::uint64_t q) {
  if ((x | q) <= 0xFFFFFFFFu) {
    return static_cast<std::uint32_t>(x) % static_cast<std::uint32_t>(q);
  }
  return x % q;
}

// Reduction by a modulus fixed ahead of time, for loops that reduce many
// values by the same q. Values below 2^32 take a division-free path (Lemire,
// Kaser and Kurz, "Faster remainder by direct computation", 2019); wider
// values fall back to reduce().
class FixedModulus {
 public:
  explicit FixedModulus(std::uint64_t q)
      : q_(q), m_(q <= 0xFFFFFFFFu ? ~std::uint64_t{0} / q + 1 : 0) {}

  std::uint64_t value() const { return q_; }

  Residue reduce(std::uint64_t x) const {
    if (m_ != 0 && x <= 0xFFFFFFFFu) {
      const std::uint64_t low = m_ * x;
      return static_cast<Residue>((static_cast<__uint128_t>(low) * q_) >> 64);
    }
    return qlwe::reduce(x, q_);
  }

 private:
  std::uint64_t q_;
  std::uint64_t m_;
};

// Residues are below q <= 2^32, so the product fits in 64 bits.
inline Residue mul_mod(Residue x, Residue y, std::uint64_t q) { return x * y % q; }
inline Residue neg_mod(Residue x, std::uint64_t q) { return x == 0 ? 0 : q - x; }

std::uint64_t gcd(std::uint64_t x, std::uint64_t y);

// Euler's totient by trial factorization. totient(1) == 1.
std::uint64_t totient(std::uint64_t q);

// A fixed-length vector over Z_q.
class ZqVector {
 public:
  ZqVector(std::uint64_t q, std::size_t length);
  // Entries must already be canonical residues.
  ZqVector(std::uint64_t q, std::vector<Residue> entries);
  ZqVector(std::uint64_t q, std::initializer_list<Residue> entries)
      : ZqVector(q, std::vector<Residue>(entries)) {}

  // Reduces arbitrary signed integers into Z_q.
  static ZqVector from_signed(std::uint64_t q, std::span<const std::int64_t> values);

  std::uint64_t modulus() const { return q_; }
  std::size_t size() const { return entries_.size(); }
  Residue operator[](std::size_t i) const { return entries_[i]; }
  void set(std::size_t i, std::int64_t value);
  std::span<const Residue> entries() const { return entries_; }

  bool is_zero() const;

  ZqVector operator+(const ZqVector& other) const;
  ZqVector operator-(const ZqVector& other) const;
  ZqVector operator-() const;
  ZqVector scaled(Residue s) const;

  friend bool operator==(const ZqVector&, const ZqVector&) = default;

 private:
  std::uint64_t q_;
  std::vector<Residue> entries_;
};

// Sum_i x_i y_i mod q. Throws ShapeError on length or modulus mismatch.
Residue inner_product(const ZqVector& x, const ZqVector& y);

// Inner product of raw residue spans under modulus q (hot path for oracles).
Residue inner_product(std::span<const Residue> x, std::span<const Residue> y,
                      std::uint64_t q);

// True iff some entry is coprime to q.
bool has_unit_entry(const ZqVector& k);

// Row-major matrix over Z_q.
class ZqMatrix {
 public:
  ZqMatrix(std::uint64_t q, std::size_t rows, std::size_t cols);
  ZqMatrix(std::uint64_t q, std::size_t rows, std::size_t cols,
           std::vector<Residue> entries);

  std::uint64_t modulus() const { return q_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Residue at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t value);
  std::span<const Residue> entries() const { return entries_; }
  std::span<const Residue> row(std::size_t r) const {
    return std::span<const Residue>(entries_).subspan(r * cols_, cols_);
  }
  ZqVector row_vector(std::size_t r) const;
  ZqVector column_vector(std::size_t c) const;

  ZqMatrix operator*(const ZqMatrix& rhs) const;
  ZqMatrix operator+(const ZqMatrix& rhs) const;
  ZqMatrix operator-(const ZqMatrix& rhs) const;
  ZqVector operator*(const ZqVector& v) const;  // M v
  ZqVector left_multiply(const ZqVector& v) const;  // v^T M

  bool is_zero() const;
  friend bool operator==(const ZqMatrix&, const ZqMatrix&) = default;

 private:
  std::uint64_t q_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> entries_;
};

}  // namespace qlwe

#endif  // QLWE_ZQ_H_
