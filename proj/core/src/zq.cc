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

#include "qlwe/zq.h"

#include <algorithm>
#include <string>

#include "qlwe/errors.h"

namespace qlwe {

void check_modulus(std::uint64_t q) {
  if (q < 2 || q > kMaxModulus) {
    throw ParameterError("modulus must lie in [2, 2^32], got " + std::to_string(q));
  }
}

Residue mod_reduce(std::int64_t x, std::uint64_t q) {
  if (q < 2) throw ParameterError("modulus must be at least 2");
  if (x >= 0) return static_cast<Residue>(x) % q;
  // -(x + 1) avoids overflow at INT64_MIN.
  const Residue r = static_cast<Residue>(-(x + 1)) % q;
  return q - 1 - r;
}

std::uint64_t centered_abs(Residue x, std::uint64_t q) {
  if (x >= q) throw ParameterError("centered_abs: value not reduced");
  return std::min(x, q - x);
}

std::int64_t centered(Residue x, std::uint64_t q) {
  if (x >= q) throw ParameterError("centered: value not reduced");
  return x > q / 2 ? static_cast<std::int64_t>(x) - static_cast<std::int64_t>(q)
                   : static_cast<std::int64_t>(x);
}

std::uint64_t gcd(std::uint64_t x, std::uint64_t y) {
  while (y != 0) {
    const std::uint64_t t = x % y;
    x = y;
    y = t;
  }
  return x;
}

std::uint64_t totient(std::uint64_t q) {
  if (q == 0) throw ParameterError("totient: q must be positive");
  std::uint64_t result = q;
  std::uint64_t m = q;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

ZqVector::ZqVector(std::uint64_t q, std::size_t length) : q_(q), entries_(length, 0) {
  check_modulus(q);
}

ZqVector::ZqVector(std::uint64_t q, std::vector<Residue> entries)
    : q_(q), entries_(std::move(entries)) {
  check_modulus(q);
  for (Residue e : entries_) {
    if (e >= q) throw ParameterError("ZqVector entry " + std::to_string(e) + " not below modulus");
  }
}

ZqVector ZqVector::from_signed(std::uint64_t q, std::span<const std::int64_t> values) {
  std::vector<Residue> out(values.size());
  std::transform(values.begin(), values.end(), out.begin(),
                 [q](std::int64_t v) { return mod_reduce(v, q); });
  return ZqVector(q, std::move(out));
}

void ZqVector::set(std::size_t i, std::int64_t value) { entries_.at(i) = mod_reduce(value, q_); }

bool ZqVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Residue e) { return e == 0; });
}

namespace {

void require_same_shape(const ZqVector& x, const ZqVector& y) {
  if (x.modulus() != y.modulus() || x.size() != y.size()) {
    throw ShapeError("ZqVector shape mismatch: (" + std::to_string(x.size()) + " mod " +
                     std::to_string(x.modulus()) + ") vs (" + std::to_string(y.size()) +
                     " mod " + std::to_string(y.modulus()) + ")");
  }
}

}  // namespace

ZqVector ZqVector::operator+(const ZqVector& other) const {
  require_same_shape(*this, other);
  std::vector<Residue> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = add_mod(entries_[i], other.entries_[i], q_);
  return ZqVector(q_, std::move(out));
}

ZqVector ZqVector::operator-(const ZqVector& other) const {
  require_same_shape(*this, other);
  std::vector<Residue> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = sub_mod(entries_[i], other.entries_[i], q_);
  return ZqVector(q_, std::move(out));
}

ZqVector ZqVector::operator-() const {
  std::vector<Residue> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = neg_mod(entries_[i], q_);
  return ZqVector(q_, std::move(out));
}

ZqVector ZqVector::scaled(Residue s) const {
  std::vector<Residue> out(size());
  const Residue sr = s % q_;
  for (std::size_t i = 0; i < size(); ++i) out[i] = mul_mod(entries_[i], sr, q_);
  return ZqVector(q_, std::move(out));
}

Residue inner_product(const ZqVector& x, const ZqVector& y) {
  require_same_shape(x, y);
  return inner_product(x.entries(), y.entries(), x.modulus());
}

Residue inner_product(std::span<const Residue> x, std::span<const Residue> y, std::uint64_t q) {
  if (x.size() != y.size()) throw ShapeError("inner_product: length mismatch");
  // Products of residues fit in 64 bits; reduce only when the next one could
  // overflow the accumulator.
  const std::uint64_t headroom = ~std::uint64_t{0} - (q - 1) * (q - 1);
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] >= q || y[i] >= q) throw ParameterError("inner_product: entry not reduced");
    if (acc > headroom) acc = reduce(acc, q);
    acc += x[i] * y[i];
  }
  return reduce(acc, q);
}

bool has_unit_entry(const ZqVector& k) {
  const auto q = k.modulus();
  return std::any_of(k.entries().begin(), k.entries().end(),
                     [q](Residue e) { return gcd(e, q) == 1; });
}

ZqMatrix::ZqMatrix(std::uint64_t q, std::size_t rows, std::size_t cols)
    : q_(q), rows_(rows), cols_(cols), entries_(rows * cols, 0) {
  check_modulus(q);
}

ZqMatrix::ZqMatrix(std::uint64_t q, std::size_t rows, std::size_t cols,
                   std::vector<Residue> entries)
    : q_(q), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  check_modulus(q);
  if (entries_.size() != rows * cols) throw ShapeError("ZqMatrix: entry count != rows*cols");
  for (Residue e : entries_) {
    if (e >= q) throw ParameterError("ZqMatrix entry not below modulus");
  }
}

void ZqMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
  if (r >= rows_ || c >= cols_) throw ShapeError("ZqMatrix::set out of range");
  entries_[r * cols_ + c] = mod_reduce(value, q_);
}

ZqVector ZqMatrix::row_vector(std::size_t r) const {
  const auto s = row(r);
  return ZqVector(q_, std::vector<Residue>(s.begin(), s.end()));
}

ZqVector ZqMatrix::column_vector(std::size_t c) const {
  std::vector<Residue> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return ZqVector(q_, std::move(out));
}

ZqMatrix ZqMatrix::operator*(const ZqMatrix& rhs) const {
  if (q_ != rhs.q_ || cols_ != rhs.rows_) throw ShapeError("ZqMatrix product shape mismatch");
  ZqMatrix out(q_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < rhs.cols_; ++j) {
      WideUint acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) {
        acc += static_cast<WideUint>(at(i, k)) * rhs.at(k, j);
      }
      out.entries_[i * rhs.cols_ + j] = static_cast<Residue>(acc % q_);
    }
  }
  return out;
}

ZqMatrix ZqMatrix::operator+(const ZqMatrix& rhs) const {
  if (q_ != rhs.q_ || rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw ShapeError("ZqMatrix sum shape mismatch");
  }
  ZqMatrix out(q_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = add_mod(entries_[i], rhs.entries_[i], q_);
  }
  return out;
}

ZqMatrix ZqMatrix::operator-(const ZqMatrix& rhs) const {
  if (q_ != rhs.q_ || rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw ShapeError("ZqMatrix difference shape mismatch");
  }
  ZqMatrix out(q_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = sub_mod(entries_[i], rhs.entries_[i], q_);
  }
  return out;
}

ZqVector ZqMatrix::operator*(const ZqVector& v) const {
  if (q_ != v.modulus() || cols_ != v.size()) throw ShapeError("ZqMatrix*vector shape mismatch");
  std::vector<Residue> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = inner_product(row(i), v.entries(), q_);
  return ZqVector(q_, std::move(out));
}

ZqVector ZqMatrix::left_multiply(const ZqVector& v) const {
  if (q_ != v.modulus() || rows_ != v.size()) throw ShapeError("vector*ZqMatrix shape mismatch");
  std::vector<WideUint> acc(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < cols_; ++j) {
      acc[j] += static_cast<WideUint>(v[i]) * at(i, j);
    }
  }
  std::vector<Residue> out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = static_cast<Residue>(acc[j] % q_);
  return ZqVector(q_, std::move(out));
}

bool ZqMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Residue e) { return e == 0; });
}

}  // namespace qlwe
