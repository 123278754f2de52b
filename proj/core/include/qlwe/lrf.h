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

#ifndef QLWE_LRF_H_
#define QLWE_LRF_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "qlwe/zq.h"

namespace qlwe {

// Geometry of a keyed linear rounding function.
//
// Z_q is cut into c = ceil(q/b) consecutive blocks starting at offset a.
// Blocks 0..c-2 have b elements; the last block holds the remaining
// b - d elements, where d = c*b - q is the overhang (0 <= d < b).
class LrfParams {
 public:
  // Throws ParameterError unless q >= 2, n >= 1, a < q and 1 <= b <= q-1.
  LrfParams(std::uint64_t q, std::size_t n, Residue a, std::uint64_t b);

  std::uint64_t q() const { return q_; }
  std::size_t n() const { return n_; }
  Residue a() const { return a_; }
  std::uint64_t b() const { return b_; }
  std::uint64_t c() const { return c_; }
  std::uint64_t d() const { return d_; }

  // |I_v(a, b)|.
  std::uint64_t block_size(std::uint64_t v) const { return v + 1 < c_ ? b_ : b_ - d_; }

  friend bool operator==(const LrfParams&, const LrfParams&) = default;

 private:
  std::uint64_t q_;
  std::size_t n_;
  Residue a_;
  std::uint64_t b_;
  std::uint64_t c_;
  std::uint64_t d_;
};

// The unique v with z in I_v(a, b): min(floor(((z - a) mod q) / b), c - 1).
std::uint64_t block_index(Residue z, const LrfParams& params);

// LRF_{k,a,b}(x) = block_index(<x, k>).
std::uint64_t lrf_eval(const ZqVector& x, const ZqVector& key, const LrfParams& params);
std::uint64_t lrf_eval(std::span<const Residue> x, std::span<const Residue> key,
                       const LrfParams& params);

}  // namespace qlwe

#endif  // QLWE_LRF_H_
