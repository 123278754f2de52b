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

#ifndef QLWE_QSIM_REGISTER_LAYOUT_H_
#define QLWE_QSIM_REGISTER_LAYOUT_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qlwe::qsim {

inline constexpr std::size_t kDefaultMaxAmplitudes = std::size_t{1} << 24;

// Name of the environment variable that overrides the amplitude cap.
inline constexpr const char* kMaxAmplitudesEnv = "QLWE_MAX_AMPLITUDES";

// Current cap on the number of amplitudes in any layout. Initialized from
// QLWE_MAX_AMPLITUDES when set, otherwise kDefaultMaxAmplitudes.
std::size_t max_amplitudes();
void set_max_amplitudes(std::size_t cap);

// Ordered registers over Z_{q_1} x ... x Z_{q_m}; basis states are indexed
// row-major (last register fastest).
class RegisterLayout {
 public:
  // Throws ParameterError for a register of dimension < 2 and ResourceError
  // when the product of dimensions exceeds max_amplitudes().
  explicit RegisterLayout(std::vector<std::uint64_t> dims);

  // `count` registers of dimension q.
  static RegisterLayout uniform(std::uint64_t q, std::size_t count);

  std::size_t num_registers() const { return dims_.size(); }
  std::uint64_t dim(std::size_t r) const { return dims_.at(r); }
  std::span<const std::uint64_t> dims() const { return dims_; }
  std::size_t total() const { return total_; }
  // Index distance between consecutive values of register r.
  std::size_t stride(std::size_t r) const { return strides_.at(r); }

  std::size_t index_of(std::span<const std::uint64_t> tuple) const;
  std::vector<std::uint64_t> tuple_of(std::size_t index) const;

  // Register value of `index` at register r.
  std::uint64_t digit(std::size_t index, std::size_t r) const {
    return (index / strides_[r]) % dims_[r];
  }

  RegisterLayout concat(const RegisterLayout& other) const;
  RegisterLayout without(std::size_t r) const;

  friend bool operator==(const RegisterLayout& a, const RegisterLayout& b) {
    return a.dims_ == b.dims_;
  }

 private:
  std::vector<std::uint64_t> dims_;
  std::vector<std::size_t> strides_;
  std::size_t total_ = 1;
};

}  // namespace qlwe::qsim

#endif  // QLWE_QSIM_REGISTER_LAYOUT_H_
