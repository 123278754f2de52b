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

#include "qlwe/qsim/register_layout.h"

#include <atomic>
#include <cstdlib>
#include <string>
#include <utility>

#include "qlwe/errors.h"

namespace qlwe::qsim {

namespace {

std::size_t initial_cap() {
  if (const char* env = std::getenv(kMaxAmplitudesEnv); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultMaxAmplitudes;
}

std::atomic<std::size_t>& cap_storage() {
  static std::atomic<std::size_t> cap{initial_cap()};
  return cap;
}

}  // namespace

std::size_t max_amplitudes() { return cap_storage().load(std::memory_order_relaxed); }

void set_max_amplitudes(std::size_t cap) {
  if (cap == 0) throw ParameterError("amplitude cap must be positive");
  cap_storage().store(cap, std::memory_order_relaxed);
}

RegisterLayout::RegisterLayout(std::vector<std::uint64_t> dims) : dims_(std::move(dims)) {
  const std::size_t cap = max_amplitudes();
  strides_.assign(dims_.size(), 1);
  for (std::size_t r = dims_.size(); r-- > 0;) {
    if (dims_[r] < 2) {
      throw ParameterError("register " + std::to_string(r) + " has dimension < 2");
    }
    strides_[r] = total_;
    if (dims_[r] > cap / total_) {
      throw ResourceError("state space exceeds the amplitude cap of " + std::to_string(cap) +
                          " (set " + kMaxAmplitudesEnv + " to raise it)");
    }
    total_ *= dims_[r];
  }
}

RegisterLayout RegisterLayout::uniform(std::uint64_t q, std::size_t count) {
  return RegisterLayout(std::vector<std::uint64_t>(count, q));
}

std::size_t RegisterLayout::index_of(std::span<const std::uint64_t> tuple) const {
  if (tuple.size() != dims_.size()) throw ShapeError("tuple length != register count");
  std::size_t index = 0;
  for (std::size_t r = 0; r < dims_.size(); ++r) {
    if (tuple[r] >= dims_[r]) throw ShapeError("tuple value outside register dimension");
    index += tuple[r] * strides_[r];
  }
  return index;
}

std::vector<std::uint64_t> RegisterLayout::tuple_of(std::size_t index) const {
  if (index >= total_) throw ShapeError("basis index out of range");
  std::vector<std::uint64_t> tuple(dims_.size());
  for (std::size_t r = 0; r < dims_.size(); ++r) tuple[r] = digit(index, r);
  return tuple;
}

RegisterLayout RegisterLayout::concat(const RegisterLayout& other) const {
  std::vector<std::uint64_t> dims = dims_;
  dims.insert(dims.end(), other.dims_.begin(), other.dims_.end());
  return RegisterLayout(std::move(dims));
}

RegisterLayout RegisterLayout::without(std::size_t r) const {
  if (r >= dims_.size()) throw ShapeError("register index out of range");
  std::vector<std::uint64_t> dims = dims_;
  dims.erase(dims.begin() + static_cast<std::ptrdiff_t>(r));
  return RegisterLayout(std::move(dims));
}

}  // namespace qlwe::qsim
