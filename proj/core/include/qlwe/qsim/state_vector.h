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

#ifndef QLWE_QSIM_STATE_VECTOR_H_
#define QLWE_QSIM_STATE_VECTOR_H_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <new>
#include <span>
#include <utility>
#include <vector>

#include "qlwe/qsim/register_layout.h"

namespace qlwe::qsim {

using Amplitude = std::complex<double>;

// Tolerance for every normalization and amplitude-equality check.
inline constexpr double kTolerance = 1e-9;

// Raw 64-byte aligned blocks. Large blocks released by a thread are kept in
// a small per-thread cache and handed back to the next request of the same
// size, so repeated trials on one layout do not re-fault fresh pages.
void* allocate_aligned(std::size_t bytes);
void release_aligned(void* p, std::size_t bytes) noexcept;

// 64-byte aligned storage so FFT plans made on scratch buffers stay valid for
// every state buffer.
template <typename T>
struct AlignedAllocator {
  using value_type = T;

  AlignedAllocator() = default;
  template <typename U>
  AlignedAllocator(const AlignedAllocator<U>&) noexcept {}

  T* allocate(std::size_t n) {
    if (n > static_cast<std::size_t>(-1) / sizeof(T)) throw std::bad_array_new_length();
    return static_cast<T*>(allocate_aligned(n * sizeof(T)));
  }
  void deallocate(T* p, std::size_t n) noexcept { release_aligned(p, n * sizeof(T)); }

  // Sized construction leaves amplitudes unwritten: every such buffer is
  // written in full before it is read, and skipping the zero fill saves a
  // pass over the largest states.
  template <typename U>
  void construct(U*) noexcept {}
  template <typename U, typename... Args>
  void construct(U* p, Args&&... args) {
    ::new (static_cast<void*>(p)) U(std::forward<Args>(args)...);
  }

  template <typename U>
  bool operator==(const AlignedAllocator<U>&) const noexcept {
    return true;
  }
};

using AmplitudeBuffer = std::vector<Amplitude, AlignedAllocator<Amplitude>>;

// Dense pure state over a RegisterLayout.
class StateVector {
 public:
  // All-zero amplitudes; callers fill them in before use.
  explicit StateVector(RegisterLayout layout);
  // Throws ShapeError if the amplitude count does not match the layout.
  StateVector(RegisterLayout layout, AmplitudeBuffer amplitudes);

  const RegisterLayout& layout() const { return layout_; }
  std::size_t size() const { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  std::span<Amplitude> mutable_amplitudes() { return amplitudes_; }
  Amplitude amplitude(std::span<const std::uint64_t> tuple) const {
    return amplitudes_[layout_.index_of(tuple)];
  }

  double norm_squared() const;
  bool is_normalized(double tol = kTolerance) const;

 private:
  RegisterLayout layout_;
  AmplitudeBuffer amplitudes_;
};

// <a|b>. Throws ShapeError on layout mismatch.
Amplitude inner_product(const StateVector& a, const StateVector& b);

// max_i |a_i - b_i|.
double max_abs_difference(const StateVector& a, const StateVector& b);

StateVector basis_state(const RegisterLayout& layout, std::span<const std::uint64_t> tuple);

// Every amplitude 1/sqrt(prod q_i).
StateVector uniform_superposition(const RegisterLayout& layout);

// (1/sqrt(c)) sum_z omega_c^z |z>, omega_c = exp(2 pi i / c).
StateVector phase_eigenstate(std::uint64_t c);

// a (x) b, registers of a first.
StateVector tensor(const StateVector& a, const StateVector& b);

// uniform_superposition(layout) (x) b in one pass, without materializing the
// uniform factor.
StateVector uniform_tensor(const RegisterLayout& layout, const StateVector& b);

}  // namespace qlwe::qsim

#endif  // QLWE_QSIM_STATE_VECTOR_H_
