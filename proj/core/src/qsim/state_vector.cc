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

#include "qlwe/qsim/state_vector.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "qlwe/errors.h"

namespace qlwe::qsim {

namespace {

constexpr std::align_val_t kAlignment{64};
// Blocks smaller than this go straight to the heap.
constexpr std::size_t kCacheMinBytes = std::size_t{1} << 20;
constexpr std::size_t kCacheMaxBytes = std::size_t{64} << 20;
constexpr std::size_t kCacheSlots = 4;

class BlockCache {
 public:
  ~BlockCache() {
    for (const Block& b : blocks_) ::operator delete(b.ptr, kAlignment);
  }

  void* take(std::size_t bytes) {
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (blocks_[i].bytes == bytes) {
        void* p = blocks_[i].ptr;
        held_ -= bytes;
        blocks_.erase(blocks_.begin() + static_cast<std::ptrdiff_t>(i));
        return p;
      }
    }
    return nullptr;
  }

  bool put(void* p, std::size_t bytes) {
    if (blocks_.size() >= kCacheSlots || held_ + bytes > kCacheMaxBytes) return false;
    blocks_.push_back(Block{p, bytes});
    held_ += bytes;
    return true;
  }

 private:
  struct Block {
    void* ptr;
    std::size_t bytes;
  };
  std::vector<Block> blocks_;
  std::size_t held_ = 0;
};

BlockCache& block_cache() {
  thread_local BlockCache cache;
  return cache;
}

}  // namespace

void* allocate_aligned(std::size_t bytes) {
  if (bytes >= kCacheMinBytes) {
    if (void* p = block_cache().take(bytes)) return p;
  }
  return ::operator new(bytes, kAlignment);
}

void release_aligned(void* p, std::size_t bytes) noexcept {
  if (p == nullptr) return;
  if (bytes >= kCacheMinBytes && block_cache().put(p, bytes)) return;
  ::operator delete(p, kAlignment);
}

StateVector::StateVector(RegisterLayout layout)
    : layout_(std::move(layout)), amplitudes_(layout_.total(), Amplitude{0.0, 0.0}) {}

StateVector::StateVector(RegisterLayout layout, AmplitudeBuffer amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != layout_.total()) {
    throw ShapeError("amplitude count does not match register layout");
  }
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const Amplitude& a : amplitudes_) total += std::norm(a);
  return total;
}

bool StateVector::is_normalized(double tol) const { return std::abs(norm_squared() - 1.0) <= tol; }

Amplitude inner_product(const StateVector& a, const StateVector& b) {
  if (!(a.layout() == b.layout())) throw ShapeError("inner_product: layout mismatch");
  Amplitude acc{0.0, 0.0};
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

double max_abs_difference(const StateVector& a, const StateVector& b) {
  if (!(a.layout() == b.layout())) throw ShapeError("max_abs_difference: layout mismatch");
  double worst = 0.0;
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
  return worst;
}

StateVector basis_state(const RegisterLayout& layout, std::span<const std::uint64_t> tuple) {
  StateVector state(layout);
  state.mutable_amplitudes()[layout.index_of(tuple)] = 1.0;
  return state;
}

StateVector uniform_superposition(const RegisterLayout& layout) {
  StateVector state(layout);
  const double amp = 1.0 / std::sqrt(static_cast<double>(layout.total()));
  std::fill(state.mutable_amplitudes().begin(), state.mutable_amplitudes().end(),
            Amplitude{amp, 0.0});
  return state;
}

StateVector phase_eigenstate(std::uint64_t c) {
  if (c < 2) throw ParameterError("phase_eigenstate: c must be at least 2");
  StateVector state(RegisterLayout({c}));
  const double scale = 1.0 / std::sqrt(static_cast<double>(c));
  auto amps = state.mutable_amplitudes();
  for (std::uint64_t z = 0; z < c; ++z) {
    amps[z] = std::polar(scale, 2.0 * std::numbers::pi * static_cast<double>(z) /
                                    static_cast<double>(c));
  }
  return state;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  StateVector out(a.layout().concat(b.layout()));
  auto dst = out.mutable_amplitudes();
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  const std::size_t ny = y.size();
  Amplitude* d = dst.data();
  for (std::size_t i = 0; i < x.size(); ++i, d += ny) {
    const Amplitude xi = x[i];
    for (std::size_t j = 0; j < ny; ++j) d[j] = xi * y[j];
  }
  return out;
}

StateVector uniform_tensor(const RegisterLayout& layout, const StateVector& b) {
  RegisterLayout joint = layout.concat(b.layout());
  AmplitudeBuffer buffer(joint.total());
  StateVector out(std::move(joint), std::move(buffer));
  const double amp = 1.0 / std::sqrt(static_cast<double>(layout.total()));
  std::vector<Amplitude> scaled(b.amplitudes().begin(), b.amplitudes().end());
  for (Amplitude& y : scaled) y *= amp;
  const std::size_t ny = scaled.size();
  Amplitude* d = out.mutable_amplitudes().data();
  for (std::size_t i = 0; i < layout.total(); ++i, d += ny) {
    std::copy(scaled.begin(), scaled.end(), d);
  }
  return out;
}

}  // namespace qlwe::qsim
