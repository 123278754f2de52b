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

#include "fftw_plans.h"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "qlwe/errors.h"

namespace qlwe::qsim {

namespace {

// Below this many amplitudes FFTW_ESTIMATE plans are as fast as measured ones.
constexpr std::size_t kMeasureThreshold = 4096;

struct PlanKey {
  std::vector<std::uint64_t> dims;
  std::vector<std::size_t> registers;
  int sign;

  bool operator<(const PlanKey& other) const {
    return std::tie(dims, registers, sign) < std::tie(other.dims, other.registers, other.sign);
  }
};

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(const RegisterLayout& layout, std::span<const std::size_t> registers, int sign) {
    PlanKey key{std::vector<std::uint64_t>(layout.dims().begin(), layout.dims().end()),
                std::vector<std::size_t>(registers.begin(), registers.end()), sign};
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;

    std::vector<fftw_iodim64> dims;
    std::vector<fftw_iodim64> loops;
    std::vector<bool> transformed(layout.num_registers(), false);
    for (std::size_t r : registers) transformed[r] = true;
    for (std::size_t r = 0; r < layout.num_registers(); ++r) {
      const fftw_iodim64 d{static_cast<ptrdiff_t>(layout.dim(r)),
                           static_cast<ptrdiff_t>(layout.stride(r)),
                           static_cast<ptrdiff_t>(layout.stride(r))};
      (transformed[r] ? dims : loops).push_back(d);
    }
    // Planning may overwrite its arrays, so plan on scratch storage.
    AmplitudeBuffer scratch(layout.total());
    auto* data = reinterpret_cast<fftw_complex*>(scratch.data());
    const unsigned flags = layout.total() >= kMeasureThreshold ? FFTW_MEASURE : FFTW_ESTIMATE;
    fftw_plan plan = fftw_plan_guru64_dft(static_cast<int>(dims.size()), dims.data(),
                                          static_cast<int>(loops.size()), loops.data(), data,
                                          data, sign > 0 ? FFTW_BACKWARD : FFTW_FORWARD, flags);
    if (plan == nullptr) throw ResourceError("FFTW could not create a plan for this layout");
    plans_.emplace(std::move(key), plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<PlanKey, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

}  // namespace

void execute_fftw_dft(StateVector& state, std::span<const std::size_t> registers, int sign) {
  fftw_plan plan = plan_cache().get(state.layout(), registers, sign);
  auto* data = reinterpret_cast<fftw_complex*>(state.mutable_amplitudes().data());
  fftw_execute_dft(plan, data, data);
}

}  // namespace qlwe::qsim
