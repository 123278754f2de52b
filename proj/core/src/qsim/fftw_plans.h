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

#ifndef QLWE_SRC_QSIM_FFTW_PLANS_H_
#define QLWE_SRC_QSIM_FFTW_PLANS_H_

#include <cstddef>
#include <span>

#include "qlwe/qsim/state_vector.h"

namespace qlwe::qsim {

// Unnormalized multi-dimensional DFT over `registers`, in place, with kernel
// exp(sign * 2 pi i x y / q) per register. Plans are cached per
// (layout, registers, sign).
void execute_fftw_dft(StateVector& state, std::span<const std::size_t> registers, int sign);

}  // namespace qlwe::qsim

#endif  // QLWE_SRC_QSIM_FFTW_PLANS_H_
