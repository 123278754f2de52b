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

#ifndef QLWE_NOISE_H_
#define QLWE_NOISE_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qlwe/random.h"
#include "qlwe/ring_poly.h"
#include "qlwe/zq.h"

namespace qlwe {

enum class NoiseKind { kBoundedUniform, kRoundedGaussian };

// Discrete, symmetric noise over Z_q.
//
// kBoundedUniform: centered value uniform on [-eta, eta].
// kRoundedGaussian: round(sigma * N(0,1)), resampled until |e| <= eta.
class ErrorDistribution {
 public:
  static ErrorDistribution bounded_uniform(std::uint64_t q, std::uint64_t eta);
  // sigma <= 0 selects the default sigma = eta / 3.
  static ErrorDistribution rounded_gaussian(std::uint64_t q, std::uint64_t eta,
                                            double sigma = 0.0);

  NoiseKind kind() const { return kind_; }
  std::uint64_t modulus() const { return q_; }
  std::uint64_t eta() const { return eta_; }
  double sigma() const { return sigma_; }

  // Probability of each centered value -eta..eta (index e + eta).
  std::vector<double> centered_pmf() const;

 private:
  ErrorDistribution(NoiseKind kind, std::uint64_t q, std::uint64_t eta, double sigma);

  NoiseKind kind_;
  std::uint64_t q_;
  std::uint64_t eta_;
  double sigma_;
};

// max(1, floor(q / 16)), clamped below q/2: keeps accumulated decryption
// noise well inside the rounding radius at the parameter sizes used here.
std::uint64_t default_eta(std::uint64_t q);

std::int64_t sample_centered_error(const ErrorDistribution& dist, Rng& rng);
Residue sample_error(const ErrorDistribution& dist, Rng& rng);
ZqVector sample_error_vector(const ErrorDistribution& dist, std::size_t length, Rng& rng);
ZqMatrix sample_error_matrix(const ErrorDistribution& dist, std::size_t rows,
                             std::size_t cols, Rng& rng);
RingPoly sample_error_poly(const ErrorDistribution& dist, std::size_t n, Rng& rng);

ZqVector sample_uniform_vector(std::uint64_t q, std::size_t length, Rng& rng);
ZqMatrix sample_uniform_matrix(std::uint64_t q, std::size_t rows, std::size_t cols, Rng& rng);
RingPoly sample_uniform_poly(std::uint64_t q, std::size_t n, Rng& rng);

// Binary vector of length m with exactly floor(m/2) ones, uniform over all
// such vectors.
std::vector<std::uint8_t> sample_hamming_vector(std::size_t m, Rng& rng);

}  // namespace qlwe

#endif  // QLWE_NOISE_H_
