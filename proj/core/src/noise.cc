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

#include "qlwe/noise.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "qlwe/errors.h"

namespace qlwe {

ErrorDistribution::ErrorDistribution(NoiseKind kind, std::uint64_t q, std::uint64_t eta,
                                     double sigma)
    : kind_(kind), q_(q), eta_(eta), sigma_(sigma) {
  check_modulus(q);
  if (2 * eta >= q) {
    throw ParameterError("noise magnitude " + std::to_string(eta) +
                         " too large for modulus " + std::to_string(q));
  }
}

ErrorDistribution ErrorDistribution::bounded_uniform(std::uint64_t q, std::uint64_t eta) {
  return ErrorDistribution(NoiseKind::kBoundedUniform, q, eta, 0.0);
}

ErrorDistribution ErrorDistribution::rounded_gaussian(std::uint64_t q, std::uint64_t eta,
                                                      double sigma) {
  if (sigma <= 0.0) sigma = static_cast<double>(eta) / 3.0;
  return ErrorDistribution(NoiseKind::kRoundedGaussian, q, eta, sigma);
}

std::vector<double> ErrorDistribution::centered_pmf() const {
  const auto width = static_cast<std::size_t>(2 * eta_ + 1);
  std::vector<double> pmf(width, 0.0);
  if (kind_ == NoiseKind::kBoundedUniform || eta_ == 0 || sigma_ <= 0.0) {
    if (kind_ == NoiseKind::kBoundedUniform) {
      std::fill(pmf.begin(), pmf.end(), 1.0 / static_cast<double>(width));
    } else {
      pmf[eta_] = 1.0;
    }
    return pmf;
  }
  // P(round(sigma Z) = e) for |e| <= eta, renormalized over the cutoff.
  const double scale = 1.0 / (sigma_ * std::sqrt(2.0));
  for (std::size_t i = 0; i < width; ++i) {
    const double e = static_cast<double>(i) - static_cast<double>(eta_);
    pmf[i] = 0.5 * (std::erf((e + 0.5) * scale) - std::erf((e - 0.5) * scale));
  }
  const double total = std::accumulate(pmf.begin(), pmf.end(), 0.0);
  for (double& p : pmf) p /= total;
  return pmf;
}

std::uint64_t default_eta(std::uint64_t q) {
  return std::min<std::uint64_t>(std::max<std::uint64_t>(1, q / 16), (q - 1) / 2);
}

std::int64_t sample_centered_error(const ErrorDistribution& dist, Rng& rng) {
  const auto eta = static_cast<std::int64_t>(dist.eta());
  if (eta == 0) return 0;
  if (dist.kind() == NoiseKind::kBoundedUniform) return rng.uniform_between(-eta, eta);
  while (true) {
    const auto e = static_cast<std::int64_t>(std::llround(dist.sigma() * rng.standard_normal()));
    if (e >= -eta && e <= eta) return e;
  }
}

Residue sample_error(const ErrorDistribution& dist, Rng& rng) {
  return mod_reduce(sample_centered_error(dist, rng), dist.modulus());
}

ZqVector sample_error_vector(const ErrorDistribution& dist, std::size_t length, Rng& rng) {
  std::vector<Residue> out(length);
  for (Residue& e : out) e = sample_error(dist, rng);
  return ZqVector(dist.modulus(), std::move(out));
}

ZqMatrix sample_error_matrix(const ErrorDistribution& dist, std::size_t rows, std::size_t cols,
                             Rng& rng) {
  std::vector<Residue> out(rows * cols);
  for (Residue& e : out) e = sample_error(dist, rng);
  return ZqMatrix(dist.modulus(), rows, cols, std::move(out));
}

RingPoly sample_error_poly(const ErrorDistribution& dist, std::size_t n, Rng& rng) {
  std::vector<Residue> out(n);
  for (Residue& e : out) e = sample_error(dist, rng);
  return RingPoly(dist.modulus(), std::move(out));
}

ZqVector sample_uniform_vector(std::uint64_t q, std::size_t length, Rng& rng) {
  std::vector<Residue> out(length);
  for (Residue& e : out) e = rng.uniform_below(q);
  return ZqVector(q, std::move(out));
}

ZqMatrix sample_uniform_matrix(std::uint64_t q, std::size_t rows, std::size_t cols, Rng& rng) {
  std::vector<Residue> out(rows * cols);
  for (Residue& e : out) e = rng.uniform_below(q);
  return ZqMatrix(q, rows, cols, std::move(out));
}

RingPoly sample_uniform_poly(std::uint64_t q, std::size_t n, Rng& rng) {
  std::vector<Residue> out(n);
  for (Residue& e : out) e = rng.uniform_below(q);
  return RingPoly(q, std::move(out));
}

std::vector<std::uint8_t> sample_hamming_vector(std::size_t m, Rng& rng) {
  if (m == 0) throw ParameterError("sample_hamming_vector: m must be at least 1");
  std::vector<std::uint8_t> v(m, 0);
  std::fill(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m / 2), 1);
  // Fisher-Yates with our own bounded draws; std::shuffle is not portable.
  for (std::size_t i = m - 1; i > 0; --i) {
    std::swap(v[i], v[rng.uniform_below(i + 1)]);
  }
  return v;
}

}  // namespace qlwe
