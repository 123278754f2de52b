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

#include "qlwe/attacks/analysis.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "qlwe/errors.h"

namespace qlwe::attacks {

namespace {

using Wide = std::complex<long double>;

// w_m^{k} for k in [0, m).
std::vector<Wide> roots(std::uint64_t m) {
  std::vector<Wide> w(m);
  const long double step = 2.0L * std::numbers::pi_v<long double> / static_cast<long double>(m);
  for (std::uint64_t k = 0; k < m; ++k) {
    const long double t = step * static_cast<long double>(k);
    w[k] = Wide(std::cos(t), std::sin(t));
  }
  return w;
}

std::uint64_t conj_index(std::uint64_t k, std::uint64_t m) { return k == 0 ? 0 : m - k; }

}  // namespace

double brute_force_success(std::uint64_t q, std::span<const Residue> key, std::uint64_t c,
                           const BlockMap& block) {
  check_modulus(q);
  if (c < 2) throw ParameterError("output alphabet must have at least 2 symbols");
  const std::size_t n = key.size();
  if (n == 0) throw ParameterError("key must be nonempty");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > kMaxEnumeration / q) {
      throw ResourceError("brute-force enumeration exceeds " + std::to_string(kMaxEnumeration));
    }
    total *= q;
  }
  const auto wq = roots(q);
  const auto wc = roots(c);
  std::vector<Residue> x(n, 0);
  Wide sum{0.0L, 0.0L};
  for (std::uint64_t step = 0; step < total; ++step) {
    const Residue z = inner_product(x, key, q);
    const std::uint64_t v = block(z);
    if (v >= c) throw ContractViolation("block map output outside Z_c");
    sum += wc[conj_index(v, c)] * wq[z];
    for (std::size_t i = n; i-- > 0;) {
      if (++x[i] < q) break;
      x[i] = 0;
    }
  }
  return static_cast<double>(std::norm(sum / static_cast<long double>(total)));
}

double brute_force_success(const LrfParams& params, const ZqVector& key) {
  if (key.modulus() != params.q() || key.size() != params.n()) {
    throw ShapeError("key does not match LRF parameters");
  }
  return brute_force_success(params.q(), key.entries(), params.c(),
                             [&params](Residue z) { return block_index(z, params); });
}

double exact_success_probability(std::uint64_t q, std::uint64_t b) {
  const LrfParams params(q, 1, 0, b);
  const std::uint64_t c = params.c();
  const auto wq = roots(q);
  const auto wc = roots(c);
  Wide sum{0.0L, 0.0L};
  Wide partial{0.0L, 0.0L};  // T_v for v < c-1
  for (std::uint64_t z = 0; z < b; ++z) partial += wq[z];
  Wide last{0.0L, 0.0L};
  for (std::uint64_t z = 0; z < b - params.d(); ++z) last += wq[z];
  for (std::uint64_t v = 0; v < c; ++v) {
    const Wide t = v + 1 < c ? partial : last;
    sum += wc[conj_index(v, c)] * wq[(v * b) % q] * t;
  }
  return static_cast<double>(std::norm(sum / static_cast<long double>(q)));
}

double unit_key_success(std::uint64_t q, std::uint64_t c, const BlockMap& block) {
  check_modulus(q);
  if (c < 2) throw ParameterError("output alphabet must have at least 2 symbols");
  const auto wq = roots(q);
  const auto wc = roots(c);
  Wide sum{0.0L, 0.0L};
  for (Residue z = 0; z < q; ++z) {
    const std::uint64_t v = block(z);
    if (v >= c) throw ContractViolation("block map output outside Z_c");
    sum += wc[conj_index(v, c)] * wq[z];
  }
  return static_cast<double>(std::norm(sum / static_cast<long double>(q)));
}

std::uint64_t lwe_decryption_block(Residue z, std::uint64_t q) {
  return centered_abs(z % q, q) <= q / 4 ? 0 : 1;
}

double iid_error_expected_success(const ErrorDistribution& dist, std::size_t n) {
  const std::uint64_t q = dist.modulus();
  const auto pmf = dist.centered_pmf();
  const auto eta = static_cast<std::int64_t>(dist.eta());
  const auto wq = roots(q);
  Wide mu{0.0L, 0.0L};
  for (std::int64_t e = -eta; e <= eta; ++e) {
    mu += static_cast<long double>(pmf[static_cast<std::size_t>(e + eta)]) *
          wq[conj_index(mod_reduce(e, q), q)];
  }
  const long double m2 = std::norm(mu);
  const long double branches = std::pow(static_cast<long double>(q), static_cast<long double>(n));
  return static_cast<double>(m2 + (1.0L - m2) / branches);
}

double iid_error_lower_bound(std::uint64_t q, std::uint64_t eta) {
  if (eta == 0) throw ParameterError("bound needs eta >= 1");
  return static_cast<double>(totient(q)) / (24.0 * static_cast<double>(eta) * static_cast<double>(q));
}

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) throw ParameterError("Wilson interval needs at least one trial");
  if (successes > trials) throw ParameterError("more successes than trials");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return WilsonInterval{std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

}  // namespace qlwe::attacks
