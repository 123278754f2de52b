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

#include "qlwe/schemes/symmetric.h"

#include <string>

#include "qlwe/errors.h"

namespace qlwe::schemes {

namespace {

std::uint64_t low_mask(unsigned bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

void check_width(unsigned bits) {
  if (bits < 1 || bits > 32) {
    throw ParameterError("toy schemes need 1 <= n <= 32 bits, got " + std::to_string(bits));
  }
}

void check_fits(std::uint64_t value, unsigned bits, const char* what) {
  if ((value & ~low_mask(bits)) != 0) {
    throw ShapeError(std::string(what) + " is wider than " + std::to_string(bits) + " bits");
  }
}

std::uint64_t keyed_mix(std::uint64_t key, std::uint64_t input) {
  return splitmix64(splitmix64(key) ^ input);
}

}  // namespace

ToyPrf::ToyPrf(std::uint64_t key, unsigned bits) : key_(key), bits_(bits) { check_width(bits); }

std::uint64_t ToyPrf::operator()(std::uint64_t input) const {
  return keyed_mix(key_, input) & low_mask(bits_);
}

PrfCiphertext prf_encrypt(const ToyPrf& prf, std::uint64_t message, Rng& rng) {
  check_fits(message, prf.bits(), "message");
  const std::uint64_t r = rng.uniform_below(std::uint64_t{1} << prf.bits());
  return PrfCiphertext{r, prf(r) ^ message};
}

std::uint64_t prf_decrypt(const ToyPrf& prf, const PrfCiphertext& ct) {
  check_fits(ct.r, prf.bits(), "ciphertext nonce");
  check_fits(ct.body, prf.bits(), "ciphertext body");
  return prf(ct.r) ^ ct.body;
}

FeistelPrp::FeistelPrp(std::uint64_t key, unsigned half_bits) : half_bits_(half_bits) {
  check_width(half_bits);
  for (int i = 0; i < kRounds; ++i) {
    round_keys_[i] = derive_seed(key, static_cast<std::uint64_t>(i));
  }
}

std::uint64_t FeistelPrp::half_mask() const { return low_mask(half_bits_); }

std::uint64_t FeistelPrp::round(int i, std::uint64_t half) const {
  return keyed_mix(round_keys_[i], half) & half_mask();
}

std::uint64_t FeistelPrp::forward(std::uint64_t block) const {
  check_fits(block, 2 * half_bits_, "block");
  std::uint64_t left = block >> half_bits_;
  std::uint64_t right = block & half_mask();
  for (int i = 0; i < kRounds; ++i) {
    const std::uint64_t next = left ^ round(i, right);
    left = right;
    right = next;
  }
  return (left << half_bits_) | right;
}

std::uint64_t FeistelPrp::inverse(std::uint64_t block) const {
  check_fits(block, 2 * half_bits_, "block");
  std::uint64_t left = block >> half_bits_;
  std::uint64_t right = block & half_mask();
  for (int i = kRounds - 1; i >= 0; --i) {
    const std::uint64_t prev = right ^ round(i, left);
    right = left;
    left = prev;
  }
  return (left << half_bits_) | right;
}

std::uint64_t prp_encrypt(const FeistelPrp& prp, std::uint64_t message, Rng& rng) {
  check_fits(message, prp.half_bits(), "message");
  const std::uint64_t r = rng.uniform_below(std::uint64_t{1} << prp.half_bits());
  return prp.forward((message << prp.half_bits()) | r);
}

std::uint64_t prp_decrypt(const FeistelPrp& prp, std::uint64_t ciphertext) {
  check_fits(ciphertext, 2 * prp.half_bits(), "ciphertext");
  return prp.inverse(ciphertext) >> prp.half_bits();
}

}  // namespace qlwe::schemes
