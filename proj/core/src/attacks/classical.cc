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

#include "qlwe/attacks/classical.h"

#include <string>
#include <vector>

#include "qlwe/errors.h"

namespace qlwe::attacks {

namespace {

// Candidates v with |c - v| <= r (cyclically), via prefix sums over a
// doubled array.
class CandidateSet {
 public:
  explicit CandidateSet(std::uint64_t q) : q_(q), alive_(q, 1), size_(q) {}

  std::uint64_t size() const { return size_; }

  // Candidate count inside the window centred on each c.
  std::vector<std::uint64_t> window_counts(std::uint64_t r) const {
    std::vector<std::uint64_t> prefix(3 * q_ + 1, 0);
    for (std::uint64_t i = 0; i < 3 * q_; ++i) prefix[i + 1] = prefix[i] + alive_[i % q_];
    std::vector<std::uint64_t> counts(q_);
    for (std::uint64_t c = 0; c < q_; ++c) {
      // Window [c - r, c + r] shifted by q into the middle copy.
      counts[c] = prefix[q_ + c + r + 1] - prefix[q_ + c - r];
    }
    return counts;
  }

  void keep(std::uint64_t c, std::uint64_t r, bool inside) {
    size_ = 0;
    for (std::uint64_t v = 0; v < q_; ++v) {
      const bool in = centered_abs(sub_mod(c, v, q_), q_) <= r;
      if (in != inside) alive_[v] = 0;
      size_ += alive_[v];
    }
  }

  Residue only() const {
    for (std::uint64_t v = 0; v < q_; ++v) {
      if (alive_[v]) return v;
    }
    throw ContractViolation("decryption answers are inconsistent with every key");
  }

 private:
  std::uint64_t q_;
  std::vector<std::uint8_t> alive_;
  std::uint64_t size_;
};

}  // namespace

ClassicalRecovery classical_dec_keyrec(const LweDecOracle& dec, std::uint64_t q, std::size_t n) {
  check_modulus(q);
  if (n == 0) throw ParameterError("LWE dimension must be at least 1");
  const std::uint64_t r = q / 4;
  std::uint64_t queries = 0;
  std::vector<Residue> unit(n, 0);
  ZqVector key(q, n);
  for (std::size_t i = 0; i < n; ++i) {
    unit[i] = 1;
    CandidateSet candidates(q);
    while (candidates.size() > 1) {
      const auto counts = candidates.window_counts(r);
      std::uint64_t best_c = 0;
      std::uint64_t best_worst = candidates.size();
      for (std::uint64_t c = 0; c < q; ++c) {
        const std::uint64_t worst = std::max(counts[c], candidates.size() - counts[c]);
        if (worst < best_worst) {
          best_worst = worst;
          best_c = c;
        }
      }
      if (best_worst == candidates.size()) {
        throw ContractViolation("no decryption query separates the remaining candidates");
      }
      ++queries;
      candidates.keep(best_c, r, dec(unit, best_c) == 0);
    }
    key.set(i, static_cast<std::int64_t>(candidates.only()));
    unit[i] = 0;
  }
  return ClassicalRecovery{key, queries};
}

ClassicalRecovery classical_ra_keyrec(const RaFullOracle& enc, std::uint64_t q, std::size_t n) {
  check_modulus(q);
  if (n == 0) throw ParameterError("LWE dimension must be at least 1");
  std::vector<Residue> unit(n, 0);
  ZqVector key(q, n);
  for (std::size_t i = 0; i < n; ++i) {
    unit[i] = 1;
    key.set(i, static_cast<std::int64_t>(enc(0, unit, 0)));
    unit[i] = 0;
  }
  return ClassicalRecovery{key, n};
}

}  // namespace qlwe::attacks
