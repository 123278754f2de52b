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

#include "verify.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "qlwe/attacks/analysis.h"
#include "qlwe/attacks/experiment.h"
#include "qlwe/lrf.h"
#include "qlwe/noise.h"
#include "qlwe/qsim/operations.h"
#include "qlwe/qsim/state_vector.h"
#include "qlwe/random.h"
#include "qlwe/ring_poly.h"
#include "qlwe/schemes/frodo.h"
#include "qlwe/schemes/lwe.h"
#include "qlwe/schemes/ring_lwe.h"
#include "qlwe/schemes/symmetric.h"

namespace qlwe::harness {

namespace {

using qsim::Amplitude;
using qsim::RegisterLayout;
using qsim::StateVector;

constexpr double kProbabilityTolerance = 1e-9;

// Accumulates the outcome of one property: the first failure wins.
class Check {
 public:
  Check(std::string property, std::string grid) {
    result_.property = std::move(property);
    result_.point = std::move(grid);
    result_.passed = true;
  }

  bool ok() const { return result_.passed; }

  void fail(std::string point, std::string detail) {
    if (!result_.passed) return;
    result_.passed = false;
    result_.point = std::move(point);
    result_.detail = std::move(detail);
  }

  CheckResult finish(double seconds) {
    result_.seconds = seconds;
    return std::move(result_);
  }

 private:
  CheckResult result_;
};

std::string join(std::initializer_list<std::pair<const char*, std::uint64_t>> fields) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, value] : fields) {
    out << (first ? "" : " ") << name << '=' << value;
    first = false;
  }
  return out.str();
}

std::string vec_string(std::span<const Residue> v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

std::string diff_string(double expected, double actual) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "expected %.12g, got %.12g", expected, actual);
  return buf;
}

ZqVector random_unit_key(std::uint64_t q, std::size_t n, Rng& rng) {
  while (true) {
    ZqVector k = sample_uniform_vector(q, n, rng);
    if (has_unit_entry(k)) return k;
  }
}

StateVector random_state(const RegisterLayout& layout, Rng& rng) {
  qsim::AmplitudeBuffer amps(layout.total());
  double norm = 0.0;
  for (Amplitude& a : amps) {
    a = Amplitude(rng.standard_normal(), rng.standard_normal());
    norm += std::norm(a);
  }
  for (Amplitude& a : amps) a /= std::sqrt(norm);
  return StateVector(layout, std::move(amps));
}

void closed_form_vs_brute_force(Check& check, const VerifyOptions& opt) {
  Rng rng(derive_seed(opt.seed, 1));
  for (std::uint64_t q = 2; q <= 12 && check.ok(); ++q) {
    for (std::uint64_t b = 1; b < q && check.ok(); ++b) {
      const double closed = attacks::exact_success_probability(q, b);
      for (std::size_t n = 1; n <= 2 && check.ok(); ++n) {
        for (int trial = 0; trial < 5 && check.ok(); ++trial) {
          const ZqVector key = random_unit_key(q, n, rng);
          for (Residue a = 0; a < q && check.ok(); ++a) {
            const LrfParams params(q, n, a, b);
            attacks::BlockMap block = [&params](Residue z) { return block_index(z, params); };
            if (opt.inject_block_index_fault) {
              // Off by one: every boundary moves down one element, so block 0
              // shrinks and the last block grows.
              block = [&params](Residue z) {
                const std::uint64_t r = sub_mod(z, params.a(), params.q());
                return std::min((r + 1) / params.b(), params.c() - 1);
              };
            }
            const double brute = attacks::brute_force_success(q, key.entries(), params.c(), block);
            if (std::abs(brute - closed) > kProbabilityTolerance) {
              check.fail(join({{"q", q}, {"b", b}, {"a", a}, {"n", n}}) + " k=" +
                             vec_string(key.entries()),
                         diff_string(closed, brute));
            }
          }
        }
      }
    }
  }
}

void unit_key_invariance(Check& check, const VerifyOptions& opt) {
  Rng rng(derive_seed(opt.seed, 2));
  for (std::uint64_t q : {5, 6, 8, 9, 10, 12}) {
    for (std::uint64_t b : {std::uint64_t{1}, (q + 1) / 2, q - 1}) {
      const LrfParams params(q, 2, 0, b);
      const double reference = attacks::brute_force_success(params, random_unit_key(q, 2, rng));
      for (int trial = 0; trial < 20 && check.ok(); ++trial) {
        const ZqVector key = random_unit_key(q, 2, rng);
        const double p = attacks::brute_force_success(params, key);
        if (std::abs(p - reference) > kProbabilityTolerance) {
          check.fail(join({{"q", q}, {"b", b}}) + " k=" + vec_string(key.entries()),
                     diff_string(reference, p));
        }
      }
    }
  }
}

void lower_bound_envelope(Check& check) {
  const double limit = 4.0 / (std::numbers::pi * std::numbers::pi);
  for (std::uint64_t q = 2; q <= 4096 && check.ok(); ++q) {
    const double p = attacks::exact_success_probability(q, (q + 1) / 2);
    if (p < limit - 10.0 / static_cast<double>(q) || p > 1.0 + kProbabilityTolerance) {
      check.fail(join({{"q", q}}), "probability " + diff_string(limit, p));
    }
    if (q >= 256 && std::abs(p - limit) > 0.01) {
      check.fail(join({{"q", q}}), "not within 0.01 of the limit: " + diff_string(limit, p));
    }
  }
}

void partition_exhaustiveness(Check& check) {
  for (std::uint64_t q = 2; q <= 32 && check.ok(); ++q) {
    for (std::uint64_t b = 1; b < q && check.ok(); ++b) {
      for (Residue a = 0; a < q && check.ok(); ++a) {
        const LrfParams params(q, 1, a, b);
        std::vector<std::uint64_t> sizes(params.c(), 0);
        std::uint64_t previous = 0;
        for (std::uint64_t r = 0; r < q; ++r) {
          // Walk Z_q from the offset; blocks must appear in order, each once.
          const std::uint64_t v = block_index(add_mod(a, r, q), params);
          if (v >= params.c() || v < previous || v > previous + 1) {
            check.fail(join({{"q", q}, {"b", b}, {"a", a}, {"z", add_mod(a, r, q)}}),
                       "block index out of order");
            break;
          }
          previous = v;
          ++sizes[v];
        }
        for (std::uint64_t v = 0; v < params.c() && check.ok(); ++v) {
          if (sizes[v] != params.block_size(v)) {
            check.fail(join({{"q", q}, {"b", b}, {"a", a}, {"v", v}}),
                       "block has " + std::to_string(sizes[v]) + " elements, expected " +
                           std::to_string(params.block_size(v)));
          }
        }
      }
    }
  }
}

void qft_unitarity(Check& check, const VerifyOptions& opt) {
  for (std::uint64_t q = 2; q <= 16 && check.ok(); ++q) {
    const RegisterLayout layout({q});
    std::vector<std::vector<Amplitude>> columns;
    for (std::uint64_t x = 0; x < q; ++x) {
      const std::uint64_t tuple[] = {x};
      const StateVector out =
          qsim::qft(qsim::basis_state(layout, tuple), 0, qsim::QftBackend::kDense);
      columns.emplace_back(out.amplitudes().begin(), out.amplitudes().end());
      for (std::uint64_t y = 0; y < q; ++y) {
        const Amplitude kernel =
            std::polar(1.0 / std::sqrt(static_cast<double>(q)),
                       2.0 * std::numbers::pi * static_cast<double>((x * y) % q) /
                           static_cast<double>(q));
        if (std::abs(columns.back()[y] - kernel) > kProbabilityTolerance) {
          check.fail(join({{"q", q}, {"x", x}, {"y", y}}), "kernel entry differs");
        }
      }
    }
    for (std::uint64_t x = 0; x < q && check.ok(); ++x) {
      for (std::uint64_t y = 0; y < q; ++y) {
        Amplitude dot{0.0, 0.0};
        for (std::uint64_t z = 0; z < q; ++z) dot += std::conj(columns[x][z]) * columns[y][z];
        if (std::abs(dot - Amplitude(x == y ? 1.0 : 0.0, 0.0)) > kProbabilityTolerance) {
          check.fail(join({{"q", q}, {"x", x}, {"y", y}}), "columns not orthonormal");
          break;
        }
      }
    }
  }
  // Fast path agrees with the dense reference and inverts cleanly.
  Rng rng(derive_seed(opt.seed, 3));
  for (const auto& dims : std::vector<std::vector<std::uint64_t>>{{3, 4, 5}, {7, 2, 7}, {16, 9}}) {
    if (!check.ok()) break;
    const RegisterLayout layout(dims);
    std::vector<std::size_t> regs(dims.size());
    std::iota(regs.begin(), regs.end(), std::size_t{0});
    const StateVector psi = random_state(layout, rng);
    const StateVector dense = qsim::qft(psi, regs, qsim::QftBackend::kDense);
    const StateVector fast = qsim::qft(psi, regs, qsim::QftBackend::kFftw);
    const StateVector back = qsim::inverse_qft(fast, regs, qsim::QftBackend::kFftw);
    std::ostringstream point;
    point << "layout=(";
    for (std::size_t i = 0; i < dims.size(); ++i) point << (i ? "," : "") << dims[i];
    point << ')';
    if (qsim::max_abs_difference(dense, fast) > kProbabilityTolerance) {
      check.fail(point.str(), "FFTW and dense transforms differ");
    } else if (qsim::max_abs_difference(back, psi) > kProbabilityTolerance) {
      check.fail(point.str(), "inverse transform does not restore the state");
    } else if (std::abs(fast.norm_squared() - 1.0) > kProbabilityTolerance) {
      check.fail(point.str(), "transform changed the norm");
    }
  }
}

void kickback_equivalence(Check& check, const VerifyOptions& opt) {
  struct Point {
    std::uint64_t q;
    std::size_t n;
    std::uint64_t c;
  };
  Rng rng(derive_seed(opt.seed, 4));
  for (const Point& pt : {Point{3, 2, 2}, Point{5, 2, 3}, Point{4, 2, 4}, Point{7, 1, 5},
                          Point{6, 2, 2}, Point{2, 3, 7}}) {
    const RegisterLayout inputs = RegisterLayout::uniform(pt.q, pt.n);
    std::vector<std::uint64_t> table(inputs.total());
    for (auto& v : table) v = rng.uniform_below(pt.c);
    const qsim::ClassicalFunction f = [&](std::span<const std::uint64_t> x) {
      return table[inputs.index_of(x)];
    };
    std::vector<std::size_t> regs(pt.n);
    std::iota(regs.begin(), regs.end(), std::size_t{0});
    const StateVector psi = random_state(inputs, rng);
    const StateVector eigen = qsim::phase_eigenstate(pt.c);
    StateVector kicked = qsim::apply_additive_oracle(qsim::tensor(psi, eigen), pt.n, f);
    kicked = qsim::discard_register(kicked, pt.n, eigen);
    const StateVector phased = qsim::apply_phase_oracle(psi, regs, f, pt.c);
    const double diff = qsim::max_abs_difference(kicked, phased);
    if (diff > kProbabilityTolerance) {
      check.fail(join({{"q", pt.q}, {"n", pt.n}, {"c", pt.c}}),
                 "max amplitude difference " + diff_string(0.0, diff));
    }
  }
}

void lwe_lrf_bridge(Check& check, const VerifyOptions& opt) {
  Rng rng(derive_seed(opt.seed, 5));
  for (std::uint64_t q = 2; q <= 17 && check.ok(); ++q) {
    const std::uint64_t r = q / 4;
    for (std::size_t n = 1; n <= 2 && check.ok(); ++n) {
      // The 0-block {|z| <= floor(q/4)} is block 0 of the partition starting
      // at -floor(q/4) with 2 floor(q/4) + 1 elements.
      const LrfParams params(q, n + 1, neg_mod(r, q), std::min(2 * r + 1, q - 1));
      const int keys = n == 1 ? static_cast<int>(q) : 25;
      for (int t = 0; t < keys && check.ok(); ++t) {
        const ZqVector k = n == 1 ? ZqVector(q, {static_cast<Residue>(t)})
                                  : sample_uniform_vector(q, n, rng);
        std::vector<Residue> k_prime;
        for (Residue v : k.entries()) k_prime.push_back(neg_mod(v, q));
        k_prime.push_back(1);
        const RegisterLayout layout = RegisterLayout::uniform(q, n + 1);
        for (std::size_t idx = 0; idx < layout.total(); ++idx) {
          const auto x = layout.tuple_of(idx);
          const std::span<const Residue> xs(x);
          const int dec = schemes::lwe_decrypt(k.entries(), xs.first(n), x[n], q);
          const int lrf = lrf_eval(xs, k_prime, params) == 0 ? 0 : 1;
          if (dec != lrf) {
            check.fail(join({{"q", q}, {"n", n}}) + " k=" + vec_string(k.entries()) +
                           " x=" + vec_string(xs),
                       "decryption " + std::to_string(dec) + " vs rounding function " +
                           std::to_string(lrf));
            break;
          }
        }
      }
    }
  }
}

void frodo_lrf_bridge(Check& check, const VerifyOptions& opt) {
  Rng rng(derive_seed(opt.seed, 6));
  const auto params = schemes::FrodoParams::make(4, 2, 2, 2, 2, 1);
  const LrfParams lrf(params.q(), params.n, 0, params.block());
  for (int trial = 0; trial < 1000 && check.ok(); ++trial) {
    const auto kp = schemes::frodo_keygen(params, rng);
    const schemes::FrodoCiphertext ct{
        sample_uniform_matrix(params.q(), params.m_bar, params.n, rng),
        ZqMatrix(params.q(), params.m_bar, params.n_bar)};
    const ZqMatrix m = schemes::frodo_decrypt(params, kp.s, ct);
    for (std::size_t i = 0; i < params.m_bar; ++i) {
      for (std::size_t j = 0; j < params.n_bar; ++j) {
        // C2 = 0 leaves -C1 S, i.e. the rounding function keyed by -s^j.
        const ZqVector neg_col = -kp.s.column_vector(j);
        const std::uint64_t expect = lrf_eval(ct.c1.row(i), neg_col.entries(), lrf);
        if (m.at(i, j) != expect) {
          check.fail("q=16 B=2 n=2 trial=" + std::to_string(trial),
                     "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is " +
                         std::to_string(m.at(i, j)) + ", expected " + std::to_string(expect));
        }
      }
    }
  }
}

void prf_prp_round_trip(Check& check, const VerifyOptions& opt) {
  Rng rng(derive_seed(opt.seed, 7));
  for (unsigned bits : {1u, 8u, 16u, 32u}) {
    const schemes::ToyPrf prf(rng(), bits);
    const schemes::FeistelPrp prp(rng(), bits);
    const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
    for (int trial = 0; trial < 1000 && check.ok(); ++trial) {
      const std::uint64_t m = rng() & mask;
      if (schemes::prf_decrypt(prf, schemes::prf_encrypt(prf, m, rng)) != m) {
        check.fail("PRF bits=" + std::to_string(bits), "round trip changed the message");
      }
      if (schemes::prp_decrypt(prp, schemes::prp_encrypt(prp, m, rng)) != m) {
        check.fail("PRP bits=" + std::to_string(bits), "round trip changed the message");
      }
      const std::uint64_t block = rng() & ((mask << bits) | mask);
      if (prp.inverse(prp.forward(block)) != block) {
        check.fail("Feistel bits=" + std::to_string(2 * bits), "inverse(forward(x)) != x");
      }
    }
  }
}

void lwe_round_trip(Check& check, const VerifyOptions& opt) {
  Rng rng(derive_seed(opt.seed, 8));
  const schemes::SkeParams ske{257, 8, ErrorDistribution::bounded_uniform(257, 16)};
  const auto key = schemes::ske_keygen(ske, rng);
  for (int trial = 0; trial < 1000 && check.ok(); ++trial) {
    const int bit = rng.bit();
    if (schemes::ske_decrypt(key, schemes::ske_encrypt(ske, key, bit, rng)) != bit) {
      check.fail("SKE q=257 n=8 eta=16 trial=" + std::to_string(trial), "bit flipped");
    }
  }
  schemes::PkeParams pke{257, 8, 64, ErrorDistribution::bounded_uniform(257, 1)};
  const auto kp = schemes::pke_keygen(pke, rng);
  for (int trial = 0; trial < 1000 && check.ok(); ++trial) {
    const int bit = rng.bit();
    if (schemes::pke_decrypt(kp.sk, schemes::pke_encrypt(kp.pk, bit, rng)) != bit) {
      check.fail("PKE q=257 n=8 m=64 eta=1 trial=" + std::to_string(trial), "bit flipped");
    }
  }
  // The acceptance-suite SKE points with the default noise.
  for (std::uint64_t q : {7, 13}) {
    const schemes::SkeParams small = schemes::SkeParams::with_defaults(q, 2);
    const auto k = schemes::ske_keygen(small, rng);
    for (int trial = 0; trial < 1000 && check.ok(); ++trial) {
      const int bit = rng.bit();
      if (schemes::ske_decrypt(k, schemes::ske_encrypt(small, k, bit, rng)) != bit) {
        check.fail("SKE q=" + std::to_string(q) + " n=2 default eta", "bit flipped");
      }
    }
  }
}

void frodo_round_trip(Check& check, const VerifyOptions& opt) {
  Rng rng(derive_seed(opt.seed, 9));
  struct Point {
    unsigned log_q;
    std::size_t n;
    std::uint64_t eta;
    schemes::FrodoDecode decode;
    int trials;
  };
  for (const Point& pt : {Point{15, 64, 2, schemes::FrodoDecode::kRound, 100},
                          Point{15, 64, 0, schemes::FrodoDecode::kTruncate, 100},
                          Point{4, 2, 0, schemes::FrodoDecode::kTruncate, 1000}}) {
    const auto params = schemes::FrodoParams::make(pt.log_q, 2, pt.n, 4, 4, pt.eta, pt.decode);
    const auto kp = schemes::frodo_keygen(params, rng);
    for (int trial = 0; trial < pt.trials && check.ok(); ++trial) {
      ZqMatrix msg(params.message_modulus(), params.m_bar, params.n_bar);
      for (std::size_t i = 0; i < params.m_bar; ++i) {
        for (std::size_t j = 0; j < params.n_bar; ++j) {
          msg.set(i, j, static_cast<std::int64_t>(rng.uniform_below(params.message_modulus())));
        }
      }
      const auto ct = schemes::frodo_encrypt(params, kp.pk, schemes::frodo_encode(params, msg), rng);
      if (schemes::frodo_decrypt(params, kp.s, ct) != msg) {
        check.fail("q=2^" + std::to_string(pt.log_q) + " B=2 n=" + std::to_string(pt.n) +
                       " eta=" + std::to_string(pt.eta) + " trial=" + std::to_string(trial),
                   "decrypted message differs");
      }
    }
  }
}

void ringlwe_round_trip(Check& check, const VerifyOptions& opt) {
  Rng rng(derive_seed(opt.seed, 10));
  const auto params = schemes::RingLweParams::make(257, 4, 2);
  const auto kp = schemes::ringlwe_keygen(params, rng);
  for (int trial = 0; trial < 1000 && check.ok(); ++trial) {
    const int bit = rng.bit();
    if (schemes::ringlwe_decrypt(kp.s, schemes::ringlwe_encrypt(params, kp.pk, bit, rng)) != bit) {
      check.fail("q=257 n=4 eta=2 trial=" + std::to_string(trial), "bit flipped");
    }
  }
  // The constant-term shortcut used by the oracle agrees with the full
  // negacyclic product.
  for (int trial = 0; trial < 1000 && check.ok(); ++trial) {
    const RingPoly u = sample_uniform_poly(257, 4, rng);
    const RingPoly s = sample_uniform_poly(257, 4, rng);
    if (negacyclic_constant_term(u, s) != negacyclic_mul(u, s)[0]) {
      check.fail("q=257 n=4 trial=" + std::to_string(trial), "constant term differs");
    }
  }
}

void single_query_accounting(Check& check, const VerifyOptions& opt) {
  using attacks::AttackKind;
  std::vector<attacks::AttackParams> points;
  auto add = [&points](AttackKind kind, std::uint64_t q, std::size_t n) {
    attacks::AttackParams p;
    p.kind = kind;
    p.q = q;
    p.n = n;
    points.push_back(p);
  };
  add(AttackKind::kLrf, 7, 2);
  add(AttackKind::kSke, 5, 2);
  add(AttackKind::kPke, 5, 2);
  add(AttackKind::kFrodo, 8, 2);
  add(AttackKind::kRingLwe, 5, 2);
  add(AttackKind::kRaShared, 5, 2);
  add(AttackKind::kRaIid, 5, 2);
  for (const auto& p : points) {
    for (std::uint64_t t = 0; t < 20 && check.ok(); ++t) {
      const auto report = attacks::run_trial(p, derive_seed(opt.seed, 100 + t));
      if (report.quantum_queries != 1) {
        check.fail(std::string(attacks::attack_name(p.kind)) + " " +
                       join({{"q", p.q}, {"n", p.n}, {"trial", t}}),
                   "used " + std::to_string(report.quantum_queries) + " quantum queries");
      }
    }
  }
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& options) {
  struct Suite {
    const char* property;
    const char* grid;
    std::function<void(Check&)> run;
  };
  const std::vector<Suite> suites = {
      {"closed-form = brute force", "q<=12, all b, all a, n<=2, 5 unit keys",
       [&](Check& c) { closed_form_vs_brute_force(c, options); }},
      {"unit-key invariance", "q in {5,6,8,9,10,12}, n=2, 20 keys",
       [&](Check& c) { unit_key_invariance(c, options); }},
      {"lower-bound envelope", "q in 2..4096, b=ceil(q/2)",
       [&](Check& c) { lower_bound_envelope(c); }},
      {"partition exhaustiveness", "q<=32, all b, all a",
       [&](Check& c) { partition_exhaustiveness(c); }},
      {"QFT unitarity", "q in 2..16 dense; FFTW vs dense",
       [&](Check& c) { qft_unitarity(c, options); }},
      {"kickback equivalence", "6 (q,n,c) points, random f",
       [&](Check& c) { kickback_equivalence(c, options); }},
      {"LWE decryption = LRF", "q<=17, n<=2, every x",
       [&](Check& c) { lwe_lrf_bridge(c, options); }},
      {"Frodo decryption = LRF", "q=16, B=2, n=2, 1000 ciphertexts",
       [&](Check& c) { frodo_lrf_bridge(c, options); }},
      {"PRF/PRP round trip", "n in {1,8,16,32}, 1000 messages",
       [&](Check& c) { prf_prp_round_trip(c, options); }},
      {"SKE/PKE round trip", "q=257 n=8; q in {7,13} n=2",
       [&](Check& c) { lwe_round_trip(c, options); }},
      {"Frodo round trip", "q=2^15 n=64 eta in {0,2}; q=16 n=2",
       [&](Check& c) { frodo_round_trip(c, options); }},
      {"Ring-LWE round trip", "q=257, n=4, eta=2",
       [&](Check& c) { ringlwe_round_trip(c, options); }},
      {"single-query accounting", "7 quantum attacks, 20 trials",
       [&](Check& c) { single_query_accounting(c, options); }},
  };
  std::vector<CheckResult> results;
  for (const Suite& suite : suites) {
    Check check(suite.property, suite.grid);
    const auto start = std::chrono::steady_clock::now();
    try {
      suite.run(check);
    } catch (const std::exception& e) {
      check.fail("(exception)", e.what());
    }
    results.push_back(check.finish(
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()));
  }
  return results;
}

std::string format_verify_table(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  char line[512];
  std::snprintf(line, sizeof(line), "%-4s  %-26s  %8s  %s\n", "", "property", "seconds",
                "parameter point");
  out << line;
  for (const auto& r : results) {
    std::snprintf(line, sizeof(line), "%-4s  %-26s  %8.2f  %s", r.passed ? "PASS" : "FAIL",
                  r.property.c_str(), r.seconds, r.point.c_str());
    out << line;
    if (!r.passed) out << "  [" << r.detail << ']';
    out << '\n';
  }
  return out.str();
}

}  // namespace qlwe::harness
