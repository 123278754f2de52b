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

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "qlwe/errors.h"
#include "qlwe/qsim/operations.h"
#include "qlwe/qsim/register_layout.h"
#include "qlwe/qsim/state_vector.h"
#include "qlwe/random.h"

namespace qlwe::qsim {
namespace {

constexpr double kTol = 1e-9;

StateVector random_state(const RegisterLayout& layout, Rng& rng) {
  AmplitudeBuffer amps(layout.total());
  double norm = 0.0;
  for (Amplitude& a : amps) {
    a = Amplitude(rng.standard_normal(), rng.standard_normal());
    norm += std::norm(a);
  }
  for (Amplitude& a : amps) a /= std::sqrt(norm);
  return StateVector(layout, std::move(amps));
}

std::vector<std::size_t> all_registers(const StateVector& s) {
  std::vector<std::size_t> regs(s.layout().num_registers());
  std::iota(regs.begin(), regs.end(), std::size_t{0});
  return regs;
}

StateVector basis(std::vector<std::uint64_t> dims, std::vector<std::uint64_t> tuple) {
  return basis_state(RegisterLayout(std::move(dims)), tuple);
}

// Restores the cap after tests that shrink it.
class CapGuard {
 public:
  CapGuard() : saved_(max_amplitudes()) {}
  ~CapGuard() { set_max_amplitudes(saved_); }

 private:
  std::size_t saved_;
};

TEST(RegisterLayoutTest, IndexTupleBijection) {
  for (const auto& dims : std::vector<std::vector<std::uint64_t>>{
           {2}, {3, 4}, {5, 2, 7}, {10, 10, 10, 10}, {2, 3, 5, 7, 11}}) {
    const RegisterLayout layout(dims);
    ASSERT_LE(layout.total(), 10000u);
    std::vector<bool> seen(layout.total(), false);
    for (std::size_t i = 0; i < layout.total(); ++i) {
      const auto tuple = layout.tuple_of(i);
      ASSERT_EQ(tuple.size(), dims.size());
      for (std::size_t r = 0; r < dims.size(); ++r) ASSERT_LT(tuple[r], dims[r]);
      const std::size_t back = layout.index_of(tuple);
      ASSERT_EQ(back, i);
      ASSERT_FALSE(seen[back]);
      seen[back] = true;
    }
  }
}

TEST(RegisterLayoutTest, RowMajorOrder) {
  const RegisterLayout layout({3, 4});
  const std::uint64_t t[] = {1, 2};
  EXPECT_EQ(layout.index_of(t), 6u);
  EXPECT_EQ(layout.stride(0), 4u);
  EXPECT_EQ(layout.stride(1), 1u);
}

TEST(RegisterLayoutTest, RejectsBadDimensionsAndCap) {
  CapGuard guard;
  EXPECT_THROW(RegisterLayout({3, 1}), ParameterError);
  set_max_amplitudes(100);
  EXPECT_THROW(RegisterLayout({11, 10}), ResourceError);
  EXPECT_THROW(uniform_superposition(RegisterLayout::uniform(5, 3)), ResourceError);
  EXPECT_NO_THROW(RegisterLayout({10, 10}));
}

TEST(RegisterLayoutTest, DefaultCap) { EXPECT_EQ(kDefaultMaxAmplitudes, std::size_t{1} << 24); }

TEST(UniformSuperpositionTest, Examples) {
  const StateVector two = uniform_superposition(RegisterLayout({2}));
  for (const Amplitude& a : two.amplitudes()) EXPECT_NEAR(std::abs(a - 1.0 / std::sqrt(2.0)), 0, kTol);
  const StateVector nine = uniform_superposition(RegisterLayout({3, 3}));
  ASSERT_EQ(nine.size(), 9u);
  for (const Amplitude& a : nine.amplitudes()) EXPECT_NEAR(std::abs(a - 1.0 / 3.0), 0, kTol);
  EXPECT_NEAR(uniform_superposition(RegisterLayout({5, 5, 5})).norm_squared(), 1.0, kTol);
}

TEST(UniformTensorTest, MatchesTensorOfUniform) {
  const RegisterLayout layout({3, 4});
  const StateVector eigen = phase_eigenstate(5);
  const StateVector fused = uniform_tensor(layout, eigen);
  const StateVector reference = tensor(uniform_superposition(layout), eigen);
  EXPECT_LE(max_abs_difference(fused, reference), kTol);
}

TEST(PhaseEigenstateTest, Examples) {
  const StateVector two = phase_eigenstate(2);
  EXPECT_NEAR(std::abs(two.amplitudes()[0] - Amplitude(1 / std::sqrt(2.0), 0)), 0, kTol);
  EXPECT_NEAR(std::abs(two.amplitudes()[1] - Amplitude(-1 / std::sqrt(2.0), 0)), 0, kTol);
  const StateVector four = phase_eigenstate(4);
  const Amplitude expect[] = {{0.5, 0}, {0, 0.5}, {-0.5, 0}, {0, -0.5}};
  for (int z = 0; z < 4; ++z) EXPECT_NEAR(std::abs(four.amplitudes()[z] - expect[z]), 0, kTol);
  for (std::uint64_t c = 2; c <= 40; ++c) {
    const StateVector s = phase_eigenstate(c);
    const Amplitude sum = std::accumulate(s.amplitudes().begin(), s.amplitudes().end(), Amplitude{});
    EXPECT_NEAR(std::abs(sum), 0.0, kTol) << c;
    EXPECT_NEAR(s.norm_squared(), 1.0, kTol);
  }
  EXPECT_THROW(phase_eigenstate(1), ParameterError);
}

TEST(AdditiveOracleTest, ZeroFunctionIsIdentity) {
  Rng rng(1);
  const StateVector psi = random_state(RegisterLayout({3, 4, 5}), rng);
  const StateVector out = apply_additive_oracle(psi, 2, [](auto) { return std::uint64_t{0}; });
  EXPECT_LE(max_abs_difference(out, psi), kTol);
}

TEST(AdditiveOracleTest, ClassicalActionOnBasisStates) {
  const ClassicalFunction f = [](std::span<const std::uint64_t> x) { return x[0] * 2 + x[1]; };
  for (std::uint64_t x0 = 0; x0 < 3; ++x0) {
    for (std::uint64_t x1 = 0; x1 < 3; ++x1) {
      const StateVector out = apply_additive_oracle(basis({3, 3, 5}, {x0, x1, 0}), 2, f);
      const std::uint64_t expect[] = {x0, x1, (2 * x0 + x1) % 5};
      EXPECT_NEAR(std::abs(out.amplitude(expect)), 1.0, kTol);
    }
  }
}

TEST(AdditiveOracleTest, OrderDividesTargetDimension) {
  Rng rng(2);
  for (std::uint64_t c : {2, 3, 5}) {
    std::vector<std::uint64_t> table(16);
    for (auto& v : table) v = rng.uniform_below(100);
    const ClassicalFunction f = [&](std::span<const std::uint64_t> x) {
      return table[x[0] * 4 + x[1]];
    };
    const StateVector psi = random_state(RegisterLayout({4, 4, c}), rng);
    StateVector s = psi;
    for (std::uint64_t i = 0; i < c; ++i) {
      s = apply_additive_oracle(std::move(s), 2, f);
      ASSERT_NEAR(s.norm_squared(), 1.0, kTol);
    }
    EXPECT_LE(max_abs_difference(s, psi), kTol);
  }
}

TEST(AdditiveOracleTest, ExplicitInputListAndTargetInMiddle) {
  // Target in the middle, inputs listed out of order: exercises the general path.
  const ClassicalFunction f = [](std::span<const std::uint64_t> x) { return x[0] + 3 * x[1]; };
  const std::size_t inputs[] = {2, 0};
  for (std::uint64_t a = 0; a < 2; ++a) {
    for (std::uint64_t b = 0; b < 3; ++b) {
      const StateVector out = apply_additive_oracle(basis({2, 4, 3}, {a, 1, b}), inputs, 1, f);
      const std::uint64_t expect[] = {a, (1 + b + 3 * a) % 4, b};
      EXPECT_NEAR(std::abs(out.amplitude(expect)), 1.0, kTol);
    }
  }
  const std::size_t bad[] = {1, 0};
  EXPECT_THROW(apply_additive_oracle(basis({2, 4, 3}, {0, 0, 0}), bad, 1, f), ShapeError);
}

TEST(PhaseOracleTest, Examples) {
  Rng rng(3);
  const StateVector psi = random_state(RegisterLayout({3, 3}), rng);
  const std::size_t regs[] = {0, 1};
  EXPECT_LE(max_abs_difference(
                apply_phase_oracle(psi, regs, [](auto) { return std::uint64_t{0}; }, 5), psi),
            kTol);
  const std::size_t first[] = {0};
  const StateVector out = apply_phase_oracle(uniform_superposition(RegisterLayout({2})), first,
                                             [](std::span<const std::uint64_t> x) { return x[0]; }, 2);
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(out.amplitudes()[0] - Amplitude(h, 0)), 0, kTol);
  EXPECT_NEAR(std::abs(out.amplitudes()[1] - Amplitude(-h, 0)), 0, kTol);
}

TEST(PhaseOracleTest, KickbackEquivalence) {
  Rng rng(4);
  for (std::uint64_t q = 2; q <= 9; ++q) {
    for (std::uint64_t c = 2; c <= 9; ++c) {
      const RegisterLayout inputs({q, q});
      const StateVector eigen = phase_eigenstate(c);
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::uint64_t> table(q * q);
        for (auto& v : table) v = rng.uniform_below(c);
        const ClassicalFunction f = [&](std::span<const std::uint64_t> x) {
          return table[x[0] * q + x[1]];
        };
        const StateVector psi = random_state(inputs, rng);
        const std::size_t regs[] = {0, 1};
        const StateVector lhs = apply_additive_oracle(tensor(psi, eigen), 2, f);
        const StateVector rhs = tensor(apply_phase_oracle(psi, regs, f, c), eigen);
        ASSERT_LE(max_abs_difference(lhs, rhs), kTol) << "q=" << q << " c=" << c;
      }
    }
  }
}

TEST(QftTest, HadamardAndUniform) {
  for (QftBackend backend : {QftBackend::kDense, QftBackend::kFftw}) {
    const StateVector h = qft(basis({2}, {0}), 0, backend);
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(h.amplitudes()[0] - Amplitude(r, 0)), 0, kTol);
    EXPECT_NEAR(std::abs(h.amplitudes()[1] - Amplitude(r, 0)), 0, kTol);
    const StateVector hi = inverse_qft(basis({2}, {1}), 0, backend);
    EXPECT_NEAR(std::abs(hi.amplitudes()[1] - Amplitude(-r, 0)), 0, kTol);
    for (std::uint64_t q : {3, 7, 12}) {
      const StateVector u = qft(basis({q}, {0}), 0, backend);
      EXPECT_LE(max_abs_difference(u, uniform_superposition(RegisterLayout({q}))), kTol);
      const StateVector zero = inverse_qft(uniform_superposition(RegisterLayout({q})), 0, backend);
      EXPECT_LE(max_abs_difference(zero, basis({q}, {0})), kTol);
    }
  }
}

TEST(QftTest, KernelSign) {
  // QFT|1> over Z_5 has amplitude w^y / sqrt(5) with w = exp(2 pi i / 5).
  for (QftBackend backend : {QftBackend::kDense, QftBackend::kFftw}) {
    const StateVector out = qft(basis({5}, {1}), 0, backend);
    for (std::uint64_t y = 0; y < 5; ++y) {
      const Amplitude expect = std::polar(1.0 / std::sqrt(5.0), 2 * std::numbers::pi * y / 5.0);
      EXPECT_NEAR(std::abs(out.amplitudes()[y] - expect), 0, kTol);
    }
  }
}

TEST(QftTest, InverseRoundTrip) {
  Rng rng(5);
  for (std::uint64_t q : {3, 4, 7, 8}) {
    const StateVector psi = random_state(RegisterLayout({q, 3, q}), rng);
    for (QftBackend backend : {QftBackend::kDense, QftBackend::kFftw}) {
      const auto regs = all_registers(psi);
      const StateVector back = inverse_qft(qft(psi, regs, backend), regs, backend);
      EXPECT_LE(max_abs_difference(back, psi), kTol);
      const StateVector one = inverse_qft(qft(psi, 1, backend), 1, backend);
      EXPECT_LE(max_abs_difference(one, psi), kTol);
    }
  }
}

TEST(QftTest, PreservesInnerProducts) {
  Rng rng(6);
  for (std::uint64_t q = 2; q <= 16; ++q) {
    const RegisterLayout layout({q, 2});
    const StateVector u = random_state(layout, rng);
    const StateVector v = random_state(layout, rng);
    for (QftBackend backend : {QftBackend::kDense, QftBackend::kFftw}) {
      const std::size_t reg[] = {0};
      const Amplitude before = inner_product(u, v);
      const Amplitude after = inner_product(qft(u, reg, backend), qft(v, reg, backend));
      ASSERT_NEAR(std::abs(before - after), 0, kTol) << q;
    }
  }
}

TEST(QftTest, BackendsAgree) {
  Rng rng(7);
  const StateVector psi = random_state(RegisterLayout({5, 6, 7}), rng);
  const std::size_t regs[] = {0, 2};
  EXPECT_LE(max_abs_difference(qft(psi, regs, QftBackend::kDense), qft(psi, regs, QftBackend::kFftw)),
            kTol);
  EXPECT_LE(max_abs_difference(inverse_qft(psi, regs, QftBackend::kDense),
                               inverse_qft(psi, regs, QftBackend::kFftw)),
            kTol);
}

TEST(OutcomeProbabilityTest, Examples) {
  const StateVector u = uniform_superposition(RegisterLayout({6}));
  const std::size_t reg[] = {0};
  for (std::uint64_t y = 0; y < 6; ++y) {
    const std::uint64_t o[] = {y};
    EXPECT_NEAR(outcome_probability(u, reg, o), 1.0 / 6.0, kTol);
  }
  const StateVector b = basis({3, 4}, {2, 1});
  const std::size_t both[] = {0, 1};
  const std::uint64_t match[] = {2, 1};
  EXPECT_NEAR(outcome_probability(b, both, match), 1.0, kTol);
  Rng rng(8);
  const StateVector psi = random_state(RegisterLayout({3, 4, 2}), rng);
  const std::size_t two[] = {0, 2};
  double total = 0.0;
  for (std::uint64_t x = 0; x < 3; ++x) {
    for (std::uint64_t z = 0; z < 2; ++z) {
      const std::uint64_t o[] = {x, z};
      total += outcome_probability(psi, two, o);
    }
  }
  EXPECT_NEAR(total, 1.0, kTol);
  const auto dist = register_distribution(psi, 1);
  EXPECT_NEAR(std::accumulate(dist.begin(), dist.end(), 0.0), 1.0, kTol);
}

TEST(MeasureTest, BasisStateIsDeterministic) {
  Rng rng(9);
  const StateVector b = basis({3, 5}, {2, 4});
  for (int i = 0; i < 20; ++i) EXPECT_EQ(measure_all(b, rng), (std::vector<std::uint64_t>{2, 4}));
}

TEST(MeasureTest, UniformFrequencies) {
  Rng rng(10);
  const StateVector u = uniform_superposition(RegisterLayout({5}));
  const int shots = 10000;
  std::vector<int> count(5, 0);
  for (int i = 0; i < shots; ++i) ++count[measure_all(u, rng)[0]];
  const double sigma = std::sqrt(0.2 * 0.8 / shots);
  for (int c : count) EXPECT_LE(std::abs(c / static_cast<double>(shots) - 0.2), 3 * sigma);
}

TEST(MeasureTest, SeedDeterminism) {
  Rng seed_rng(11);
  const StateVector psi = random_state(RegisterLayout({4, 4}), seed_rng);
  Rng a(99);
  Rng b(99);
  const std::size_t regs[] = {1};
  for (int i = 0; i < 100; ++i) ASSERT_EQ(measure(psi, regs, a), measure(psi, regs, b));
}

TEST(DiscardRegisterTest, ProductStateFactorsOut) {
  Rng rng(12);
  const StateVector psi = random_state(RegisterLayout({3, 4}), rng);
  const StateVector eigen = phase_eigenstate(5);
  const StateVector joint = tensor(psi, eigen);
  EXPECT_LE(max_abs_difference(discard_register(joint, 2, eigen), psi), kTol);
  // Without a supplied factor only the global phase may differ.
  const StateVector reduced = discard_register(joint, 2);
  EXPECT_NEAR(std::abs(inner_product(reduced, psi)), 1.0, kTol);
}

TEST(DiscardRegisterTest, SucceedsAfterKickback) {
  const ClassicalFunction f = [](std::span<const std::uint64_t> x) { return (x[0] + 2 * x[1]) % 3; };
  const StateVector eigen = phase_eigenstate(3);
  const StateVector s =
      apply_additive_oracle(tensor(uniform_superposition(RegisterLayout({4, 4})), eigen), 2, f);
  EXPECT_NO_THROW(discard_register(s, 2, eigen));
  EXPECT_NEAR(discard_register(s, 2).norm_squared(), 1.0, kTol);
}

TEST(DiscardRegisterTest, EntangledRegisterRaises) {
  const ClassicalFunction f = [](std::span<const std::uint64_t> x) { return x[0] % 2; };
  const StateVector s = apply_additive_oracle(
      tensor(uniform_superposition(RegisterLayout({4})), basis({2}, {0})), 1, f);
  EXPECT_THROW(discard_register(s, 1), ContractViolation);
  EXPECT_THROW(discard_register(s, 1, basis({2}, {0})), ContractViolation);
}

TEST(NormTest, OperationsPreserveNorm) {
  Rng rng(13);
  StateVector s = random_state(RegisterLayout({6, 5, 3}), rng);
  const ClassicalFunction f = [](std::span<const std::uint64_t> x) { return x[0] * x[1]; };
  s = apply_additive_oracle(std::move(s), 2, f);
  EXPECT_NEAR(s.norm_squared(), 1.0, kTol);
  const std::size_t regs[] = {0, 1};
  s = apply_phase_oracle(std::move(s), regs, f, 7);
  EXPECT_NEAR(s.norm_squared(), 1.0, kTol);
  s = qft(std::move(s), regs);
  EXPECT_NEAR(s.norm_squared(), 1.0, kTol);
  EXPECT_TRUE(s.is_normalized());
}

}  // namespace
}  // namespace qlwe::qsim
