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
#include <cstdint>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "qlwe/errors.h"
#include "qlwe/noise.h"
#include "qlwe/random.h"
#include "qlwe/ring_poly.h"
#include "qlwe/zq.h"

namespace qlwe {
namespace {

TEST(ModReduceTest, Examples) {
  EXPECT_EQ(mod_reduce(-1, 7), 6u);
  EXPECT_EQ(mod_reduce(0, 5), 0u);
  EXPECT_EQ(mod_reduce(13, 5), 3u);
  EXPECT_EQ(mod_reduce(INT64_MIN, 7), static_cast<Residue>((INT64_MIN % 7 + 7) % 7));
}

TEST(ModReduceTest, RejectsSmallModulus) {
  EXPECT_THROW(mod_reduce(3, 1), ParameterError);
  EXPECT_THROW(mod_reduce(3, 0), ParameterError);
}

TEST(ModReduceTest, Idempotent) {
  for (std::uint64_t q = 2; q <= 40; ++q) {
    for (std::int64_t x = -200; x <= 200; ++x) {
      const Residue r = mod_reduce(x, q);
      ASSERT_LT(r, q);
      ASSERT_EQ(mod_reduce(static_cast<std::int64_t>(r), q), r);
      ASSERT_EQ((static_cast<std::int64_t>(r) - x) % static_cast<std::int64_t>(q), 0);
    }
  }
}

TEST(CenteredAbsTest, Examples) {
  EXPECT_EQ(centered_abs(6, 7), 1u);
  EXPECT_EQ(centered_abs(3, 7), 3u);
  EXPECT_EQ(centered_abs(0, 9), 0u);
  EXPECT_THROW(centered_abs(7, 7), ParameterError);
}

TEST(CenteredAbsTest, SymmetricUnderNegation) {
  for (std::uint64_t q = 2; q <= 50; ++q) {
    for (Residue x = 0; x < q; ++x) {
      ASSERT_EQ(centered_abs(x, q), centered_abs(neg_mod(x, q), q)) << "q=" << q << " x=" << x;
      ASSERT_LE(centered_abs(x, q), q / 2);
    }
  }
}

TEST(CenteredTest, RangeIsHalfOpen) {
  EXPECT_EQ(centered(4, 8), 4);
  EXPECT_EQ(centered(5, 8), -3);
  EXPECT_EQ(centered(3, 7), 3);
  EXPECT_EQ(centered(4, 7), -3);
}

TEST(InnerProductTest, Examples) {
  EXPECT_EQ(inner_product(ZqVector(7, {1, 0}), ZqVector(7, {5, 3})), 5u);
  EXPECT_EQ(inner_product(ZqVector(7, {0, 0, 0}), ZqVector(7, {5, 3, 6})), 0u);
  EXPECT_EQ(inner_product(ZqVector(5, {2, 3}), ZqVector(5, {3, 4})), 3u);
}

TEST(InnerProductTest, ShapeErrors) {
  EXPECT_THROW(inner_product(ZqVector(7, {1, 2}), ZqVector(7, {1})), ShapeError);
  EXPECT_THROW(inner_product(ZqVector(7, {1, 2}), ZqVector(5, {1, 2})), ShapeError);
}

TEST(InnerProductTest, SpanFormRejectsUnreducedEntries) {
  const std::vector<Residue> x = {1, 9};
  const std::vector<Residue> y = {1, 1};
  EXPECT_THROW(inner_product(x, y, 7), ParameterError);
}

TEST(InnerProductTest, Bilinear) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t q = 2 + rng.uniform_below(1000);
    const std::size_t n = 1 + rng.uniform_below(8);
    const ZqVector x = sample_uniform_vector(q, n, rng);
    const ZqVector y = sample_uniform_vector(q, n, rng);
    const ZqVector z = sample_uniform_vector(q, n, rng);
    const Residue s = rng.uniform_below(q);
    ASSERT_EQ(inner_product(x + y, z), add_mod(inner_product(x, z), inner_product(y, z), q));
    ASSERT_EQ(inner_product(x.scaled(s), z), mul_mod(s, inner_product(x, z), q));
    ASSERT_EQ(inner_product(x, z), inner_product(z, x));
  }
}

TEST(InnerProductTest, LargeModulusDoesNotOverflow) {
  const std::uint64_t q = kMaxModulus;
  const std::vector<Residue> x(64, q - 1);
  // (q-1)^2 * 64 mod q = 64 mod q since q-1 = -1.
  EXPECT_EQ(inner_product(x, x, q), 64u);
}

TEST(ZqVectorTest, EntriesMustBeReduced) {
  EXPECT_THROW(ZqVector(5, {1, 5}), ParameterError);
  EXPECT_THROW(ZqVector(1, std::size_t{3}), ParameterError);
  ZqVector v(5, std::size_t{2});
  v.set(0, -1);
  EXPECT_EQ(v[0], 4u);
  EXPECT_EQ(v.size(), 2u);
}

TEST(ZqMatrixTest, ProductsMatchDefinition) {
  Rng rng(3);
  const ZqMatrix a = sample_uniform_matrix(11, 3, 4, rng);
  const ZqMatrix b = sample_uniform_matrix(11, 4, 2, rng);
  const ZqMatrix c = a * b;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      EXPECT_EQ(c.at(i, j), inner_product(a.row_vector(i), b.column_vector(j)));
    }
  }
  const ZqVector v = sample_uniform_vector(11, 4, rng);
  const ZqVector av = a * v;
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(av[i], inner_product(a.row_vector(i), v));
  const ZqVector w = sample_uniform_vector(11, 3, rng);
  const ZqVector wa = a.left_multiply(w);
  for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(wa[j], inner_product(w, a.column_vector(j)));
  EXPECT_THROW(a * a, ShapeError);
}

TEST(NegacyclicMulTest, Examples) {
  const RingPoly one = RingPoly::constant(5, 4, 1);
  const RingPoly p(5, {1, 2, 3, 4});
  EXPECT_EQ(negacyclic_mul(one, p), p);

  const RingPoly x(5, {0, 1, 0, 0});
  const RingPoly x3(5, {0, 0, 0, 1});
  EXPECT_EQ(negacyclic_mul(x, x3), RingPoly(5, {4, 0, 0, 0}));

  EXPECT_EQ(negacyclic_mul(RingPoly(7, {1, 1}), RingPoly(7, {2, 3})), RingPoly(7, {6, 5}));
}

TEST(NegacyclicMulTest, RejectsMismatchAndNonPowerOfTwo) {
  EXPECT_THROW(negacyclic_mul(RingPoly(7, {1, 1}), RingPoly(5, {1, 1})), ShapeError);
  EXPECT_THROW(negacyclic_mul(RingPoly(7, {1, 1}), RingPoly(7, {1, 1, 0, 0})), ShapeError);
  EXPECT_THROW(RingPoly(7, {1, 1, 1}), ParameterError);
}

// Full schoolbook product of degree 2n-2, then fold x^n -> -1.
RingPoly schoolbook(const RingPoly& u, const RingPoly& s) {
  const std::size_t n = u.degree_bound();
  const std::uint64_t q = u.modulus();
  std::vector<std::int64_t> full(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      full[i + j] += static_cast<std::int64_t>(u[i] * s[j] % q);
    }
  }
  std::vector<Residue> out(n);
  for (std::size_t k = 0; k < full.size(); ++k) {
    const std::int64_t term = k < n ? full[k] : -full[k];
    out[k % n] = mod_reduce(static_cast<std::int64_t>(out[k % n]) + term, q);
  }
  return RingPoly(q, std::move(out));
}

TEST(NegacyclicMulTest, AgreesWithFoldedSchoolbook) {
  Rng rng(5);
  for (std::size_t n : {2, 4, 8}) {
    for (std::uint64_t q = 2; q <= 17; ++q) {
      for (int trial = 0; trial < 100; ++trial) {
        const RingPoly u = sample_uniform_poly(q, n, rng);
        const RingPoly s = sample_uniform_poly(q, n, rng);
        const RingPoly prod = negacyclic_mul(u, s);
        ASSERT_EQ(prod, schoolbook(u, s)) << "n=" << n << " q=" << q;
        ASSERT_EQ(negacyclic_constant_term(u, s), prod[0]);
      }
    }
  }
}

TEST(SampleErrorTest, DegenerateAndSupport) {
  Rng rng(1);
  const auto zero = ErrorDistribution::bounded_uniform(7, 0);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(sample_error(zero, rng), 0u);
  const auto one = ErrorDistribution::bounded_uniform(7, 1);
  bool seen[7] = {};
  for (int i = 0; i < 1000; ++i) {
    const Residue e = sample_error(one, rng);
    ASSERT_TRUE(e == 0 || e == 1 || e == 6) << e;
    seen[e] = true;
  }
  EXPECT_TRUE(seen[0] && seen[1] && seen[6]);
}

TEST(SampleErrorTest, RoundedGaussianRespectsCutoff) {
  Rng rng(2);
  const auto dist = ErrorDistribution::rounded_gaussian(101, 4);
  for (int i = 0; i < 10000; ++i) {
    const std::int64_t e = sample_centered_error(dist, rng);
    ASSERT_LE(std::abs(e), 4);
  }
}

TEST(SampleErrorTest, PmfIsSymmetric) {
  for (const auto& dist : {ErrorDistribution::bounded_uniform(17, 3),
                           ErrorDistribution::rounded_gaussian(17, 5)}) {
    const auto pmf = dist.centered_pmf();
    ASSERT_EQ(pmf.size(), 2 * dist.eta() + 1);
    EXPECT_NEAR(std::accumulate(pmf.begin(), pmf.end(), 0.0), 1.0, 1e-12);
    for (std::size_t i = 0; i < pmf.size(); ++i) EXPECT_DOUBLE_EQ(pmf[i], pmf[pmf.size() - 1 - i]);
  }
}

TEST(SampleErrorTest, MeanIsZeroWithinThreeSigma) {
  Rng rng(9);
  const auto dist = ErrorDistribution::bounded_uniform(97, 5);
  const int draws = 100000;
  double sum = 0.0;
  for (int i = 0; i < draws; ++i) sum += static_cast<double>(sample_centered_error(dist, rng));
  // Variance of the uniform law on [-5, 5] is (11^2 - 1) / 12 = 10.
  const double sigma = std::sqrt(10.0 / draws);
  EXPECT_LE(std::abs(sum / draws), 3.0 * sigma);
}

TEST(SampleErrorTest, ReproducibleFromSeed) {
  const auto dist = ErrorDistribution::bounded_uniform(257, 16);
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(sample_error(dist, a), sample_error(dist, b));
}

TEST(SampleHammingVectorTest, Weights) {
  Rng rng(4);
  const auto one = sample_hamming_vector(1, rng);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], 0);
  for (int i = 0; i < 100; ++i) {
    const auto v = sample_hamming_vector(4, rng);
    ASSERT_EQ(std::accumulate(v.begin(), v.end(), 0), 2);
  }
}

TEST(SampleHammingVectorTest, PositionsAreUniform) {
  Rng rng(8);
  const std::size_t m = 10;
  const int draws = 10000;
  std::vector<int> count(m, 0);
  for (int i = 0; i < draws; ++i) {
    const auto v = sample_hamming_vector(m, rng);
    for (std::size_t j = 0; j < m; ++j) count[j] += v[j];
  }
  const double sigma = std::sqrt(0.25 / draws);
  for (std::size_t j = 0; j < m; ++j) {
    EXPECT_LE(std::abs(count[j] / static_cast<double>(draws) - 0.5), 3.0 * sigma) << j;
  }
}

TEST(HasUnitEntryTest, Examples) {
  EXPECT_TRUE(has_unit_entry(ZqVector(8, {0, 0, 1})));
  EXPECT_FALSE(has_unit_entry(ZqVector(8, {2, 4, 6})));
  EXPECT_FALSE(has_unit_entry(ZqVector(8, {0, 0, 0})));
  EXPECT_FALSE(has_unit_entry(ZqVector(13, {0, 0})));
}

TEST(TotientTest, Examples) {
  EXPECT_EQ(totient(1), 1u);
  EXPECT_EQ(totient(7), 6u);
  EXPECT_EQ(totient(12), 4u);
  for (std::uint64_t q = 1; q <= 200; ++q) {
    std::uint64_t count = 0;
    for (std::uint64_t x = 1; x <= q; ++x) count += gcd(x, q) == 1 ? 1 : 0;
    ASSERT_EQ(totient(q), count) << q;
  }
}

TEST(DeriveSeedTest, DistinctPerCounter) {
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t t = 0; t < 1000; ++t) seeds.push_back(derive_seed(0, t));
  std::sort(seeds.begin(), seeds.end());
  EXPECT_EQ(std::adjacent_find(seeds.begin(), seeds.end()), seeds.end());
  EXPECT_EQ(derive_seed(5, 3), derive_seed(5, 3));
  EXPECT_NE(derive_seed(5, 3), derive_seed(6, 3));
}

}  // namespace
}  // namespace qlwe

namespace qlwe {
namespace {

TEST(FixedModulusTest, MatchesDivision) {
  Rng rng(41);
  for (std::uint64_t q : {2ull, 3ull, 7ull, 13ull, 257ull, 65537ull, 4294967291ull, 4294967295ull,
                          4294967296ull, 4294967311ull}) {
    const FixedModulus m(q);
    EXPECT_EQ(m.value(), q);
    const std::uint64_t edges[] = {0, 1, q - 1, q, q + 1, 0xFFFFFFFFu, 0x100000000u, ~0ull};
    for (std::uint64_t x : edges) {
      ASSERT_EQ(m.reduce(x), x % q) << "q=" << q << " x=" << x;
    }
    for (int i = 0; i < 10000; ++i) {
      const std::uint64_t x = i % 2 == 0 ? rng() & 0xFFFFFFFFu : rng();
      ASSERT_EQ(m.reduce(x), x % q) << "q=" << q << " x=" << x;
    }
  }
}

}  // namespace
}  // namespace qlwe
