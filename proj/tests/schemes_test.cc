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

#include <cstdint>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "qlwe/errors.h"
#include "qlwe/lrf.h"
#include "qlwe/noise.h"
#include "qlwe/random.h"
#include "qlwe/ring_poly.h"
#include "qlwe/schemes/frodo.h"
#include "qlwe/schemes/lwe.h"
#include "qlwe/schemes/ring_lwe.h"
#include "qlwe/schemes/serialization.h"
#include "qlwe/schemes/symmetric.h"
#include "qlwe/zq.h"

namespace qlwe::schemes {
namespace {

SkeParams noiseless_ske(std::uint64_t q, std::size_t n) {
  return SkeParams{q, n, ErrorDistribution::bounded_uniform(q, 0)};
}

TEST(SkeTest, NoiselessEncryption) {
  Rng rng(1);
  const SkeParams p = noiseless_ske(97, 4);
  const SkeKey key = ske_keygen(p, rng);
  const LweCiphertext zero = ske_encrypt(p, key, 0, rng);
  EXPECT_EQ(zero.c, inner_product(zero.a, key.k));
  const LweCiphertext one = ske_encrypt(p, key, 1, rng);
  EXPECT_EQ(sub_mod(one.c, inner_product(one.a, key.k), 97), 97u / 2);
}

TEST(SkeTest, DecryptExamples) {
  const SkeKey key{ZqVector(8, {3, 5})};
  const ZqVector a(8, {1, 1});
  const Residue dot = inner_product(a, key.k);
  EXPECT_EQ(ske_decrypt(key, {a, dot}), 0);
  EXPECT_EQ(ske_decrypt(key, {a, add_mod(dot, 4, 8)}), 1);
  // Boundary: a difference of floor(q/4) = 2 still decrypts to 0.
  EXPECT_EQ(ske_decrypt(key, {a, add_mod(dot, 2, 8)}), 0);
  EXPECT_EQ(ske_decrypt(key, {a, sub_mod(dot, 2, 8)}), 0);
  EXPECT_EQ(ske_decrypt(key, {a, add_mod(dot, 3, 8)}), 1);
  for (std::uint64_t q = 5; q <= 40; ++q) {
    const SkeKey k{ZqVector(q, {1})};
    const ZqVector x(q, {2});
    EXPECT_EQ(ske_decrypt(k, {x, add_mod(2, q / 2, q)}), 1) << q;
  }
}

TEST(SkeTest, RoundTrip) {
  Rng rng(2);
  const SkeParams p{257, 8, ErrorDistribution::bounded_uniform(257, 16)};
  const SkeKey key = ske_keygen(p, rng);
  for (int trial = 0; trial < 1000; ++trial) {
    const int bit = rng.bit();
    ASSERT_EQ(ske_decrypt(key, ske_encrypt(p, key, bit, rng)), bit);
  }
}

TEST(SkeTest, DefaultNoise) {
  EXPECT_EQ(SkeParams::with_defaults(257, 8).noise.eta(), 16u);
  EXPECT_EQ(SkeParams::with_defaults(7, 2).noise.eta(), 1u);
  EXPECT_EQ(default_eta(3), 1u);
}

TEST(SkeTest, DecryptionIsALinearRoundingFunction) {
  // 0 iff <(a, c), (-k, 1)> lands in the block {|z| <= floor(q/4)}.
  for (std::uint64_t q = 2; q <= 17; ++q) {
    const std::uint64_t r = q / 4;
    const LrfParams params(q, 3, neg_mod(r, q), std::min(2 * r + 1, q - 1));
    for (Residue k0 = 0; k0 < q; ++k0) {
      const Residue k1 = (k0 * 5 + 3) % q;
      const std::vector<Residue> key = {k0, k1};
      const std::vector<Residue> k_prime = {neg_mod(k0, q), neg_mod(k1, q), 1};
      for (Residue a0 = 0; a0 < q; ++a0) {
        for (Residue a1 = 0; a1 < q; ++a1) {
          for (Residue c = 0; c < q; ++c) {
            const std::vector<Residue> a = {a0, a1};
            const std::vector<Residue> x = {a0, a1, c};
            const int lrf = lrf_eval(x, k_prime, params) == 0 ? 0 : 1;
            ASSERT_EQ(lwe_decrypt(key, a, c, q), lrf) << "q=" << q;
          }
        }
      }
    }
  }
}

TEST(PkeTest, NoiselessRoundTrip) {
  Rng rng(3);
  PkeParams p = PkeParams::with_defaults(97, 4);
  p.noise = ErrorDistribution::bounded_uniform(97, 0);
  const PkeKeyPair kp = pke_keygen(p, rng);
  for (int trial = 0; trial < 200; ++trial) {
    const int bit = rng.bit();
    ASSERT_EQ(pke_decrypt(kp.sk, pke_encrypt(kp.pk, bit, rng)), bit);
  }
}

TEST(PkeTest, RoundTripWithNoise) {
  Rng rng(4);
  const PkeParams p{257, 8, 64, ErrorDistribution::bounded_uniform(257, 1)};
  const PkeKeyPair kp = pke_keygen(p, rng);
  ASSERT_EQ(kp.pk.a.rows(), 64u);
  for (int trial = 0; trial < 1000; ++trial) {
    const int bit = rng.bit();
    ASSERT_EQ(pke_decrypt(kp.sk, pke_encrypt(kp.pk, bit, rng)), bit);
  }
}

TEST(PkeTest, PublicKeyNoiseIsBounded) {
  Rng rng(5);
  const PkeParams p = PkeParams::with_defaults(257, 4);
  EXPECT_EQ(p.m, default_pke_samples(257, 4));
  EXPECT_EQ(p.m, 2u * 4u * 9u);
  const PkeKeyPair kp = pke_keygen(p, rng);
  const ZqVector e = kp.pk.t - kp.pk.a * kp.sk;
  for (Residue v : e.entries()) EXPECT_LE(centered_abs(v, 257), p.noise.eta());
}

TEST(PkeTest, DecryptionEqualsSke) {
  Rng rng(6);
  const ZqVector sk = sample_uniform_vector(101, 5, rng);
  for (int trial = 0; trial < 1000; ++trial) {
    const LweCiphertext ct{sample_uniform_vector(101, 5, rng), rng.uniform_below(101)};
    ASSERT_EQ(pke_decrypt(sk, ct), ske_decrypt(SkeKey{sk}, ct));
  }
}

TEST(FrodoTest, ParameterValidation) {
  EXPECT_THROW(FrodoParams::make(4, 5, 2, 2, 2, 1), ParameterError);
  EXPECT_THROW(FrodoParams::make(4, 0, 2, 2, 2, 1), ParameterError);
  EXPECT_THROW(FrodoParams::make(33, 2, 2, 2, 2, 1), ParameterError);
  const FrodoParams p = FrodoParams::make(4, 2, 2, 2, 2, 1);
  EXPECT_EQ(p.q(), 16u);
  EXPECT_EQ(p.block(), 4u);
  EXPECT_EQ(p.message_modulus(), 4u);
}

TEST(FrodoTest, TruncateExample) {
  const FrodoParams p = FrodoParams::make(4, 2, 2, 2, 2, 1);
  EXPECT_EQ(frodo_truncate(p, 13), 3u);
  EXPECT_EQ(frodo_truncate(p, 3), 0u);
}

TEST(FrodoTest, ZeroMessageZeroNoise) {
  Rng rng(7);
  const FrodoParams p = FrodoParams::make(8, 2, 4, 3, 2, 0);
  const FrodoKeyPair kp = frodo_keygen(p, rng);
  EXPECT_EQ(kp.pk.b, kp.pk.a * kp.s);
  const ZqMatrix zero(p.message_modulus(), p.m_bar, p.n_bar);
  const FrodoCiphertext ct = frodo_encrypt(p, kp.pk, frodo_encode(p, zero), rng);
  // With zero noise C2 = S'B and C1 = S'A, so C2 = C1 S.
  EXPECT_EQ(ct.c2, ct.c1 * kp.s);
  EXPECT_EQ(frodo_decrypt(p, kp.s, ct), zero);
}

TEST(FrodoTest, ZeroCiphertextDecryptsToZero) {
  Rng rng(8);
  const FrodoParams p = FrodoParams::make(4, 2, 2, 2, 2, 1);
  const FrodoKeyPair kp = frodo_keygen(p, rng);
  const FrodoCiphertext ct{ZqMatrix(16, 2, 2), ZqMatrix(16, 2, 2)};
  EXPECT_TRUE(frodo_decrypt(p, kp.s, ct).is_zero());
}

TEST(FrodoTest, RejectsMalformedMessages) {
  Rng rng(9);
  const FrodoParams p = FrodoParams::make(4, 2, 2, 2, 2, 1);
  const FrodoKeyPair kp = frodo_keygen(p, rng);
  ZqMatrix bad(16, 2, 2);
  bad.set(0, 0, 5);  // low bits set
  EXPECT_THROW(frodo_encrypt(p, kp.pk, bad, rng), ParameterError);
  EXPECT_THROW(frodo_encode(p, ZqMatrix(4, 3, 2)), ShapeError);
}

ZqMatrix random_message(const FrodoParams& p, Rng& rng) {
  ZqMatrix m(p.message_modulus(), p.m_bar, p.n_bar);
  for (std::size_t i = 0; i < p.m_bar; ++i) {
    for (std::size_t j = 0; j < p.n_bar; ++j) {
      m.set(i, j, static_cast<std::int64_t>(rng.uniform_below(p.message_modulus())));
    }
  }
  return m;
}

TEST(FrodoTest, NoiselessRoundTrip) {
  Rng rng(10);
  const FrodoParams p = FrodoParams::make(15, 2, 16, 4, 4, 0);
  const FrodoKeyPair kp = frodo_keygen(p, rng);
  for (int trial = 0; trial < 50; ++trial) {
    const ZqMatrix m = random_message(p, rng);
    ASSERT_EQ(frodo_decrypt(p, kp.s, frodo_encrypt(p, kp.pk, frodo_encode(p, m), rng)), m);
  }
}

TEST(FrodoTest, RoundTripWithNoiseUsesRoundedDecoding) {
  Rng rng(11);
  const FrodoParams p = FrodoParams::make(15, 2, 64, 4, 4, 2, FrodoDecode::kRound);
  const FrodoKeyPair kp = frodo_keygen(p, rng);
  for (int trial = 0; trial < 100; ++trial) {
    const ZqMatrix m = random_message(p, rng);
    ASSERT_EQ(frodo_decrypt(p, kp.s, frodo_encrypt(p, kp.pk, frodo_encode(p, m), rng)), m);
  }
}

TEST(FrodoTest, DecryptionIsALinearRoundingFunction) {
  Rng rng(12);
  const FrodoParams p = FrodoParams::make(4, 2, 2, 2, 2, 1);
  const LrfParams lrf(16, 2, 0, p.block());
  for (int trial = 0; trial < 1000; ++trial) {
    const FrodoKeyPair kp = frodo_keygen(p, rng);
    const ZqMatrix c1 = sample_uniform_matrix(16, 2, 2, rng);
    const ZqMatrix m = frodo_decrypt(p, kp.s, FrodoCiphertext{c1, ZqMatrix(16, 2, 2)});
    // Truncation of C1 S itself is the rounding function keyed by s^j; with
    // C2 = 0 the scheme rounds -C1 S instead.
    const ZqMatrix prod = c1 * kp.s;
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        const ZqVector col = kp.s.column_vector(j);
        ASSERT_EQ(frodo_truncate(p, prod.at(i, j)), lrf_eval(c1.row(i), col.entries(), lrf));
        ASSERT_EQ(m.at(i, j), lrf_eval(c1.row(i), (-col).entries(), lrf));
      }
    }
  }
}

TEST(RingLweTest, RequiresPowerOfTwo) {
  EXPECT_THROW(RingLweParams::make(13, 3, 1), ParameterError);
  EXPECT_NO_THROW(RingLweParams::make(13, 4, 1));
}

TEST(RingLweTest, NoiselessBitOne) {
  Rng rng(13);
  const RingLweParams p = RingLweParams::make(97, 4, 0);
  const RingLweKeyPair kp = ringlwe_keygen(p, rng);
  const RingLweCiphertext ct = ringlwe_encrypt(p, kp.pk, 1, rng);
  const RingPoly diff = ct.v - negacyclic_mul(ct.u, kp.s);
  EXPECT_EQ(diff[0], 97u / 2);
  EXPECT_EQ(ringlwe_decrypt(kp.s, ct), 1);
}

TEST(RingLweTest, ConstantTermIdentity) {
  Rng rng(14);
  for (int trial = 0; trial < 1000; ++trial) {
    const RingPoly u = sample_uniform_poly(257, 8, rng);
    const RingPoly s = sample_uniform_poly(257, 8, rng);
    std::int64_t expect = static_cast<std::int64_t>(u[0] * s[0]);
    for (std::size_t j = 1; j < 8; ++j) expect -= static_cast<std::int64_t>(u[j] * s[8 - j]);
    ASSERT_EQ(negacyclic_mul(u, s)[0], mod_reduce(expect, 257));
    ASSERT_EQ(negacyclic_constant_term(u, s), mod_reduce(expect, 257));
  }
}

TEST(RingLweTest, RoundTrip) {
  Rng rng(15);
  const RingLweParams p = RingLweParams::make(257, 4, 2);
  const RingLweKeyPair kp = ringlwe_keygen(p, rng);
  for (int trial = 0; trial < 1000; ++trial) {
    const int bit = rng.bit();
    ASSERT_EQ(ringlwe_decrypt(kp.s, ringlwe_encrypt(p, kp.pk, bit, rng)), bit);
  }
}

TEST(RingLweTest, ConstantDecryptMatchesFullDecrypt) {
  Rng rng(16);
  const RingPoly s = sample_uniform_poly(13, 4, rng);
  for (int trial = 0; trial < 1000; ++trial) {
    const RingPoly u = sample_uniform_poly(13, 4, rng);
    const Residue v0 = rng.uniform_below(13);
    const RingLweCiphertext ct{u, RingPoly::constant(13, 4, v0)};
    ASSERT_EQ(ringlwe_decrypt_constant(s.coefficients(), u.coefficients(), v0, 13),
              ringlwe_decrypt(s, ct));
  }
}

TEST(RingLweTest, DecryptionIsDeterministic) {
  Rng rng(17);
  const RingLweParams p = RingLweParams::make(257, 4, 2);
  const RingLweKeyPair kp = ringlwe_keygen(p, rng);
  const RingLweCiphertext ct = ringlwe_encrypt(p, kp.pk, 1, rng);
  const int first = ringlwe_decrypt(kp.s, ct);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(ringlwe_decrypt(kp.s, ct), first);
}

TEST(SymmetricTest, PrfRoundTrip) {
  Rng rng(18);
  const ToyPrf prf(rng(), 16);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint64_t m = rng.uniform_below(1 << 16);
    const PrfCiphertext ct = prf_encrypt(prf, m, rng);
    ASSERT_EQ(ct.body, prf(ct.r) ^ m);
    ASSERT_EQ(prf_decrypt(prf, ct), m);
  }
  EXPECT_THROW(prf_encrypt(prf, 1 << 16, rng), ShapeError);
  EXPECT_THROW(ToyPrf(1, 0), ParameterError);
  EXPECT_THROW(ToyPrf(1, 33), ParameterError);
}

TEST(SymmetricTest, PrpRoundTripAndBijection) {
  Rng rng(19);
  for (unsigned half : {1u, 4u, 12u, 32u}) {
    const FeistelPrp prp(rng(), half);
    const std::uint64_t mask = (std::uint64_t{1} << half) - 1;
    for (int trial = 0; trial < 1000; ++trial) {
      const std::uint64_t m = rng() & mask;
      ASSERT_EQ(prp_decrypt(prp, prp_encrypt(prp, m, rng)), m);
      const std::uint64_t block = rng() & (half == 32 ? ~0ULL : (mask << half) | mask);
      ASSERT_EQ(prp.inverse(prp.forward(block)), block);
    }
  }
  // Exhaustive bijection on 8-bit blocks.
  const FeistelPrp small(7, 4);
  std::vector<bool> hit(256, false);
  for (std::uint64_t x = 0; x < 256; ++x) {
    const std::uint64_t y = small.forward(x);
    ASSERT_LT(y, 256u);
    ASSERT_FALSE(hit[y]);
    hit[y] = true;
  }
  EXPECT_THROW(prp_decrypt(small, 256), ShapeError);
}

TEST(SerializationTest, RoundTrips) {
  Rng rng(20);
  const SkeKey key = ske_keygen(SkeParams::with_defaults(17, 3), rng);
  EXPECT_EQ(ske_key_from_json(to_json(key)).k, key.k);
  const nlohmann::json kj = to_json(key);
  EXPECT_EQ(kj.at("scheme"), "ske");
  EXPECT_EQ(kj.at("q"), 17);
  EXPECT_EQ(kj.at("n"), 3);

  const LweCiphertext ct = ske_encrypt(SkeParams::with_defaults(17, 3), key, 1, rng);
  const LweCiphertext ct2 = lwe_ciphertext_from_json(to_json(ct, "ske"));
  EXPECT_EQ(ct2.a, ct.a);
  EXPECT_EQ(ct2.c, ct.c);

  const PkeKeyPair pkp = pke_keygen(PkeParams::with_defaults(17, 2), rng);
  const PkeKeyPair pkp2 = pke_keypair_from_json(to_json(pkp));
  EXPECT_EQ(pkp2.sk, pkp.sk);
  EXPECT_EQ(pkp2.pk.a, pkp.pk.a);
  EXPECT_EQ(pkp2.pk.t, pkp.pk.t);

  const FrodoParams fp = FrodoParams::make(6, 2, 3, 2, 2, 1);
  const FrodoKeyPair fkp = frodo_keygen(fp, rng);
  const FrodoKeyPair fkp2 = frodo_keypair_from_json(to_json(fkp));
  EXPECT_EQ(fkp2.s, fkp.s);
  EXPECT_EQ(fkp2.pk.a, fkp.pk.a);
  EXPECT_EQ(fkp2.pk.b, fkp.pk.b);
  const FrodoCiphertext fct =
      frodo_encrypt(fp, fkp.pk, frodo_encode(fp, ZqMatrix(4, 2, 2)), rng);
  const FrodoCiphertext fct2 = frodo_ciphertext_from_json(to_json(fct));
  EXPECT_EQ(fct2.c1, fct.c1);
  EXPECT_EQ(fct2.c2, fct.c2);

  const RingLweParams rp = RingLweParams::make(13, 4, 1);
  const RingLweKeyPair rkp = ringlwe_keygen(rp, rng);
  const RingLweKeyPair rkp2 = ringlwe_keypair_from_json(to_json(rkp));
  EXPECT_EQ(rkp2.s, rkp.s);
  EXPECT_EQ(rkp2.pk.a, rkp.pk.a);
  EXPECT_EQ(rkp2.pk.c, rkp.pk.c);
  const RingLweCiphertext rct = ringlwe_encrypt(rp, rkp.pk, 1, rng);
  const RingLweCiphertext rct2 = ringlwe_ciphertext_from_json(to_json(rct));
  EXPECT_EQ(rct2.u, rct.u);
  EXPECT_EQ(rct2.v, rct.v);
}

TEST(SerializationTest, RejectsMalformedInput) {
  EXPECT_THROW(ske_key_from_json(nlohmann::json{{"scheme", "pke"}, {"q", 7}, {"n", 1}, {"k", {1}}}),
               ShapeError);
  EXPECT_THROW(ske_key_from_json(nlohmann::json{{"scheme", "ske"}, {"q", 7}, {"n", 2}, {"k", {1}}}),
               ShapeError);
  EXPECT_THROW(ske_key_from_json(nlohmann::json{{"scheme", "ske"}, {"q", 7}, {"n", 1}, {"k", {9}}}),
               ParameterError);
}

}  // namespace
}  // namespace qlwe::schemes
