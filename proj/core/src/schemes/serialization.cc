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

#include "qlwe/schemes/serialization.h"

#include <string>
#include <utility>
#include <vector>

#include "qlwe/errors.h"

namespace qlwe::schemes {

namespace {

using nlohmann::json;

json header(std::string_view scheme, std::uint64_t q, std::size_t n) {
  return json{{"scheme", scheme}, {"q", q}, {"n", n}};
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw ShapeError(std::string("missing JSON field '") + name + "'");
  }
  return j.at(name);
}

template <typename T>
T get(const json& j, const char* name) {
  try {
    return field(j, name).get<T>();
  } catch (const json::exception& e) {
    throw ShapeError(std::string("bad JSON field '") + name + "': " + e.what());
  }
}

void expect_scheme(const json& j, std::string_view scheme) {
  if (get<std::string>(j, "scheme") != scheme) {
    throw ShapeError("expected scheme '" + std::string(scheme) + "'");
  }
}

std::vector<Residue> entries(const json& j, const char* name, std::size_t expected) {
  auto out = get<std::vector<Residue>>(j, name);
  if (out.size() != expected) {
    throw ShapeError(std::string("field '") + name + "' has " + std::to_string(out.size()) +
                     " entries, expected " + std::to_string(expected));
  }
  return out;
}

json matrix_json(const ZqMatrix& m) {
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", m.entries()}};
}

ZqMatrix matrix_from(const json& j, const char* name, std::uint64_t q) {
  const json& m = field(j, name);
  const auto rows = get<std::size_t>(m, "rows");
  const auto cols = get<std::size_t>(m, "cols");
  return ZqMatrix(q, rows, cols, entries(m, "entries", rows * cols));
}

std::vector<Residue> poly_entries(const RingPoly& p) {
  return {p.coefficients().begin(), p.coefficients().end()};
}

}  // namespace

json to_json(const SkeKey& key) {
  json j = header("ske", key.k.modulus(), key.k.size());
  j["k"] = key.k.entries();
  return j;
}

SkeKey ske_key_from_json(const json& j) {
  expect_scheme(j, "ske");
  const auto q = get<std::uint64_t>(j, "q");
  const auto n = get<std::size_t>(j, "n");
  return SkeKey{ZqVector(q, entries(j, "k", n))};
}

json to_json(const LweCiphertext& ct, std::string_view scheme) {
  if (scheme != "ske" && scheme != "pke") throw ParameterError("LWE ciphertext scheme");
  json j = header(scheme, ct.a.modulus(), ct.a.size());
  j["a"] = ct.a.entries();
  j["c"] = ct.c;
  return j;
}

LweCiphertext lwe_ciphertext_from_json(const json& j) {
  const auto scheme = get<std::string>(j, "scheme");
  if (scheme != "ske" && scheme != "pke") throw ShapeError("expected an LWE ciphertext");
  const auto q = get<std::uint64_t>(j, "q");
  const auto n = get<std::size_t>(j, "n");
  const auto c = get<Residue>(j, "c");
  if (c >= q) throw ShapeError("ciphertext c not below modulus");
  return LweCiphertext{ZqVector(q, entries(j, "a", n)), c};
}

json to_json(const PkeKeyPair& kp) {
  json j = header("pke", kp.sk.modulus(), kp.sk.size());
  j["m"] = kp.pk.a.rows();
  j["sk"] = kp.sk.entries();
  j["A"] = kp.pk.a.entries();
  j["t"] = kp.pk.t.entries();
  return j;
}

PkeKeyPair pke_keypair_from_json(const json& j) {
  expect_scheme(j, "pke");
  const auto q = get<std::uint64_t>(j, "q");
  const auto n = get<std::size_t>(j, "n");
  const auto m = get<std::size_t>(j, "m");
  return PkeKeyPair{ZqVector(q, entries(j, "sk", n)),
                    PkePublicKey{ZqMatrix(q, m, n, entries(j, "A", m * n)),
                                 ZqVector(q, entries(j, "t", m))}};
}

json to_json(const FrodoKeyPair& kp) {
  json j = header("frodo", kp.s.modulus(), kp.s.rows());
  j["S"] = matrix_json(kp.s);
  j["A"] = matrix_json(kp.pk.a);
  j["B"] = matrix_json(kp.pk.b);
  return j;
}

FrodoKeyPair frodo_keypair_from_json(const json& j) {
  expect_scheme(j, "frodo");
  const auto q = get<std::uint64_t>(j, "q");
  const auto n = get<std::size_t>(j, "n");
  FrodoKeyPair kp{matrix_from(j, "S", q),
                  FrodoPublicKey{matrix_from(j, "A", q), matrix_from(j, "B", q)}};
  if (kp.s.rows() != n || kp.pk.a.rows() != n || kp.pk.a.cols() != n || kp.pk.b.rows() != n ||
      kp.pk.b.cols() != kp.s.cols()) {
    throw ShapeError("Frodo key matrices have inconsistent shapes");
  }
  return kp;
}

json to_json(const FrodoCiphertext& ct) {
  json j = header("frodo", ct.c1.modulus(), ct.c1.cols());
  j["C1"] = matrix_json(ct.c1);
  j["C2"] = matrix_json(ct.c2);
  return j;
}

FrodoCiphertext frodo_ciphertext_from_json(const json& j) {
  expect_scheme(j, "frodo");
  const auto q = get<std::uint64_t>(j, "q");
  const auto n = get<std::size_t>(j, "n");
  FrodoCiphertext ct{matrix_from(j, "C1", q), matrix_from(j, "C2", q)};
  if (ct.c1.cols() != n || ct.c1.rows() != ct.c2.rows()) {
    throw ShapeError("Frodo ciphertext matrices have inconsistent shapes");
  }
  return ct;
}

json to_json(const RingLweKeyPair& kp) {
  json j = header("ringlwe", kp.s.modulus(), kp.s.degree_bound());
  j["s"] = poly_entries(kp.s);
  j["a"] = poly_entries(kp.pk.a);
  j["c"] = poly_entries(kp.pk.c);
  return j;
}

RingLweKeyPair ringlwe_keypair_from_json(const json& j) {
  expect_scheme(j, "ringlwe");
  const auto q = get<std::uint64_t>(j, "q");
  const auto n = get<std::size_t>(j, "n");
  return RingLweKeyPair{RingPoly(q, entries(j, "s", n)),
                        RingLwePublicKey{RingPoly(q, entries(j, "a", n)),
                                         RingPoly(q, entries(j, "c", n))}};
}

json to_json(const RingLweCiphertext& ct) {
  json j = header("ringlwe", ct.u.modulus(), ct.u.degree_bound());
  j["u"] = poly_entries(ct.u);
  j["v"] = poly_entries(ct.v);
  return j;
}

RingLweCiphertext ringlwe_ciphertext_from_json(const json& j) {
  expect_scheme(j, "ringlwe");
  const auto q = get<std::uint64_t>(j, "q");
  const auto n = get<std::size_t>(j, "n");
  return RingLweCiphertext{RingPoly(q, entries(j, "u", n)), RingPoly(q, entries(j, "v", n))};
}

}  // namespace qlwe::schemes
