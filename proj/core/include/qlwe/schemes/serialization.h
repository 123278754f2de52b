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

#ifndef QLWE_SCHEMES_SERIALIZATION_H_
#define QLWE_SCHEMES_SERIALIZATION_H_

#include <string_view>

#include <nlohmann/json.hpp>

#include "qlwe/schemes/frodo.h"
#include "qlwe/schemes/lwe.h"
#include "qlwe/schemes/ring_lwe.h"

// Canonical JSON for keys and ciphertexts. Every object carries "scheme",
// "q" and "n"; vectors, matrices and polynomials are flat row-major arrays
// with explicit "rows"/"cols" where needed. Parsers throw ShapeError on
// missing fields or inconsistent sizes.
namespace qlwe::schemes {

nlohmann::json to_json(const SkeKey& key);
SkeKey ske_key_from_json(const nlohmann::json& j);

// `scheme` is "ske" or "pke".
nlohmann::json to_json(const LweCiphertext& ct, std::string_view scheme);
LweCiphertext lwe_ciphertext_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PkeKeyPair& kp);
PkeKeyPair pke_keypair_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FrodoKeyPair& kp);
FrodoKeyPair frodo_keypair_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FrodoCiphertext& ct);
FrodoCiphertext frodo_ciphertext_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RingLweKeyPair& kp);
RingLweKeyPair ringlwe_keypair_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RingLweCiphertext& ct);
RingLweCiphertext ringlwe_ciphertext_from_json(const nlohmann::json& j);

}  // namespace qlwe::schemes

#endif  // QLWE_SCHEMES_SERIALIZATION_H_
