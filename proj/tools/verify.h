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

#ifndef QLWE_TOOLS_VERIFY_H_
#define QLWE_TOOLS_VERIFY_H_

#include <cstdint>
#include <string>
#include <vector>

// Cross-module invariant suites run by `qlwe verify`.
namespace qlwe::harness {

struct CheckResult {
  std::string property;
  // Grid that was covered on success, the first failing point otherwise.
  std::string point;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  // Mutation test: shifts every block boundary of the brute-force block map
  // down by one (block_index of z computed as that of z + 1, clamped), which
  // the closed-form/brute-force check must catch.
  bool inject_block_index_fault = false;
  std::uint64_t seed = 0;
};

std::vector<CheckResult> run_verify(const VerifyOptions& options = {});

// Fixed-width pass/fail table, one line per property.
std::string format_verify_table(const std::vector<CheckResult>& results);

// Soft budget for a full verify run.
inline constexpr double kVerifyBudgetSeconds = 300.0;

}  // namespace qlwe::harness

#endif  // QLWE_TOOLS_VERIFY_H_
