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

#ifndef QLWE_TOOLS_HARNESS_H_
#define QLWE_TOOLS_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qlwe/attacks/experiment.h"

// Experiment plumbing behind the qlwe command-line tool: single runs, grid
// sweeps and their machine-readable serializations.
namespace qlwe::harness {

enum class OutputFormat { kJson, kCsv };

// "json" or "csv"; throws ParameterError otherwise.
OutputFormat parse_format(std::string_view name);

// Probabilities and rates are printed with 12 significant digits.
std::string format_probability(double p);

struct ExperimentSpec {
  attacks::AttackParams params;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::string out;  // empty writes to stdout
  OutputFormat format = OutputFormat::kJson;

  // Throws ParameterError or ResourceError before any simulation work.
  void validate() const;
};

// One parameter point of a sweep. `analytic` is set iff a closed-form or
// enumeration oracle applies to the point.
struct SweepRow {
  attacks::AttackParams params;
  std::uint64_t seed = 0;
  attacks::RateEstimate estimate;
  std::optional<double> analytic;
};

// Single-trial report. `elapsed_seconds` is the only field that varies
// between runs with identical inputs.
nlohmann::json report_to_json(const attacks::AttackParams& params,
                              const attacks::AttackReport& report);

// One trial when spec.trials == 1 (the report object). Otherwise a summary
// object with the rate, Wilson interval and every trial report. Trial t runs
// under derive_seed(seed, t) when trials > 1 and under `seed` itself when
// trials == 1.
nlohmann::json run_attack(const ExperimentSpec& spec);

// Every point runs `trials` trials under the same master seed, so a row does
// not depend on which other points share the grid.
SweepRow run_point(const attacks::AttackParams& params, std::uint64_t trials,
                   std::uint64_t seed);

// Validates every point before running any of them. Throws ParameterError
// on an empty grid. Rows keep grid order.
std::vector<SweepRow> run_sweep(const std::vector<attacks::AttackParams>& grid,
                                std::uint64_t trials, std::uint64_t seed);

// Cartesian product scheme x q x n x b over `base`, in that nesting order.
// An empty `bs` keeps base.b. Throws ParameterError if the product is empty.
std::vector<attacks::AttackParams> expand_grid(const attacks::AttackParams& base,
                                               const std::vector<attacks::AttackKind>& kinds,
                                               const std::vector<std::uint64_t>& qs,
                                               const std::vector<std::uint64_t>& ns,
                                               const std::vector<std::uint64_t>& bs);

// Parses "4-64", "2,3,5" or a mix such as "2,4-8". Whitespace is ignored.
// An empty string yields an empty list; malformed input throws
// ParameterError.
std::vector<std::uint64_t> parse_range_list(std::string_view text);

inline constexpr std::string_view kSweepHeader =
    "q,n,b,scheme,trials,rate,wilson_lo,wilson_hi,analytic,quantum_queries,classical_queries,"
    "seed";

// Parsed form of one CSV line, kept as close to the text as possible so that
// parse followed by format reproduces it exactly.
struct SweepRecord {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  std::uint64_t b = 0;
  std::string scheme;
  std::uint64_t trials = 0;
  double rate = 0.0;
  double wilson_lo = 0.0;
  double wilson_hi = 0.0;
  std::optional<double> analytic;
  std::uint64_t quantum_queries = 0;
  std::uint64_t classical_queries = 0;
  std::uint64_t seed = 0;
};

SweepRecord to_record(const SweepRow& row);
std::string format_csv_line(const SweepRecord& record);
// Header plus one line per row, newline terminated.
std::string sweep_csv(const std::vector<SweepRow>& rows);
nlohmann::json sweep_json(const std::vector<SweepRow>& rows);
// Throws ParameterError on a wrong header or malformed line.
std::vector<SweepRecord> parse_sweep_csv(std::string_view text);

}  // namespace qlwe::harness

#endif  // QLWE_TOOLS_HARNESS_H_
