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

#include <sys/wait.h>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "harness.h"
#include "qlwe/attacks/experiment.h"
#include "qlwe/errors.h"
#include "verify.h"

namespace qlwe::harness {
namespace {

using attacks::AttackKind;
using attacks::AttackParams;

AttackParams lrf_point(std::uint64_t q, std::uint64_t b) {
  AttackParams p;
  p.kind = AttackKind::kLrf;
  p.q = q;
  p.n = 1;
  p.b = b;
  return p;
}

TEST(RangeListTest, Parses) {
  EXPECT_EQ(parse_range_list("4-7"), (std::vector<std::uint64_t>{4, 5, 6, 7}));
  EXPECT_EQ(parse_range_list("2, 4-5,9"), (std::vector<std::uint64_t>{2, 4, 5, 9}));
  EXPECT_TRUE(parse_range_list("").empty());
  EXPECT_THROW(parse_range_list("7-4"), ParameterError);
  EXPECT_THROW(parse_range_list("x"), ParameterError);
  EXPECT_THROW(parse_range_list("1,,2"), ParameterError);
}

TEST(GridTest, ExpandsInOrder) {
  const auto grid = expand_grid(AttackParams{}, {AttackKind::kLrf, AttackKind::kSke}, {5, 7},
                                {1}, {2, 3});
  ASSERT_EQ(grid.size(), 8u);
  EXPECT_EQ(grid[0].kind, AttackKind::kLrf);
  EXPECT_EQ(grid[0].q, 5u);
  EXPECT_EQ(grid[0].b, 2u);
  EXPECT_EQ(grid[1].b, 3u);
  EXPECT_EQ(grid[2].q, 7u);
  EXPECT_EQ(grid[4].kind, AttackKind::kSke);
  EXPECT_THROW(expand_grid(AttackParams{}, {}, {5}, {1}, {}), ParameterError);
}

TEST(SweepTest, EmptyGridThrows) { EXPECT_THROW(run_sweep({}, 10, 0), ParameterError); }

TEST(SweepTest, InvalidPointRejectedBeforeRunning) {
  EXPECT_THROW(run_sweep({lrf_point(5, 2), lrf_point(5, 5)}, 10, 0), ParameterError);
}

TEST(SweepTest, CsvHeaderAndRoundTrip) {
  const auto rows = run_sweep({lrf_point(5, 2), lrf_point(6, 3), lrf_point(7, 4)}, 50, 3);
  const std::string csv = sweep_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kSweepHeader);
  const auto records = parse_sweep_csv(csv);
  ASSERT_EQ(records.size(), 3u);
  std::string rebuilt = std::string(kSweepHeader) + "\n";
  for (const auto& r : records) rebuilt += format_csv_line(r) + "\n";
  EXPECT_EQ(rebuilt, csv);
  EXPECT_EQ(records[1].q, 6u);
  EXPECT_EQ(records[1].b, 3u);
  EXPECT_EQ(records[1].scheme, "lrf");
  EXPECT_EQ(records[1].trials, 50u);
  EXPECT_EQ(records[1].quantum_queries, 1u);
  ASSERT_TRUE(records[1].analytic.has_value());
  EXPECT_THROW(parse_sweep_csv("q,n\n"), ParameterError);
  EXPECT_THROW(parse_sweep_csv(std::string(kSweepHeader) + "\n1,2\n"), ParameterError);
}

TEST(SweepTest, RatesAgreeWithAnalysis) {
  // Wilson intervals are 95% intervals, so allow the analytic value to sit
  // just outside for one of the points.
  std::vector<AttackParams> grid;
  for (std::uint64_t q = 3; q <= 9; ++q) grid.push_back(lrf_point(q, (q + 1) / 2));
  const auto rows = run_sweep(grid, 400, 11);
  int outside = 0;
  for (const auto& row : rows) {
    ASSERT_TRUE(row.analytic.has_value());
    const double slack = 0.02;
    if (*row.analytic < row.estimate.wilson.lo - slack ||
        *row.analytic > row.estimate.wilson.hi + slack) {
      ++outside;
    }
  }
  EXPECT_LE(outside, 1);
}

TEST(SweepTest, PointsDoNotDependOnGrid) {
  const SweepRow alone = run_point(lrf_point(7, 4), 40, 5);
  const auto rows = run_sweep({lrf_point(5, 3), lrf_point(7, 4)}, 40, 5);
  EXPECT_EQ(rows[1].estimate.successes, alone.estimate.successes);
}

nlohmann::json strip_elapsed(nlohmann::json j) {
  if (j.is_object()) {
    j.erase("elapsed_seconds");
    for (auto& [key, value] : j.items()) value = strip_elapsed(value);
  } else if (j.is_array()) {
    for (auto& value : j) value = strip_elapsed(value);
  }
  return j;
}

TEST(AttackJsonTest, DeterministicApartFromTiming) {
  ExperimentSpec spec;
  spec.params.kind = AttackKind::kSke;
  spec.params.q = 7;
  spec.params.n = 2;
  spec.seed = 42;
  const nlohmann::json one = run_attack(spec);
  EXPECT_EQ(strip_elapsed(one), strip_elapsed(run_attack(spec)));
  EXPECT_EQ(one.at("attack"), "ske");
  EXPECT_EQ(one.at("quantum_queries"), 1);
  EXPECT_EQ(one.at("seed"), 42);
  EXPECT_TRUE(one.contains("elapsed_seconds"));

  spec.trials = 5;
  const nlohmann::json many = run_attack(spec);
  EXPECT_EQ(strip_elapsed(many), strip_elapsed(run_attack(spec)));
  EXPECT_EQ(many.at("reports").size(), 5u);
}

TEST(SpecTest, Validates) {
  ExperimentSpec spec;
  spec.trials = 0;
  EXPECT_THROW(spec.validate(), ParameterError);
  EXPECT_THROW(parse_format("xml"), ParameterError);
  EXPECT_EQ(format_probability(0.5), "0.5");
}

TEST(VerifyTest, AllSuitesPass) {
  const auto results = run_verify();
  ASSERT_GE(results.size(), 10u);
  for (const auto& r : results) EXPECT_TRUE(r.passed) << r.property << ": " << r.detail;
  EXPECT_NE(format_verify_table(results).find(results.front().property), std::string::npos);
}

TEST(VerifyTest, InjectedFaultIsCaught) {
  VerifyOptions options;
  options.inject_block_index_fault = true;
  bool any_failed = false;
  for (const auto& r : run_verify(options)) any_failed = any_failed || !r.passed;
  EXPECT_TRUE(any_failed);
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(QLWE_BINARY) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(run_cli("attack --scheme ske --q 7 --n 2 --seed 1"), 0);
  EXPECT_EQ(run_cli("sweep --scheme lrf --q 5-7 --n 1 --trials 5"), 0);
  EXPECT_EQ(run_cli("baseline --q 7 --n 2 --trials 2"), 0);
  EXPECT_EQ(run_cli("attack --scheme nope"), 2);
  EXPECT_EQ(run_cli("attack --scheme lrf --q 7 --b 9"), 2);
  EXPECT_EQ(run_cli("attack --bogus-flag"), 2);
  EXPECT_EQ(run_cli("baseline --scheme ske"), 2);
  EXPECT_EQ(run_cli("attack --scheme lrf --q 4096 --n 3"), 3);
  EXPECT_EQ(run_cli("verify --inject-fault block-index"), 1);
}

}  // namespace
}  // namespace qlwe::harness
