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

// qlwe: run single-query key-recovery attacks, sweeps, classical baselines
// and the invariant suite from the command line.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 resource cap.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "harness.h"
#include "qlwe/attacks/experiment.h"
#include "qlwe/errors.h"
#include "qlwe/qsim/register_layout.h"
#include "verify.h"

namespace {

using qlwe::attacks::AttackKind;
using qlwe::attacks::AttackParams;
namespace harness = qlwe::harness;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

// Flags shared by every experiment subcommand.
struct CommonFlags {
  std::string scheme;
  std::string q = "7";
  std::string n = "2";
  std::string b;
  std::uint64_t a = 0;
  std::optional<std::uint64_t> eta;
  unsigned bits = 2;
  std::size_t n_bar = 2;
  std::size_t m_bar = 2;
  std::string decode = "truncate";
  std::string backend = "fftw";
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::string out;
  std::string format;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool grid) {
  const char* list_note = grid ? " (list or range, e.g. 4-64 or 3,5,7)" : "";
  cmd->add_option("--q", f.q, std::string("Modulus") + list_note);
  cmd->add_option("--n", f.n, std::string("Secret dimension") + list_note);
  cmd->add_option("--b", f.b,
                  std::string("Block size of the lrf attack; default ceil(q/2)") + list_note);
  cmd->add_option("--a", f.a, "Block offset of the lrf attack");
  cmd->add_option("--eta", f.eta, "Noise magnitude (default: per scheme)");
  cmd->add_option("--bits", f.bits, "Frodo: message bits B per entry");
  cmd->add_option("--n-bar", f.n_bar, "Frodo: columns of S");
  cmd->add_option("--m-bar", f.m_bar, "Frodo: rows per ciphertext");
  cmd->add_option("--decode", f.decode, "Frodo decoding rule")
      ->check(CLI::IsMember({"truncate", "round"}));
  cmd->add_option("--backend", f.backend, "QFT backend")->check(CLI::IsMember({"fftw", "dense"}));
  cmd->add_option("--trials", f.trials, "Trials per parameter point");
  cmd->add_option("--seed", f.seed, "Master seed");
  cmd->add_option("--out", f.out, "Write the report here instead of stdout");
  cmd->add_option("--format", f.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
}

AttackParams base_params(const CommonFlags& f) {
  AttackParams p;
  p.a = f.a;
  p.eta = f.eta;
  p.frodo_bits = f.bits;
  p.n_bar = f.n_bar;
  p.m_bar = f.m_bar;
  p.frodo_decode =
      f.decode == "round" ? qlwe::schemes::FrodoDecode::kRound : qlwe::schemes::FrodoDecode::kTruncate;
  p.backend = f.backend == "dense" ? qlwe::qsim::QftBackend::kDense : qlwe::qsim::QftBackend::kFftw;
  return p;
}

std::uint64_t single_value(const std::string& text, const char* flag) {
  const auto values = harness::parse_range_list(text);
  if (values.size() != 1) {
    throw qlwe::ParameterError(std::string(flag) + " takes exactly one value here");
  }
  return values.front();
}

std::vector<AttackKind> parse_kinds(const std::string& text) {
  std::vector<AttackKind> kinds;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string name =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!name.empty()) kinds.push_back(qlwe::attacks::parse_attack_kind(name));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return kinds;
}

void emit(const std::string& payload, const std::string& path) {
  if (path.empty()) {
    std::cout << payload;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qlwe::ParameterError("cannot open '" + path + "' for writing");
  out << payload;
}

int run_attack_command(const CommonFlags& f) {
  harness::ExperimentSpec spec;
  spec.params = base_params(f);
  spec.params.kind = qlwe::attacks::parse_attack_kind(f.scheme.empty() ? "ske" : f.scheme);
  spec.params.q = single_value(f.q, "--q");
  spec.params.n = single_value(f.n, "--n");
  spec.params.b = f.b.empty() ? 0 : single_value(f.b, "--b");
  spec.trials = f.trials;
  spec.seed = f.seed;
  spec.out = f.out;
  spec.format = harness::parse_format(f.format.empty() ? "json" : f.format);
  spec.validate();
  if (spec.format == harness::OutputFormat::kCsv) {
    emit(harness::sweep_csv({harness::run_point(spec.params, spec.trials, spec.seed)}), spec.out);
  } else {
    emit(harness::run_attack(spec).dump(2) + "\n", spec.out);
  }
  return kExitOk;
}

int run_grid_command(const CommonFlags& f, const std::vector<AttackKind>& kinds) {
  const auto grid = harness::expand_grid(base_params(f), kinds, harness::parse_range_list(f.q),
                                         harness::parse_range_list(f.n),
                                         harness::parse_range_list(f.b));
  const auto format = harness::parse_format(f.format.empty() ? "csv" : f.format);
  const auto rows = harness::run_sweep(grid, f.trials, f.seed);
  emit(format == harness::OutputFormat::kCsv ? harness::sweep_csv(rows)
                                             : harness::sweep_json(rows).dump(2) + "\n",
       f.out);
  return kExitOk;
}

int run_verify_command(const harness::VerifyOptions& options, const std::string& out) {
  const auto start = std::chrono::steady_clock::now();
  const auto results = harness::run_verify(options);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::string table = harness::format_verify_table(results);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  char summary[128];
  std::snprintf(summary, sizeof(summary), "%s: %zu properties in %.1f s\n",
                all ? "all passed" : "FAILED", results.size(), seconds);
  table += summary;
  emit(table, out);
  if (seconds > harness::kVerifyBudgetSeconds) {
    std::cerr << "warning: verify took " << seconds << " s, over the "
              << harness::kVerifyBudgetSeconds << " s budget\n";
  }
  return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-query quantum key recovery against LWE-family schemes, simulated exactly."};
  app.require_subcommand(1);
  app.footer(std::string("Environment: ") + qlwe::qsim::kMaxAmplitudesEnv +
             " caps the number of amplitudes in any simulated state.\n"
             "Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 resource cap.");

  CommonFlags attack_flags;
  CLI::App* attack = app.add_subcommand("attack", "Run one attack (JSON report by default)");
  add_common(attack, attack_flags, false);
  attack->add_option("--scheme", attack_flags.scheme,
                     "lrf, ske, pke, frodo, ringlwe, ra-shared, ra-iid, classical-dec, "
                     "classical-ra");

  CommonFlags sweep_flags;
  sweep_flags.trials = 100;
  sweep_flags.b.clear();
  CLI::App* sweep = app.add_subcommand("sweep", "Success rates over a parameter grid (CSV)");
  add_common(sweep, sweep_flags, true);
  sweep->add_option("--scheme", sweep_flags.scheme, "Comma-separated attack names")
      ->default_str("lrf");

  CommonFlags baseline_flags;
  baseline_flags.trials = 100;
  CLI::App* baseline =
      app.add_subcommand("baseline", "Classical key recovery over a parameter grid (CSV)");
  add_common(baseline, baseline_flags, true);
  baseline->add_option("--scheme", baseline_flags.scheme,
                       "classical-dec, classical-ra or both (default)");

  harness::VerifyOptions verify_options;
  std::string verify_out;
  std::string fault;
  CLI::App* verify = app.add_subcommand("verify", "Run the invariant suites; exit 1 on failure");
  verify->add_option("--seed", verify_options.seed, "Seed for the randomized checks");
  verify->add_option("--out", verify_out, "Write the table here instead of stdout");
  verify->add_option("--inject-fault", fault,
                     "Mutation test: 'block-index' shifts the brute-force block boundaries "
                     "by one so the closed-form check must fail")
      ->check(CLI::IsMember({"block-index"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (attack->parsed()) return run_attack_command(attack_flags);
    if (sweep->parsed()) {
      return run_grid_command(sweep_flags,
                              parse_kinds(sweep_flags.scheme.empty() ? "lrf" : sweep_flags.scheme));
    }
    if (baseline->parsed()) {
      std::vector<AttackKind> kinds =
          baseline_flags.scheme.empty()
              ? std::vector{AttackKind::kClassicalDec, AttackKind::kClassicalRa}
              : parse_kinds(baseline_flags.scheme);
      for (AttackKind k : kinds) {
        if (qlwe::attacks::is_quantum(k)) {
          throw qlwe::ParameterError("baseline runs classical attacks only");
        }
      }
      return run_grid_command(baseline_flags, kinds);
    }
    if (verify->parsed()) {
      verify_options.inject_block_index_fault = fault == "block-index";
      return run_verify_command(verify_options, verify_out);
    }
  } catch (const qlwe::ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    // ParameterError and ShapeError.
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
