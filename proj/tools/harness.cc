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

#include "harness.h"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>

#include "qlwe/errors.h"

namespace qlwe::harness {

namespace {

using attacks::AttackKind;
using attacks::AttackParams;

// Value printed with 12 significant digits, read back as a double so that
// nlohmann's shortest round-trip output shows the same digits.
double rounded(double p) { return std::stod(format_probability(p)); }

std::uint64_t parse_uint(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ParameterError("malformed " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

double parse_double(std::string_view text, std::string_view what) {
  if (text.empty()) throw ParameterError("missing " + std::string(what));
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(std::string(text), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size()) {
    throw ParameterError("malformed " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

nlohmann::json params_json(const AttackParams& p) {
  nlohmann::json j = {{"q", p.q}, {"n", p.n}};
  if (p.kind == AttackKind::kLrf) {
    j["b"] = p.effective_b();
    j["a"] = p.a;
  }
  if (p.kind != AttackKind::kClassicalDec && p.kind != AttackKind::kClassicalRa &&
      p.kind != AttackKind::kLrf) {
    j["eta"] = p.effective_eta();
  }
  if (p.kind == AttackKind::kFrodo) {
    j["bits"] = p.frodo_bits;
    j["n_bar"] = p.n_bar;
    j["m_bar"] = p.m_bar;
    j["decode"] = p.frodo_decode == schemes::FrodoDecode::kRound ? "round" : "truncate";
  }
  return j;
}

nlohmann::json estimate_json(const attacks::RateEstimate& est, std::optional<double> analytic) {
  nlohmann::json j = {
      {"trials", est.trials},
      {"successes", est.successes},
      {"rate", rounded(est.rate)},
      {"wilson_lo", rounded(est.wilson.lo)},
      {"wilson_hi", rounded(est.wilson.hi)},
      {"quantum_queries", est.quantum_queries},
      {"classical_queries", est.classical_queries},
  };
  j["analytic"] = analytic ? nlohmann::json(rounded(*analytic)) : nlohmann::json(nullptr);
  return j;
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  throw ParameterError("unknown format '" + std::string(name) + "' (expected json or csv)");
}

std::string format_probability(double p) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", p);
  return buf;
}

void ExperimentSpec::validate() const {
  if (trials == 0) throw ParameterError("trials must be at least 1");
  params.validate();
}

nlohmann::json report_to_json(const AttackParams& params, const attacks::AttackReport& report) {
  nlohmann::json j = {
      {"attack", report.attack},
      {"params", params_json(params)},
      {"seed", report.seed},
      {"success", report.success},
      {"candidate", report.candidate},
      {"truth", report.truth},
      {"quantum_queries", report.quantum_queries},
      {"classical_queries", report.classical_queries},
  };
  if (params.kind == AttackKind::kFrodo) {
    j["column_success"] = report.column_success;
    j["column_has_unit"] = report.column_has_unit;
  }
  j["elapsed_seconds"] = report.elapsed_seconds;
  return j;
}

nlohmann::json run_attack(const ExperimentSpec& spec) {
  spec.validate();
  if (spec.trials == 1) {
    return report_to_json(spec.params, attacks::run_trial(spec.params, spec.seed));
  }
  std::vector<attacks::AttackReport> reports;
  const auto est = attacks::success_rate_experiment(spec.params, spec.trials, spec.seed, &reports);
  nlohmann::json j = {
      {"attack", std::string(attacks::attack_name(spec.params.kind))},
      {"params", params_json(spec.params)},
      {"seed", spec.seed},
      {"summary", estimate_json(est, attacks::analytic_success(spec.params))},
  };
  nlohmann::json& trials = j["reports"] = nlohmann::json::array();
  for (const auto& r : reports) trials.push_back(report_to_json(spec.params, r));
  j["elapsed_seconds"] = est.elapsed_seconds;
  return j;
}

SweepRow run_point(const AttackParams& params, std::uint64_t trials, std::uint64_t seed) {
  SweepRow row;
  row.params = params;
  row.seed = seed;
  row.estimate = attacks::success_rate_experiment(params, trials, seed);
  row.analytic = attacks::analytic_success(params);
  return row;
}

std::vector<SweepRow> run_sweep(const std::vector<AttackParams>& grid, std::uint64_t trials,
                                std::uint64_t seed) {
  if (grid.empty()) throw ParameterError("sweep grid is empty");
  if (trials == 0) throw ParameterError("trials must be at least 1");
  for (const auto& p : grid) p.validate();
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (const auto& p : grid) rows.push_back(run_point(p, trials, seed));
  return rows;
}

std::vector<AttackParams> expand_grid(const AttackParams& base,
                                      const std::vector<AttackKind>& kinds,
                                      const std::vector<std::uint64_t>& qs,
                                      const std::vector<std::uint64_t>& ns,
                                      const std::vector<std::uint64_t>& bs) {
  std::vector<AttackParams> grid;
  const std::vector<std::uint64_t> b_values = bs.empty() ? std::vector{base.b} : bs;
  for (AttackKind kind : kinds) {
    for (std::uint64_t q : qs) {
      for (std::uint64_t n : ns) {
        for (std::uint64_t b : b_values) {
          AttackParams p = base;
          p.kind = kind;
          p.q = q;
          p.n = n;
          p.b = b;
          grid.push_back(p);
        }
      }
    }
  }
  if (grid.empty()) throw ParameterError("sweep grid is empty");
  return grid;
}

std::vector<std::uint64_t> parse_range_list(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  }
  std::vector<std::uint64_t> out;
  if (compact.empty()) return out;
  for (std::string_view item : split(compact, ',')) {
    const std::size_t dash = item.find('-');
    if (dash == std::string_view::npos) {
      out.push_back(parse_uint(item, "value"));
      continue;
    }
    const std::uint64_t lo = parse_uint(item.substr(0, dash), "range start");
    const std::uint64_t hi = parse_uint(item.substr(dash + 1), "range end");
    if (hi < lo) throw ParameterError("empty range '" + std::string(item) + "'");
    if (hi - lo >= 1'000'000) throw ParameterError("range '" + std::string(item) + "' too long");
    for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

SweepRecord to_record(const SweepRow& row) {
  SweepRecord r;
  r.q = row.params.q;
  r.n = row.params.n;
  r.b = row.params.effective_b();
  r.scheme = std::string(attacks::attack_name(row.params.kind));
  r.trials = row.estimate.trials;
  r.rate = rounded(row.estimate.rate);
  r.wilson_lo = rounded(row.estimate.wilson.lo);
  r.wilson_hi = rounded(row.estimate.wilson.hi);
  if (row.analytic) r.analytic = rounded(*row.analytic);
  r.quantum_queries = row.estimate.quantum_queries;
  r.classical_queries = row.estimate.classical_queries;
  r.seed = row.seed;
  return r;
}

std::string format_csv_line(const SweepRecord& r) {
  std::ostringstream out;
  out << r.q << ',' << r.n << ',' << r.b << ',' << r.scheme << ',' << r.trials << ','
      << format_probability(r.rate) << ',' << format_probability(r.wilson_lo) << ','
      << format_probability(r.wilson_hi) << ','
      << (r.analytic ? format_probability(*r.analytic) : std::string()) << ','
      << r.quantum_queries << ',' << r.classical_queries << ',' << r.seed;
  return out.str();
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out(kSweepHeader);
  out += '\n';
  for (const auto& row : rows) {
    out += format_csv_line(to_record(row));
    out += '\n';
  }
  return out;
}

nlohmann::json sweep_json(const std::vector<SweepRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json j = {
        {"scheme", std::string(attacks::attack_name(row.params.kind))},
        {"params", params_json(row.params)},
        {"seed", row.seed},
    };
    j.update(estimate_json(row.estimate, row.analytic));
    j["elapsed_seconds"] = row.estimate.elapsed_seconds;
    out.push_back(std::move(j));
  }
  return out;
}

std::vector<SweepRecord> parse_sweep_csv(std::string_view text) {
  auto lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front() != kSweepHeader) {
    throw ParameterError("sweep CSV must start with the header line");
  }
  std::vector<SweepRecord> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split(lines[i], ',');
    if (f.size() != 12) {
      throw ParameterError("sweep CSV line " + std::to_string(i + 1) + " has " +
                           std::to_string(f.size()) + " fields");
    }
    SweepRecord r;
    r.q = parse_uint(f[0], "q");
    r.n = parse_uint(f[1], "n");
    r.b = parse_uint(f[2], "b");
    r.scheme = std::string(f[3]);
    r.trials = parse_uint(f[4], "trials");
    r.rate = parse_double(f[5], "rate");
    r.wilson_lo = parse_double(f[6], "wilson_lo");
    r.wilson_hi = parse_double(f[7], "wilson_hi");
    if (!f[8].empty()) r.analytic = parse_double(f[8], "analytic");
    r.quantum_queries = parse_uint(f[9], "quantum_queries");
    r.classical_queries = parse_uint(f[10], "classical_queries");
    r.seed = parse_uint(f[11], "seed");
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace qlwe::harness
