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

#include "qlwe/qsim/operations.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>

#include "qlwe/errors.h"
#include "fftw_plans.h"

namespace qlwe::qsim {

namespace {

void check_register(const RegisterLayout& layout, std::size_t r) {
  if (r >= layout.num_registers()) {
    throw ShapeError("register " + std::to_string(r) + " out of range");
  }
}

void check_registers(const RegisterLayout& layout, std::span<const std::size_t> regs) {
  std::vector<bool> seen(layout.num_registers(), false);
  for (std::size_t r : regs) {
    check_register(layout, r);
    if (seen[r]) throw ShapeError("register " + std::to_string(r) + " listed twice");
    seen[r] = true;
  }
}

// Walks every assignment of the registers other than `skip`, in row-major
// order, handing the callback the basis index with register `skip` at 0 and
// the full digit tuple (digit of `skip` stays 0). The fastest-moving digit
// gets its own loop so the odometer only runs once per row.
template <typename Fn>
void for_each_slice(const RegisterLayout& layout, std::size_t skip, Fn&& fn) {
  const std::size_t m = layout.num_registers();
  const auto dims = layout.dims();
  std::vector<std::size_t> strides(m);
  for (std::size_t r = 0; r < m; ++r) strides[r] = layout.stride(r);
  std::vector<std::uint64_t> tuple(m, 0);
  const std::span<const std::uint64_t> view(tuple);
  if (m == 1) {
    fn(std::size_t{0}, view);
    return;
  }
  const std::size_t inner = skip == m - 1 ? m - 2 : m - 1;
  const std::uint64_t inner_dim = dims[inner];
  const std::size_t inner_stride = strides[inner];
  const std::size_t rows = layout.total() / (dims[skip] * inner_dim);
  std::size_t base = 0;
  for (std::size_t row = 0; row < rows; ++row) {
    std::size_t index = base;
    for (std::uint64_t d = 0; d < inner_dim; ++d, index += inner_stride) {
      tuple[inner] = d;
      fn(index, view);
    }
    tuple[inner] = 0;
    for (std::size_t r = inner; r-- > 0;) {
      if (r == skip) continue;
      base += strides[r];
      if (++tuple[r] < dims[r]) break;
      base -= dims[r] * strides[r];
      tuple[r] = 0;
    }
  }
}

std::vector<Amplitude> roots_of_unity(std::uint64_t c, double sign) {
  std::vector<Amplitude> w(c);
  for (std::uint64_t k = 0; k < c; ++k) {
    w[k] = std::polar(1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(k) /
                               static_cast<double>(c));
  }
  return w;
}

void dense_dft_register(StateVector& state, std::size_t reg, double sign) {
  const auto& layout = state.layout();
  const std::uint64_t q = layout.dim(reg);
  const std::size_t s = layout.stride(reg);
  const std::size_t block = q * s;
  const std::size_t outer = layout.total() / block;
  const auto w = roots_of_unity(q, sign);
  const double scale = 1.0 / std::sqrt(static_cast<double>(q));
  std::vector<Amplitude> out(block);
  auto amps = state.mutable_amplitudes();
  for (std::size_t o = 0; o < outer; ++o) {
    Amplitude* in = amps.data() + o * block;
    std::fill(out.begin(), out.end(), Amplitude{0.0, 0.0});
    for (std::uint64_t y = 0; y < q; ++y) {
      Amplitude* dst = out.data() + y * s;
      for (std::uint64_t x = 0; x < q; ++x) {
        const Amplitude wxy = w[(x * y) % q];
        const Amplitude* src = in + x * s;
        for (std::size_t i = 0; i < s; ++i) dst[i] += wxy * src[i];
      }
    }
    for (std::size_t i = 0; i < block; ++i) in[i] = out[i] * scale;
  }
}

StateVector transform(StateVector state, std::span<const std::size_t> registers,
                      QftBackend backend, int sign) {
  check_registers(state.layout(), registers);
  if (registers.empty()) return state;
  if (backend == QftBackend::kDense) {
    for (std::size_t r : registers) dense_dft_register(state, r, static_cast<double>(sign));
    return state;
  }
  execute_fftw_dft(state, registers, sign);
  double dim = 1.0;
  for (std::size_t r : registers) dim *= static_cast<double>(state.layout().dim(r));
  const double scale = 1.0 / std::sqrt(dim);
  for (Amplitude& a : state.mutable_amplitudes()) a *= scale;
  return state;
}

// Projects every slice onto conj(factor) and tracks the worst squared
// residual and the total squared norm of the projections. The general case
// handles any slice length.
void project_slices(const Amplitude* amps, Amplitude* out, std::size_t outer, std::size_t s,
                    std::uint64_t c, const Amplitude* factor, const Amplitude* conj_factor,
                    double& worst, double& norm) {
  std::size_t rest = 0;
  for (std::size_t o = 0; o < outer; ++o) {
    const Amplitude* block = amps + o * c * s;
    for (std::size_t i = 0; i < s; ++i) {
      Amplitude proj{0.0, 0.0};
      for (std::uint64_t z = 0; z < c; ++z) proj += conj_factor[z] * block[i + z * s];
      for (std::uint64_t z = 0; z < c; ++z) {
        worst = std::max(worst, std::norm(block[i + z * s] - proj * factor[z]));
      }
      norm += std::norm(proj);
      out[rest++] = proj;
    }
  }
}

// Two-level slices: the part of a slice outside span(factor) is its overlap
// with (-conj f1, conj f0), so the squared residual is
// |f1 a0 - f0 a1|^2 / |f|^2 and needs no subtraction of nearby magnitudes.
void project_pairs(const Amplitude* amps, Amplitude* out, std::size_t outer, std::size_t s,
                   const Amplitude* factor, const Amplitude* conj_factor, double& worst,
                   double& norm) {
  const Amplitude f0 = factor[0];
  const Amplitude f1 = factor[1];
  const Amplitude g0 = conj_factor[0];
  const Amplitude g1 = conj_factor[1];
  double scaled_worst = 0.0;
  std::size_t rest = 0;
  for (std::size_t o = 0; o < outer; ++o) {
    const Amplitude* block = amps + o * 2 * s;
    for (std::size_t i = 0; i < s; ++i) {
      const Amplitude a0 = block[i];
      const Amplitude a1 = block[i + s];
      const Amplitude proj = g0 * a0 + g1 * a1;
      scaled_worst = std::max(scaled_worst, std::norm(f1 * a0 - f0 * a1));
      norm += std::norm(proj);
      out[rest++] = proj;
    }
  }
  worst = std::max(worst, scaled_worst / (std::norm(f0) + std::norm(f1)));
}

StateVector project_out(const StateVector& state, std::size_t reg,
                        const std::vector<Amplitude>& factor) {
  const auto& layout = state.layout();
  const std::uint64_t c = layout.dim(reg);
  const std::size_t s = layout.stride(reg);
  const std::size_t outer = layout.total() / (c * s);
  RegisterLayout rest = layout.without(reg);
  AmplitudeBuffer buffer(rest.total());
  StateVector reduced(std::move(rest), std::move(buffer));
  auto out = reduced.mutable_amplitudes();
  std::vector<Amplitude> conj_factor(c);
  for (std::uint64_t z = 0; z < c; ++z) conj_factor[z] = std::conj(factor[z]);
  // Residuals are compared as squared magnitudes to keep hypot out of the
  // inner loop. Slices are visited in the order of the reduced layout.
  double worst = 0.0;
  double norm = 0.0;
  const Amplitude* in = state.amplitudes().data();
  if (c == 2) {
    project_pairs(in, out.data(), outer, s, factor.data(), conj_factor.data(), worst, norm);
  } else {
    project_slices(in, out.data(), outer, s, c, factor.data(), conj_factor.data(), worst, norm);
  }
  worst = std::sqrt(worst);
  if (worst > kTolerance) {
    std::ostringstream msg;
    msg << "discard_register: register " << reg
        << " is entangled with the rest of the state (residual " << worst << ")";
    throw ContractViolation(msg.str());
  }
  norm = std::sqrt(norm);
  if (norm <= kTolerance) throw ContractViolation("discard_register: zero state");
  // A factor that matches the register leaves the rest unit-norm already.
  if (std::abs(norm - 1.0) > 1e-13) {
    const double inv = 1.0 / norm;
    for (Amplitude& a : out) a *= inv;
  }
  return reduced;
}

}  // namespace

StateVector apply_additive_oracle(StateVector state, std::span<const std::size_t> inputs,
                                  std::size_t target, const ClassicalFunction& f) {
  const auto& layout = state.layout();
  check_register(layout, target);
  check_registers(layout, inputs);
  if (std::find(inputs.begin(), inputs.end(), target) != inputs.end()) {
    throw ShapeError("additive oracle target is also an input register");
  }
  const std::uint64_t c = layout.dim(target);
  const std::size_t s = layout.stride(target);
  auto amps = state.mutable_amplitudes();
  // When the inputs are exactly the registers before a trailing target, the
  // walker's digit tuple already is the argument list.
  bool direct = target + 1 == layout.num_registers() && inputs.size() == target;
  for (std::size_t j = 0; direct && j < inputs.size(); ++j) direct = inputs[j] == j;
  std::vector<Amplitude> slice(c);
  std::vector<std::uint64_t> args(inputs.size());
  // Each slice is cyclically shifted in place.
  for_each_slice(layout, target, [&](std::size_t base, std::span<const std::uint64_t> tuple) {
    std::uint64_t v;
    if (direct) {
      v = f(tuple.first(target));
    } else {
      for (std::size_t j = 0; j < inputs.size(); ++j) args[j] = tuple[inputs[j]];
      v = f(args);
    }
    if (v >= c) v %= c;
    if (c == 2) {
      // Outputs are close to coin flips here, so select instead of branching.
      const Amplitude pair[2] = {amps[base], amps[base + s]};
      amps[base] = pair[v];
      amps[base + s] = pair[v ^ 1];
      return;
    }
    if (v == 0) return;
    if (s == 1) {
      Amplitude* block = amps.data() + base;
      std::rotate(block, block + (c - v), block + c);
      return;
    }
    for (std::uint64_t z = 0; z < c; ++z) slice[z] = amps[base + z * s];
    for (std::uint64_t z = 0; z < c; ++z) {
      const std::uint64_t shifted = z + v < c ? z + v : z + v - c;
      amps[base + shifted * s] = slice[z];
    }
  });
  return state;
}

StateVector apply_additive_oracle(StateVector state, std::size_t target,
                                  const ClassicalFunction& f) {
  check_register(state.layout(), target);
  std::vector<std::size_t> inputs;
  for (std::size_t r = 0; r < state.layout().num_registers(); ++r) {
    if (r != target) inputs.push_back(r);
  }
  return apply_additive_oracle(std::move(state), inputs, target, f);
}

StateVector apply_phase_oracle(StateVector state, std::span<const std::size_t> inputs,
                               const ClassicalFunction& f, std::uint64_t c) {
  if (c < 2) throw ParameterError("phase oracle order must be at least 2");
  const auto& layout = state.layout();
  check_registers(layout, inputs);
  const auto w = roots_of_unity(c, -1.0);
  auto amps = state.mutable_amplitudes();
  std::vector<std::uint64_t> args(inputs.size());
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    for (std::size_t j = 0; j < inputs.size(); ++j) args[j] = layout.digit(idx, inputs[j]);
    amps[idx] *= w[f(args) % c];
  }
  return state;
}

StateVector qft(StateVector state, std::span<const std::size_t> registers, QftBackend backend) {
  return transform(std::move(state), registers, backend, +1);
}

StateVector inverse_qft(StateVector state, std::span<const std::size_t> registers,
                        QftBackend backend) {
  return transform(std::move(state), registers, backend, -1);
}

StateVector qft(StateVector state, std::size_t reg, QftBackend backend) {
  const std::size_t regs[] = {reg};
  return qft(std::move(state), regs, backend);
}

StateVector inverse_qft(StateVector state, std::size_t reg, QftBackend backend) {
  const std::size_t regs[] = {reg};
  return inverse_qft(std::move(state), regs, backend);
}

double outcome_probability(const StateVector& state, std::span<const std::size_t> registers,
                           std::span<const std::uint64_t> outcome) {
  const auto& layout = state.layout();
  check_registers(layout, registers);
  if (outcome.size() != registers.size()) throw ShapeError("outcome length != register count");
  for (std::size_t j = 0; j < registers.size(); ++j) {
    if (outcome[j] >= layout.dim(registers[j])) {
      throw ShapeError("outcome value outside register dimension");
    }
  }
  const auto amps = state.amplitudes();
  double p = 0.0;
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    bool match = true;
    for (std::size_t j = 0; j < registers.size() && match; ++j) {
      match = layout.digit(idx, registers[j]) == outcome[j];
    }
    if (match) p += std::norm(amps[idx]);
  }
  return p;
}

std::vector<double> register_distribution(const StateVector& state, std::size_t reg) {
  const auto& layout = state.layout();
  check_register(layout, reg);
  std::vector<double> dist(layout.dim(reg), 0.0);
  const auto amps = state.amplitudes();
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    dist[layout.digit(idx, reg)] += std::norm(amps[idx]);
  }
  return dist;
}

std::vector<std::uint64_t> measure(const StateVector& state,
                                   std::span<const std::size_t> registers, Rng& rng) {
  const auto& layout = state.layout();
  check_registers(layout, registers);
  const auto amps = state.amplitudes();
  const double target = rng.uniform_unit() * state.norm_squared();
  double cumulative = 0.0;
  std::size_t chosen = amps.size();
  std::size_t last_nonzero = 0;
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    const double p = std::norm(amps[idx]);
    if (p == 0.0) continue;
    last_nonzero = idx;
    cumulative += p;
    if (cumulative > target) {
      chosen = idx;
      break;
    }
  }
  // Rounding can leave the running sum a hair short of the draw.
  if (chosen == amps.size()) chosen = last_nonzero;
  std::vector<std::uint64_t> outcome(registers.size());
  for (std::size_t j = 0; j < registers.size(); ++j) {
    outcome[j] = layout.digit(chosen, registers[j]);
  }
  return outcome;
}

std::vector<std::uint64_t> measure_all(const StateVector& state, Rng& rng) {
  std::vector<std::size_t> regs(state.layout().num_registers());
  for (std::size_t r = 0; r < regs.size(); ++r) regs[r] = r;
  return measure(state, regs, rng);
}

StateVector discard_register(const StateVector& state, std::size_t reg) {
  const auto& layout = state.layout();
  check_register(layout, reg);
  const std::uint64_t c = layout.dim(reg);
  const std::size_t s = layout.stride(reg);
  const auto amps = state.amplitudes();

  std::size_t best_base = 0;
  double best_norm = -1.0;
  for_each_slice(layout, reg, [&](std::size_t base, std::span<const std::uint64_t>) {
    double n = 0.0;
    for (std::uint64_t z = 0; z < c; ++z) n += std::norm(amps[base + z * s]);
    if (n > best_norm) {
      best_norm = n;
      best_base = base;
    }
  });
  if (best_norm <= 0.0) throw ContractViolation("discard_register: zero state");

  std::vector<Amplitude> factor(c);
  const double inv = 1.0 / std::sqrt(best_norm);
  double peak = 0.0;
  for (std::uint64_t z = 0; z < c; ++z) {
    factor[z] = amps[best_base + z * s] * inv;
    peak = std::max(peak, std::abs(factor[z]));
  }
  for (std::uint64_t z = 0; z < c; ++z) {
    if (std::abs(factor[z]) >= peak - 1e-12) {
      const Amplitude phase = std::conj(factor[z]) / std::abs(factor[z]);
      for (Amplitude& f : factor) f *= phase;
      break;
    }
  }
  return project_out(state, reg, factor);
}

StateVector discard_register(const StateVector& state, std::size_t reg,
                             const StateVector& factor) {
  check_register(state.layout(), reg);
  if (factor.layout().num_registers() != 1 ||
      factor.layout().dim(0) != state.layout().dim(reg)) {
    throw ShapeError("discard_register: factor dimension mismatch");
  }
  if (!factor.is_normalized()) throw ParameterError("discard_register: factor not normalized");
  const auto f = factor.amplitudes();
  return project_out(state, reg, std::vector<Amplitude>(f.begin(), f.end()));
}

}  // namespace qlwe::qsim
