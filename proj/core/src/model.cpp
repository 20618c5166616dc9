// SPDX-License-Identifier: Apache-2.0
//
// rismon - surveillance success probability for RIS-aided monitoring
// Copyright (C) 2025 The rismon authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#include "rismon/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rismon/error.hpp"

namespace rismon {

using std::numbers::pi;

double wrap_phase(double phi) {
  double r = std::fmod(phi, 2 * pi);
  if (r < 0) r += 2 * pi;
  if (r >= 2 * pi) r = 0;  // -tiny + 2pi rounds up to 2pi
  return r;
}

PhaseConfig::PhaseConfig(std::vector<double> phases) : phases_(std::move(phases)) {
  for (auto& p : phases_) p = wrap_phase(p);
}

PhaseConfig design_phases_rislo(const ChannelRealization& real) {
  std::vector<double> phi(real.num_elements);
  for (std::size_t l = 0; l < phi.size(); ++l)
    phi[l] = std::arg(std::conj(real.h_rm[l])) + std::arg(real.h_sr[l]);
  return PhaseConfig(std::move(phi));
}

PhaseConfig design_phases_risco(const ChannelRealization& real, std::size_t jammer) {
  if (jammer >= real.num_jammers)
    throw std::out_of_range("jammer index " + std::to_string(jammer) + " out of range (N=" +
                            std::to_string(real.num_jammers) + ")");
  const auto h_nr = real.jammer(jammer);
  std::vector<double> phi(real.num_elements);
  for (std::size_t l = 0; l < phi.size(); ++l)
    phi[l] = std::arg(std::conj(real.h_rd[l])) + std::arg(h_nr[l]);
  return PhaseConfig(std::move(phi));
}

cplx cascaded_coefficient(std::span<const cplx> a, const PhaseConfig& phases,
                          std::span<const cplx> b) {
  if (a.size() != b.size() || a.size() != phases.size())
    throw std::invalid_argument("cascaded_coefficient: length mismatch (" +
                                std::to_string(a.size()) + ", " + std::to_string(phases.size()) +
                                ", " + std::to_string(b.size()) + ")");
  cplx sum{};
  for (std::size_t l = 0; l < a.size(); ++l)
    sum += std::conj(a[l]) * std::polar(1.0, -phases[l]) * b[l];
  return sum;
}

double cascaded_amplitude(std::span<const cplx> a, const PhaseConfig& phases,
                          std::span<const cplx> b) {
  return std::abs(cascaded_coefficient(a, phases, b));
}

double monitoring_rate(double gamma_s, double ls_amplitude) {
  return std::log2(1.0 + gamma_s * ls_amplitude * ls_amplitude);
}

double suspicious_rate(double gamma_s, double gamma_j, double susp_gain, double cj_gain) {
  return std::log2(1.0 + gamma_s * susp_gain / (gamma_j * cj_gain + 1.0));
}

double relative_monitoring_rate(double r_sm, double r_sd) { return std::max(0.0, r_sm - r_sd); }

std::size_t argmax_gain(std::span<const double> gains) {
  if (gains.empty()) throw std::invalid_argument("argmax_gain: empty candidate list");
  return static_cast<std::size_t>(std::max_element(gains.begin(), gains.end()) - gains.begin());
}

std::vector<double> jammer_gains(const ChannelRealization& real, const PhaseConfig& phases) {
  std::vector<double> q(real.num_jammers);
  for (std::size_t n = 0; n < q.size(); ++n)
    q[n] = std::norm(cascaded_coefficient(real.h_rd, phases, real.jammer(n)));
  return q;
}

std::vector<double> jammer_amplitudes(const ChannelRealization& real) {
  std::vector<double> a(real.num_jammers, 0.0);
  for (std::size_t n = 0; n < a.size(); ++n) {
    const auto h = real.jammer(n);
    for (std::size_t l = 0; l < real.num_elements; ++l) a[n] += std::abs(real.h_rd[l]) * std::abs(h[l]);
  }
  return a;
}

std::size_t select_jammer(Scheme scheme, const ChannelRealization& real,
                          std::uint64_t uniform_draw) {
  switch (scheme) {
    case Scheme::rislo:
      return argmax_gain(jammer_gains(real, design_phases_rislo(real)));
    case Scheme::risco:
      return argmax_gain(jammer_amplitudes(real));
    case Scheme::rislr:
    case Scheme::riscr:
      return static_cast<std::size_t>(draw_to_index(uniform_draw, real.num_jammers));
  }
  return 0;
}

DerivedParams derive_params(const SystemConfig& config, std::size_t jammer) {
  config.validate();
  if (jammer >= config.num_jammers)
    throw std::out_of_range("derive_params: jammer " + std::to_string(jammer) + " >= N");
  const double L = static_cast<double>(config.num_elements);
  const double gs = config.gamma_s();
  if (!(gs > 0) && config.r_th > 0)
    throw ConfigError("gamma_s_db", "linear transmit SNR is zero with r_th > 0");
  const double thr = std::exp2(config.r_th);
  const double c = 16.0 - pi * pi;

  DerivedParams p;
  p.lambda = pi * pi * L / c;
  p.w1 = c * std::sqrt(config.var_rm * config.var_sr) / (4 * pi);
  p.w2n.resize(config.num_jammers);
  for (std::size_t n = 0; n < p.w2n.size(); ++n)
    p.w2n[n] = c * std::sqrt(config.var_rd * config.var_nr[n]) / (4 * pi);
  p.xi = config.var_sd + L * config.var_rd * config.var_sr;
  p.beta = config.r_th > 0 ? (thr - 1.0) / gs : 0.0;
  p.delta1 = thr * p.xi / (config.gamma_j() * L * config.var_nr[jammer] * config.var_rd);
  p.delta2 = p.xi / (L * config.var_sr * config.var_rm);
  p.zeta_msr = config.var_rm / config.var_sr;
  return p;
}

double w_mean(const SystemConfig& config) {
  return pi / 4 * static_cast<double>(config.num_elements) * std::sqrt(config.var_rm * config.var_sr);
}

double w_variance(const SystemConfig& config) {
  return static_cast<double>(config.num_elements) * config.var_rm * config.var_sr *
         (16.0 - pi * pi) / 16.0;
}

}  // namespace rismon
