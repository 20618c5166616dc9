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
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rismon/channel.hpp"
#include "rismon/config.hpp"

namespace rismon {

// RIS phase shifts, each reduced into [0, 2*pi). Element l applies e^{-j phi_l}.
class PhaseConfig {
 public:
  PhaseConfig() = default;
  explicit PhaseConfig(std::vector<double> phases);

  std::span<const double> phases() const& { return phases_; }
  // A span into a temporary would dangle (e.g. in a range-for).
  std::span<const double> phases() const&& = delete;
  std::size_t size() const { return phases_.size(); }
  double operator[](std::size_t l) const { return phases_[l]; }

 private:
  std::vector<double> phases_;
};

double wrap_phase(double phi);

PhaseConfig design_phases_rislo(const ChannelRealization& real);
PhaseConfig design_phases_risco(const ChannelRealization& real, std::size_t jammer);

// sum_l conj(a_l) e^{-j phi_l} b_l
cplx cascaded_coefficient(std::span<const cplx> a, const PhaseConfig& phases,
                          std::span<const cplx> b);
double cascaded_amplitude(std::span<const cplx> a, const PhaseConfig& phases,
                          std::span<const cplx> b);

double monitoring_rate(double gamma_s, double ls_amplitude);
double suspicious_rate(double gamma_s, double gamma_j, double susp_gain, double cj_gain);
double relative_monitoring_rate(double r_sm, double r_sd);

// First index of the largest entry.
std::size_t argmax_gain(std::span<const double> gains);

// Q_n = |h_rd^H Theta h_nr|^2 for every jammer under fixed phases.
std::vector<double> jammer_gains(const ChannelRealization& real, const PhaseConfig& phases);
// A_n = sum_l |h_rd[l]| |h_nr[n][l]|, the coherent CJ amplitude per jammer.
std::vector<double> jammer_amplitudes(const ChannelRealization& real);

// Jammer choice for a scheme. The random schemes map `uniform_draw` (one raw
// 64-bit draw taken before the channels were sampled) onto {0..N-1}; the
// optimal schemes ignore it. RISLO selects under its own phase design.
std::size_t select_jammer(Scheme scheme, const ChannelRealization& real,
                          std::uint64_t uniform_draw);

// Analytic constants for one jammer of a scenario.
struct DerivedParams {
  double lambda = 0;   // Gamma shape of W and of every CJ amplitude
  double w1 = 0;       // Gamma scale of W
  std::vector<double> w2n;  // Gamma scale of A_n per jammer
  double xi = 0;       // mean of the suspicious gain Y
  double beta = 0;     // (2^R - 1) / gamma_s
  double delta1 = 0;   // 2^R xi / (gamma_j L var_nr var_rd) for the chosen jammer
  double delta2 = 0;   // xi / (L var_sr var_rm)
  double zeta_msr = 0; // var_rm / var_sr
};

DerivedParams derive_params(const SystemConfig& config, std::size_t jammer = 0);

// Corrected first two moments of W = sum_l |h_rm[l]| |h_sr[l]|.
double w_mean(const SystemConfig& config);
double w_variance(const SystemConfig& config);

}  // namespace rismon
