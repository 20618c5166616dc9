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
#include <functional>
#include <map>
#include <vector>

#include "rismon/config.hpp"

namespace rismon {

struct SspEstimate {
  double value = 0;
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double ci_low = 0;
  double ci_high = 0;
  Scheme scheme = Scheme::rislo;
  std::uint64_t seed = 0;
};

struct Interval {
  double low;
  double high;
};

// 95% Wilson score interval.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.959963984540054);

struct McOptions {
  // 0 picks std::thread::hardware_concurrency().
  std::size_t workers = 0;
};

SspEstimate estimate_ssp(const SystemConfig& config, Scheme scheme, std::uint64_t trials,
                         std::uint64_t seed, const McOptions& options = {});

// All four schemes on the same realizations. Throws std::logic_error if a
// trial ever has RISLO failing while RISLR succeeds.
std::map<Scheme, SspEstimate> estimate_ssp_coupled(const SystemConfig& config,
                                                   std::uint64_t trials, std::uint64_t seed,
                                                   const McOptions& options = {});

enum class Quantity { q_rislo_gain, w_amplitude, y_gain, q_random_phase_gain };

class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::vector<double> samples);

  double operator()(double x) const;  // fraction of samples <= x
  const std::vector<double>& samples() const { return sorted_; }
  std::size_t size() const { return sorted_.size(); }

 private:
  std::vector<double> sorted_;
};

// Quantity samples are drawn for jammer 0; the random-phase gain uses
// independent uniform phases instead of the RISLO design.
EmpiricalCdf empirical_cdf(const SystemConfig& config, Quantity quantity, std::size_t samples,
                           std::uint64_t seed);

double ks_distance(const EmpiricalCdf& a, const EmpiricalCdf& b);
double ks_distance(const EmpiricalCdf& a, const std::function<double(double)>& cdf);

}  // namespace rismon
