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

// Samplers for the idealized laws the analytic module is built on. These use
// std::mt19937_64 so they share nothing with the library's generator.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "rismon/config.hpp"
#include "rismon/model.hpp"

namespace oracle {

// Max of Gamma(shape, scale_n) draws.
inline double max_gamma(std::mt19937_64& rng, double shape, const std::vector<double>& scales) {
  double t = 0;
  for (double s : scales) t = std::max(t, std::gamma_distribution<double>(shape, s)(rng));
  return t;
}

// Jamming-side penalty 2^R Y / (gamma_j Q + 1) with Y ~ Exp(xi) and Q the
// max of exponential CJ gains.
inline double sample_v(std::mt19937_64& rng, const rismon::DerivedParams& p,
                       const rismon::SystemConfig& c, const std::vector<double>& q_means) {
  const double y = std::exponential_distribution<double>(1.0 / p.xi)(rng);
  double q = 0;
  for (double m : q_means) q = std::max(q, std::exponential_distribution<double>(1.0 / m)(rng));
  return std::exp2(c.r_th) * y / (c.gamma_j() * q + 1.0);
}

inline std::vector<double> q_means(const rismon::SystemConfig& c) {
  std::vector<double> q;
  for (double v : c.var_nr) q.push_back(static_cast<double>(c.num_elements) * v * c.var_rd);
  return q;
}

}  // namespace oracle
