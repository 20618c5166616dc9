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
#include "rismon/asymptotic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "rismon/error.hpp"
#include "rismon/quadrature.hpp"
#include "rismon/specfun.hpp"

namespace rismon {

namespace {

void require(const DerivedParams& p) {
  if (!(p.w1 > 0) || !(p.xi > 0) || !(p.lambda > 0))
    throw ConfigError("var_rm", "passive limits need positive LS and suspicious link variances");
}

double whittaker_a(const DerivedParams& p) { return 0.25 - p.lambda / 2.0; }

}  // namespace

double ssp_rislo_passive(const DerivedParams& params, const SystemConfig& config) {
  (void)config;
  require(params);
  // Pr(W^2 > Y) = 1 - E[e^{-W^2/xi}] = 1 - zeta^{-a} e^{zeta/2} W_{a,-1/4}(zeta)
  const double zeta = params.xi / (4.0 * params.w1 * params.w1);
  return std::clamp(1.0 - whittaker_w_scaled(whittaker_a(params), -0.25, zeta), 0.0, 1.0);
}

double ssp_rislo_passive_numeric(const DerivedParams& params, const SystemConfig& config) {
  (void)config;
  require(params);
  const double hi = quad::gamma_upper_limit(params.lambda, params.w1);
  const double lg = std::lgamma(params.lambda);
  auto f = [&](double w) {
    if (w <= 0) return 0.0;
    return std::exp((params.lambda - 1.0) * std::log(w) - w / params.w1 - lg -
                    params.lambda * std::log(params.w1) - w * w / params.xi);
  };
  const double survive =
      quad::integrate(f, 0.0, hi, quad::gamma_breaks(params.lambda, params.w1, 0.0, hi));
  return std::clamp(1.0 - survive, 0.0, 1.0);
}

double ssp_rislo_passive_printed(const DerivedParams& params, const SystemConfig& config) {
  require(params);
  const double z = static_cast<double>(config.num_elements) * config.var_nr[0] * config.var_rd /
                   (4.0 * params.w1 * params.w1);
  return whittaker_w_scaled(whittaker_a(params), -0.25, z);
}

double ssp_rislo_passive_large_l(const DerivedParams& params, const SystemConfig& config,
                                 std::size_t terms) {
  (void)config;
  require(params);
  if (terms < 1 || terms > 2)
    throw std::invalid_argument("ssp_rislo_passive_large_l: terms must be 1 or 2");
  const double zeta = params.xi / (4.0 * params.w1 * params.w1);
  if (!(zeta > 10.0)) {
    std::ostringstream os;
    os << "ssp_rislo_passive_large_l: out of regime, zeta = " << zeta << " <= 10 (L = "
       << config.num_elements << ")";
    throw NumericError(os.str());
  }
  // Failure probability E[exp(-eps X^2)], X ~ Gamma(lambda, 1), by the saddle
  // point of g(x) = (lambda - 1) log x - x - eps x^2.
  const double eps = 1.0 / (4.0 * zeta);
  const double k = params.lambda - 1.0;
  if (!(k > 0)) throw NumericError("ssp_rislo_passive_large_l: needs lambda > 1");
  const double x = (-1.0 + std::sqrt(1.0 + 8.0 * eps * k)) / (4.0 * eps);
  const double g = k * std::log(x) - x - eps * x * x;
  const double g2 = -k / (x * x) - 2.0 * eps;
  const double g3 = 2.0 * k / (x * x * x);
  const double g4 = -6.0 * k / (x * x * x * x);
  double series = 1.0;
  if (terms == 2)
    series += g4 / (8.0 * g2 * g2) + 5.0 * g3 * g3 / (24.0 * std::pow(-g2, 3));
  const double log_fail =
      g + 0.5 * std::log(2.0 * std::numbers::pi / -g2) + std::log(series) - std::lgamma(params.lambda);
  return std::clamp(1.0 - std::exp(log_fail), 0.0, 1.0);
}

double ssp_risco_passive(const DerivedParams& params) {
  if (!(params.delta2 >= 0)) throw std::invalid_argument("ssp_risco_passive: delta2 must be >= 0");
  return 1.0 / (1.0 + params.delta2);
}

double msr_limit(double zeta_msr) {
  if (!(zeta_msr > 0)) throw std::invalid_argument("msr_limit: zeta must be > 0");
  if (std::isinf(zeta_msr)) return 1.0;
  return zeta_msr / (zeta_msr + 1.0);
}

}  // namespace rismon
