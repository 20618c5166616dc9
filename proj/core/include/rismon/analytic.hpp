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
#include <vector>

#include "rismon/config.hpp"
#include "rismon/model.hpp"

namespace rismon {

enum class Method { closed_form, numeric_integral, printed_form };

struct SspValue {
  double value = 0;
  Method method = Method::closed_form;
  Scheme scheme = Scheme::rislo;
};

double cdf_gain_exponential(double q, double mean);
double cdf_w_gamma(double w, double lambda, double scale);
double pdf_w_gamma(double w, double lambda, double scale);

// Pr(V <= v), V = 2^R Y / (gamma_j max_n Q_n + 1), Y ~ Exp(xi), Q_n ~ Exp(L var_nr[n] var_rd).
double cdf_v(double v, const DerivedParams& params, const SystemConfig& config);
// The printed form, kept to document the discrepancy (equal jammer variances only).
double cdf_v_printed(double v, const DerivedParams& params, const SystemConfig& config);

// The maximum T of N independent Gamma(lambda, mu_n) amplitudes.
double pdf_t(double t, const DerivedParams& params, const SystemConfig& config);

// f_T written as sum_K weight[K] * Gamma(shape + K, scale) density.
struct GammaMaxMixture {
  double shape = 0;
  double scale = 0;
  std::vector<double> weights;
};
GammaMaxMixture gamma_max_mixture(double lambda, const std::vector<double>& scales);
double pdf_t_series(double t, const DerivedParams& params, const SystemConfig& config);

// closed_form: Gauss-Chebyshev sum with K = config.quad_order nodes.
// numeric_integral: adaptive quadrature reference.
// printed_form: the printed Gauss-Chebyshev sum (documentation only).
SspValue ssp_rislo(const DerivedParams& params, const SystemConfig& config,
                   Method method = Method::closed_form);
SspValue ssp_rislr(const DerivedParams& params, const SystemConfig& config,
                   Method method = Method::closed_form);
// closed_form: Gamma-mixture / Meijer-G series. numeric_integral: quadrature over f_T.
SspValue ssp_risco(const DerivedParams& params, const SystemConfig& config,
                   Method method = Method::closed_form);
SspValue ssp_riscr(const DerivedParams& params, const SystemConfig& config,
                   Method method = Method::closed_form);

// Dispatch on scheme, deriving the parameters from the config.
SspValue ssp(Scheme scheme, const SystemConfig& config, Method method = Method::closed_form);

}  // namespace rismon
