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
#include "rismon/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rismon/error.hpp"
#include "rismon/quadrature.hpp"
#include "rismon/specfun.hpp"

namespace rismon {

namespace {

using std::numbers::pi;

// E[e^{-s M}] for M the max of independent exponentials, written as
// sum_J (-1)^{|J|+1} r_J / (r_J + s). Each entry is (weight, r_J).
using SubsetSum = std::vector<std::pair<double, double>>;

SubsetSum subset_rates(const std::vector<double>& means) {
  SubsetSum out;
  const std::size_t N = means.size();
  if (std::all_of(means.begin(), means.end(), [&](double q) { return q == means[0]; })) {
    double binom = 1;
    for (std::size_t n = 1; n <= N; ++n) {
      binom = binom * (N - n + 1) / n;
      out.emplace_back((n % 2 == 1 ? 1.0 : -1.0) * binom, n / means[0]);
    }
    return out;
  }
  for (std::size_t mask = 1; mask < (std::size_t{1} << N); ++mask) {
    double r = 0;
    int bits = 0;
    for (std::size_t n = 0; n < N; ++n)
      if (mask & (std::size_t{1} << n)) r += 1.0 / means[n], ++bits;
    out.emplace_back(bits % 2 == 1 ? 1.0 : -1.0, r);
  }
  return out;
}

struct VLaw {
  double thr;   // 2^R
  double xi;
  double gj;
  SubsetSum subsets;

  double cdf(double v) const {
    if (!(v > 0)) return 0.0;
    const double e = std::exp(-v / (thr * xi));
    if (gj == 0) return 1.0 - e;
    const double s = v * gj / (thr * xi);
    double m = 0;
    for (const auto& [w, r] : subsets) m += w * r / (r + s);
    return std::clamp(1.0 - e * m, 0.0, 1.0);
  }
};

std::vector<double> cj_gain_means(const SystemConfig& c) {
  std::vector<double> q(c.num_jammers);
  for (std::size_t n = 0; n < q.size(); ++n)
    q[n] = static_cast<double>(c.num_elements) * c.var_nr[n] * c.var_rd;
  return q;
}

VLaw v_law(const DerivedParams& p, const SystemConfig& c, const std::vector<double>& q) {
  for (double m : q)
    if (!(m > 0)) throw ConfigError("var_nr", "CJ gain mean must be > 0 for the analytic model");
  return {std::exp2(c.r_th), p.xi, c.gamma_j(), subset_rates(q)};
}

void require_w(const DerivedParams& p) {
  if (!(p.w1 > 0) || !(p.lambda > 0))
    throw ConfigError("var_rm", "LS link variances must be > 0 for the analytic model");
  if (!(p.xi > 0)) throw ConfigError("var_sd", "suspicious link mean must be > 0");
}

double log_pdf_gamma(double x, double shape, double scale) {
  return (shape - 1.0) * std::log(x) - x / scale - std::lgamma(shape) - shape * std::log(scale);
}

// Pr(W^2 > beta + V) by adaptive quadrature over w.
double rislo_numeric(const DerivedParams& p, const VLaw& v) {
  const double lo = std::sqrt(p.beta);
  const double hi = quad::gamma_upper_limit(p.lambda, p.w1);
  if (lo >= hi) return 0.0;
  auto f = [&](double w) {
    if (w <= 0) return 0.0;
    return std::exp(log_pdf_gamma(w, p.lambda, p.w1)) * v.cdf(w * w - p.beta);
  };
  // F_V climbs where v gj / (2^R xi) ~ r_J. For strong jamming that layer is
  // far too thin to resolve in w, so it is integrated in v instead.
  double split = lo;
  double head = 0;
  if (v.gj > 0) {
    double r_min = INFINITY;
    for (const auto& [w, r] : v.subsets) r_min = std::min(r_min, r);
    const double knee = r_min * v.thr * v.xi / v.gj;
    const double v_top = std::min(1e4 * knee, hi * hi - p.beta);
    auto g = [&](double vv) {
      const double w = std::sqrt(p.beta + vv);
      if (w <= 0) return 0.0;
      return std::exp(log_pdf_gamma(w, p.lambda, p.w1)) / (2 * w) * v.cdf(vv);
    };
    std::vector<double> vb;
    for (double k : {1e-3, 1e-2, 1e-1, 1.0, 10.0, 100.0, 1e3})
      if (k * knee < v_top) vb.push_back(k * knee);
    // F_V is computed as 1 minus a sum near 1, so relative accuracy is lost
    // deep inside the layer; an absolute floor keeps the estimate honest.
    head = quad::integrate(g, 0.0, v_top, vb, 1e-11, 1e-14);
    split = std::sqrt(p.beta + v_top);
  }
  if (split >= hi) return head;
  return head + quad::integrate(f, split, hi, quad::gamma_breaks(p.lambda, p.w1, split, hi));
}

// Gauss-Chebyshev sum over v = v0 tan(tau) of f_{W^2}(v + beta) F_V(v).
double rislo_chebyshev(const DerivedParams& p, const VLaw& v, std::size_t order) {
  const auto grid = chebyshev_grid(order);
  const double v0 = p.w1 * p.w1 * p.lambda * (p.lambda + 1.0);  // E[W^2]
  double sum = 0;
  for (std::size_t k = 0; k < order; ++k) {
    const double tau = grid.tau[k];
    const double vv = v0 * std::tan(tau);
    const double s = vv + p.beta;
    if (!(s > 0) || !std::isfinite(s)) continue;
    const double w = std::sqrt(s);
    const double log_f = log_pdf_gamma(w, p.lambda, p.w1) - std::log(2 * w);
    const double sec = 1.0 / std::cos(tau);
    sum += std::sqrt(1 - grid.theta[k] * grid.theta[k]) * v0 * sec * sec * std::exp(log_f) *
           v.cdf(vv);
  }
  return pi * pi / (4.0 * order) * sum;
}

// The printed sum: v = tan(tau) and the extra e^{1/(v q)} factor.
double rislo_printed(const DerivedParams& p, const SystemConfig& c, std::size_t n_jammers,
                     double q) {
  const auto grid = chebyshev_grid(c.quad_order);
  const std::size_t N = n_jammers;
  double total = 0;
  for (std::size_t k = 0; k < grid.order; ++k) {
    const double t = std::tan(grid.tau[k]);
    const double sec = 1.0 / std::cos(grid.tau[k]);
    const double root = std::sqrt(t + p.beta);
    const double log_common = std::log(std::sqrt(1 - grid.theta[k] * grid.theta[k]) * sec * sec * t) +
                              (p.lambda - 2.0) * std::log(root) - root / p.w1 + 1.0 / (t * q) -
                              std::log(2.0) - p.lambda * std::log(p.w1) - std::lgamma(p.lambda);
    double binom = 1;
    for (std::size_t n = 1; n <= N; ++n) {
      binom = binom * (N - n + 1) / n;
      total += (n % 2 == 1 ? 1.0 : -1.0) * binom * std::exp(log_common) / (t + n * p.delta1);
    }
  }
  return pi * pi / (4.0 * grid.order) * total;
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

struct RiscoLaw {
  double c;     // e^{-beta / (L var_sr var_rm)}
  double gj;
  double d;     // 1 + 2^R delta2
  double thr_delta2;
};

RiscoLaw risco_law(const DerivedParams& p, const SystemConfig& cfg) {
  const double mz = static_cast<double>(cfg.num_elements) * cfg.var_sr * cfg.var_rm;
  if (!(mz > 0)) throw ConfigError("var_rm", "LS link variances must be > 0 for the analytic model");
  const double td = std::exp2(cfg.r_th) * p.delta2;
  return {std::exp(-p.beta / mz), cfg.gamma_j(), 1.0 + td, td};
}

// f_T by the product rule over N Gamma laws.
double pdf_max(double t, double lambda, const std::vector<double>& scales) {
  if (!(t > 0)) return 0.0;
  double total = 0;
  for (std::size_t n = 0; n < scales.size(); ++n) {
    double term = std::exp(log_pdf_gamma(t, lambda, scales[n]));
    for (std::size_t m = 0; m < scales.size() && term > 0; ++m)
      if (m != n) term *= regularized_gamma_p(lambda, t / scales[m]);
    total += term;
  }
  return total;
}

double risco_numeric(double lambda, const std::vector<double>& scales, const RiscoLaw& law) {
  const double smax = *std::max_element(scales.begin(), scales.end());
  const double hi = quad::gamma_upper_limit(lambda, smax);
  auto breaks = quad::gamma_breaks(lambda, smax, 0.0, hi);
  for (double s : scales) {
    auto b = quad::gamma_breaks(lambda, s, 0.0, hi);
    breaks.insert(breaks.end(), b.begin(), b.end());
  }
  auto f = [&](double t) {
    const double g = law.gj * t * t + 1.0;
    return pdf_max(t, lambda, scales) * g / (g + law.thr_delta2);
  };
  return law.c * quad::integrate(f, 0.0, hi, breaks);
}

// E[1 / (gj X^2 + D)] for X ~ Gamma(shape, scale), through G^{3,1}_{1,3}.
double inverse_quadratic_moment(double shape, double scale, double gj, double d) {
  const double k = gj * scale * scale;
  const double x = d / (4.0 * k);
  const double a = (shape - 2.0) / 2.0;
  const double log_e = -std::lgamma(shape) - std::log(k) + a * std::log(4.0 * x) +
                       log_meijer_g_3113(a, x) - std::log(2.0 * std::sqrt(pi));
  return std::exp(log_e);
}

double risco_closed(double lambda, const std::vector<double>& scales, const RiscoLaw& law) {
  if (law.gj == 0) return law.c / law.d;
  const auto mix = gamma_max_mixture(lambda, scales);
  double m = 0;
  for (std::size_t k = 0; k < mix.weights.size(); ++k) {
    if (mix.weights[k] < 1e-18) continue;
    m += mix.weights[k] * inverse_quadratic_moment(mix.shape + k, mix.scale, law.gj, law.d);
  }
  return law.c * (1.0 - law.thr_delta2 * m);
}

}  // namespace

double cdf_gain_exponential(double q, double mean) {
  if (!(mean > 0)) throw std::invalid_argument("cdf_gain_exponential: mean must be > 0");
  if (q <= 0) return 0.0;
  return -std::expm1(-q / mean);
}

double pdf_w_gamma(double w, double lambda, double scale) {
  if (!(w > 0)) return 0.0;
  return std::exp(log_pdf_gamma(w, lambda, scale));
}

double cdf_w_gamma(double w, double lambda, double scale) {
  if (!(w > 0)) return 0.0;
  if (std::isinf(w)) return 1.0;
  return regularized_gamma_p(lambda, w / scale);
}

double cdf_v(double v, const DerivedParams& params, const SystemConfig& config) {
  if (!(v > 0)) throw std::invalid_argument("cdf_v: v must be > 0");
  return v_law(params, config, cj_gain_means(config)).cdf(v);
}

double cdf_v_printed(double v, const DerivedParams& params, const SystemConfig& config) {
  if (!(v > 0)) throw std::invalid_argument("cdf_v_printed: v must be > 0");
  const double q = static_cast<double>(config.num_elements) * config.var_nr[0] * config.var_rd;
  const std::size_t N = config.num_jammers;
  double binom = 1, total = 0;
  for (std::size_t n = 1; n <= N; ++n) {
    binom = binom * (N - n + 1) / n;
    total += (n % 2 == 1 ? 1.0 : -1.0) * binom * v * std::exp(1.0 / (v * q)) / (v + n * params.delta1);
  }
  return total;
}

double pdf_t(double t, const DerivedParams& params, const SystemConfig& config) {
  if (!(t > 0)) throw std::invalid_argument("pdf_t: t must be > 0");
  (void)config;
  return pdf_max(t, params.lambda, params.w2n);
}

double pdf_t_series(double t, const DerivedParams& params, const SystemConfig& config) {
  if (!(t > 0)) throw std::invalid_argument("pdf_t_series: t must be > 0");
  (void)config;
  const auto mix = gamma_max_mixture(params.lambda, params.w2n);
  double total = 0;
  for (std::size_t k = 0; k < mix.weights.size(); ++k)
    total += mix.weights[k] * std::exp(log_pdf_gamma(t, mix.shape + k, mix.scale));
  return total;
}

SspValue ssp_rislo(const DerivedParams& params, const SystemConfig& config, Method method) {
  require_w(params);
  SspValue out{0, method, Scheme::rislo};
  if (method == Method::printed_form) {
    out.value = rislo_printed(params, config, config.num_jammers, cj_gain_means(config)[0]);
    return out;
  }
  const auto law = v_law(params, config, cj_gain_means(config));
  out.value = clamp01(method == Method::closed_form ? rislo_chebyshev(params, law, config.quad_order)
                                                    : rislo_numeric(params, law));
  return out;
}

SspValue ssp_rislr(const DerivedParams& params, const SystemConfig& config, Method method) {
  require_w(params);
  SspValue out{0, method, Scheme::rislr};
  const auto q = cj_gain_means(config);
  double total = 0;
  for (std::size_t n = 0; n < q.size(); ++n) {
    if (method == Method::printed_form) {
      auto pn = derive_params(config, n);
      total += rislo_printed(pn, config, 1, q[n]);
      continue;
    }
    const auto law = v_law(params, config, {q[n]});
    total += method == Method::closed_form ? rislo_chebyshev(params, law, config.quad_order)
                                           : rislo_numeric(params, law);
  }
  out.value = total / static_cast<double>(q.size());
  if (method != Method::printed_form) out.value = clamp01(out.value);
  return out;
}

SspValue ssp_risco(const DerivedParams& params, const SystemConfig& config, Method method) {
  require_w(params);
  for (double s : params.w2n)
    if (!(s > 0)) throw ConfigError("var_nr", "CJ link variances must be > 0 for the analytic model");
  const auto law = risco_law(params, config);
  SspValue out{0, method == Method::printed_form ? Method::closed_form : method, Scheme::risco};
  out.value = clamp01(method == Method::numeric_integral ? risco_numeric(params.lambda, params.w2n, law)
                                                         : risco_closed(params.lambda, params.w2n, law));
  return out;
}

SspValue ssp_riscr(const DerivedParams& params, const SystemConfig& config, Method method) {
  require_w(params);
  const auto law = risco_law(params, config);
  SspValue out{0, method == Method::printed_form ? Method::closed_form : method, Scheme::riscr};
  double total = 0;
  for (double s : params.w2n) {
    if (!(s > 0)) throw ConfigError("var_nr", "CJ link variances must be > 0 for the analytic model");
    total += method == Method::numeric_integral ? risco_numeric(params.lambda, {s}, law)
                                                : risco_closed(params.lambda, {s}, law);
  }
  out.value = clamp01(total / static_cast<double>(params.w2n.size()));
  return out;
}

SspValue ssp(Scheme scheme, const SystemConfig& config, Method method) {
  const auto p = derive_params(config, 0);
  switch (scheme) {
    case Scheme::rislo: return ssp_rislo(p, config, method);
    case Scheme::rislr: return ssp_rislr(p, config, method);
    case Scheme::risco: return ssp_risco(p, config, method);
    case Scheme::riscr: return ssp_riscr(p, config, method);
  }
  throw std::invalid_argument("ssp: unknown scheme");
}

}  // namespace rismon
