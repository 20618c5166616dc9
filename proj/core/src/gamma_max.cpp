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
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "rismon/analytic.hpp"
#include "rismon/error.hpp"

namespace rismon {

namespace {

double log_sum_exp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(-std::abs(a - b)));
}

// log of sum_{i+j=k} exp(x[i] + y[j]) for k = 0..size-1
std::vector<double> log_convolve(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> out(n, -std::numeric_limits<double>::infinity());
  for (std::size_t k = 0; k < n; ++k) {
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i <= k; ++i) top = std::max(top, x[i] + y[k - i]);
    if (top == -std::numeric_limits<double>::infinity()) continue;
    double s = 0;
    for (std::size_t i = 0; i <= k; ++i) s += std::exp(x[i] + y[k - i] - top);
    out[k] = top + std::log(s);
  }
  return out;
}

// Mixture weights for a given truncation; returns the log weights.
std::vector<double> mixture_log_weights(double lambda, const std::vector<double>& rho,
                                        std::size_t kmax) {
  const std::size_t N = rho.size();
  const double lg1 = std::lgamma(lambda + 1.0);
  std::vector<std::vector<double>> log_u(N, std::vector<double>(kmax + 1));
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t k = 0; k <= kmax; ++k)
      log_u[m][k] = k * std::log(rho[m]) + lg1 - std::lgamma(lambda + k + 1.0);

  const bool equal = std::all_of(rho.begin(), rho.end(), [&](double r) { return r == rho[0]; });
  auto partial = [&](std::size_t skip) {
    std::vector<double> acc;
    for (std::size_t m = 0; m < N; ++m) {
      if (m == skip) continue;
      acc = acc.empty() ? log_u[m] : log_convolve(acc, log_u[m]);
    }
    return acc;
  };

  std::vector<double> log_u_sum(kmax + 1, -std::numeric_limits<double>::infinity());
  if (equal) {
    auto u = partial(0);
    for (std::size_t k = 0; k <= kmax; ++k) log_u_sum[k] = u[k] + std::log(static_cast<double>(N));
  } else {
    for (std::size_t n = 0; n < N; ++n) {
      auto u = partial(n);
      for (std::size_t k = 0; k <= kmax; ++k) log_u_sum[k] = log_sum_exp(log_u_sum[k], u[k]);
    }
  }

  double log_rho_sum = 0;
  for (double r : rho) log_rho_sum += std::log(r);
  const double head = lambda * log_rho_sum - std::lgamma(lambda) - (N - 1.0) * lg1;
  std::vector<double> lw(kmax + 1);
  for (std::size_t k = 0; k <= kmax; ++k)
    lw[k] = head + std::lgamma(N * lambda + k) + log_u_sum[k];
  return lw;
}

}  // namespace

GammaMaxMixture gamma_max_mixture(double lambda, const std::vector<double>& scales) {
  if (scales.empty()) throw std::invalid_argument("gamma_max_mixture: no scales");
  for (double s : scales)
    if (!(s > 0)) throw std::invalid_argument("gamma_max_mixture: scales must be > 0");
  GammaMaxMixture mix;
  const std::size_t N = scales.size();
  if (N == 1) {
    mix.shape = lambda;
    mix.scale = scales[0];
    mix.weights = {1.0};
    return mix;
  }
  double r = 0;
  for (double s : scales) r += 1.0 / s;
  std::vector<double> rho(N);
  for (std::size_t m = 0; m < N; ++m) rho[m] = 1.0 / (scales[m] * r);
  mix.shape = N * lambda;
  mix.scale = 1.0 / r;

  std::size_t kmax = static_cast<std::size_t>(N * (15.0 * std::sqrt(lambda) + 40.0)) + 50;
  for (int attempt = 0; attempt < 6; ++attempt, kmax *= 2) {
    const auto lw = mixture_log_weights(lambda, rho, kmax);
    std::vector<double> w(lw.size());
    double total = 0;
    for (std::size_t k = 0; k < lw.size(); ++k) total += (w[k] = std::exp(lw[k]));
    if (std::abs(total - 1.0) < 1e-12) {
      std::size_t last = w.size();
      while (last > 1 && w[last - 1] < 1e-300) --last;
      w.resize(last);
      mix.weights = std::move(w);
      return mix;
    }
  }
  std::ostringstream os;
  os << "gamma_max_mixture: weights did not sum to 1 (lambda=" << lambda << ", N=" << N << ")";
  throw NumericError(os.str());
}

}  // namespace rismon
