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
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "rismon/error.hpp"
#include "rismon/specfun.hpp"

namespace rismon {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIter = 100000;

[[noreturn]] void fail(const char* what, double s, double x) {
  std::ostringstream os;
  os.precision(17);
  os << what << " (s=" << s << ", x=" << x << ")";
  throw NumericError(os.str());
}

void check_args(double s, double x) {
  if (!std::isfinite(s) || !std::isfinite(x)) fail("incomplete gamma: non-finite input", s, x);
  if (s <= 0) fail("incomplete gamma: s must be > 0", s, x);
  if (x < 0) fail("incomplete gamma: x must be >= 0", s, x);
}

// Lower regularized P(s, x) by the power series, valid for x < s + 1.
double series_p(double s, double x) {
  double term = 1.0 / s;
  double sum = term;
  for (int k = 1; k < kMaxIter; ++k) {
    term *= x / (s + k);
    sum += term;
    if (term < sum * kEps) {
      return std::exp(s * std::log(x) - x - std::lgamma(s) + std::log(sum));
    }
  }
  fail("incomplete gamma: series did not converge", s, x);
}

// log Gamma(s, x) by the modified Lentz continued fraction, x >= s + 1.
double log_cf_upper(double s, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - s;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIter; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) return -x + s * std::log(x) + std::log(h);
  }
  fail("incomplete gamma: continued fraction did not converge", s, x);
}

}  // namespace

QuadratureGrid chebyshev_grid(std::size_t order) {
  if (order == 0) throw std::invalid_argument("chebyshev_grid: order must be >= 1");
  QuadratureGrid g;
  g.order = order;
  g.theta.resize(order);
  g.tau.resize(order);
  const double K = static_cast<double>(order);
  for (std::size_t k = 1; k <= order; ++k) {
    g.theta[k - 1] = std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * K));
    g.tau[k - 1] = (g.theta[k - 1] + 1.0) * std::numbers::pi / 4.0;
  }
  // cos((2k-1)pi/2K) for k = (K+1)/2 is 6e-17, not 0
  if (order % 2 == 1) g.theta[order / 2] = 0.0, g.tau[order / 2] = std::numbers::pi / 4.0;
  return g;
}

double log_upper_incomplete_gamma(double s, double x) {
  check_args(s, x);
  if (x == 0) return std::lgamma(s);
  if (x < s + 1.0) return std::lgamma(s) + std::log1p(-series_p(s, x));
  return log_cf_upper(s, x);
}

double upper_incomplete_gamma(double s, double x) {
  return std::exp(log_upper_incomplete_gamma(s, x));
}

double regularized_gamma_p(double s, double x) {
  check_args(s, x);
  if (x == 0) return 0.0;
  if (x < s + 1.0) return series_p(s, x);
  return -std::expm1(log_cf_upper(s, x) - std::lgamma(s));
}

double regularized_gamma_q(double s, double x) {
  check_args(s, x);
  if (x == 0) return 1.0;
  if (x < s + 1.0) return 1.0 - series_p(s, x);
  return std::exp(log_cf_upper(s, x) - std::lgamma(s));
}

}  // namespace rismon
