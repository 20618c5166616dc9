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
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "rismon/error.hpp"
#include "rismon/specfun.hpp"

namespace rismon {

namespace {

using std::numbers::pi;

[[noreturn]] void fail(const std::string& what, double a, double x, int shift) {
  std::ostringstream os;
  os.precision(17);
  os << "meijer_g_3113: " << what << " (a=" << a << ", x=" << x << ", shift=" << shift << ")";
  throw NumericError(os.str());
}

struct Term {
  double sign;
  double log_mag;
};

// Residue contribution 2 sqrt(pi) (-1)^j Gamma(2a - 2j) (4x)^{j-a}.
Term residue(double a, double log4x, int j) {
  return {(j % 2 == 0) ? 1.0 : -1.0,
          std::log(2 * std::sqrt(pi)) + std::lgamma(2 * a - 2.0 * j) + (j - a) * log4x};
}

}  // namespace

namespace detail {

int meijer_g_3113_default_shift(double a, double x) {
  // Put the line near the saddle at s ~ -sqrt(x), keeping Re s <= -1/4.
  const int max_shift = static_cast<int>(std::floor(a + 0.25));
  const double target = std::round(a + 0.5 - std::sqrt(x));
  const double m = std::clamp(target, -20000.0, static_cast<double>(max_shift));
  return static_cast<int>(m);
}

double log_meijer_g_3113_shift(double a, double x, int m) {
  if (!std::isfinite(a) || !std::isfinite(x)) fail("non-finite input", a, x, m);
  if (!(a > -1.0)) fail("requires a > -1", a, x, m);
  if (!(x > 0)) fail("requires x > 0", a, x, m);
  const double c = -a - 0.5 + m;
  if (!(c < 0)) fail("contour must stay left of s = 0", a, x, m);

  const double log4x = std::log(4 * x);
  std::vector<Term> terms;

  // Mellin-Barnes integrand on Re s = c reduces to
  //   2 pi^{3/2} (-1)^m Gamma(-2c - 2it) (4x)^{c+it} / cosh(pi t),
  // even in t after taking the real part.
  const double base = std::lgamma(-2 * c);
  const double d = std::min(0.5, -c);  // distance to the nearest pole off the line
  const double h = d / 8.0;
  const double t_max = 14.0;
  double line = 0.0;
  for (int k = 0;; ++k) {
    const double t = k * h;
    if (t > t_max) break;
    const std::complex<double> lg = log_gamma(std::complex<double>(-2 * c, -2 * t));
    const std::complex<double> ph(lg.real() - base, lg.imag() + t * log4x);
    const double v = (std::exp(ph)).real() / std::cosh(pi * t);
    line += (k == 0 ? 0.5 : 1.0) * v;
  }
  line *= h;
  if (line != 0.0) {
    terms.push_back({((m % 2 == 0) ? 1.0 : -1.0) * (line > 0 ? 1.0 : -1.0),
                     std::log(2 * std::sqrt(pi)) + base + c * log4x + std::log(std::abs(line))});
  }

  if (m > 0) {
    for (int j = 0; j < m; ++j) terms.push_back(residue(a, log4x, j));
  } else {
    for (int j = m; j <= -1; ++j) {
      Term r = residue(a, log4x, j);
      r.sign = -r.sign;
      terms.push_back(r);
    }
  }

  double top = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms) top = std::max(top, t.log_mag);
  double sum = 0.0;
  for (const auto& t : terms) sum += t.sign * std::exp(t.log_mag - top);
  if (!(sum > 0) || !std::isfinite(top)) fail("contour sum is not positive", a, x, m);
  return top + std::log(sum);
}

}  // namespace detail

double log_meijer_g_3113(double a, double x) {
  return detail::log_meijer_g_3113_shift(a, x, detail::meijer_g_3113_default_shift(a, x));
}

double meijer_g_3113(double a, double x) { return std::exp(log_meijer_g_3113(a, x)); }

}  // namespace rismon
