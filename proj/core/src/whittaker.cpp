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
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <sstream>

#include "rismon/error.hpp"
#include "rismon/quadrature.hpp"
#include "rismon/specfun.hpp"

namespace rismon {

namespace {

[[noreturn]] void fail(const char* what, double a, double b, double z) {
  std::ostringstream os;
  os.precision(17);
  os << what << " (a=" << a << ", b=" << b << ", z=" << z << ")";
  throw NumericError(os.str());
}

// Watson sum if it reaches full precision before the terms start growing.
bool try_watson(double a, double b, double z, double& out) {
  const double p = 0.5 - a + b;
  const double q = 0.5 - a - b;
  double term = 1.0, sum = 1.0;
  for (int m = 0; m < 200; ++m) {
    const double next = -term * (p + m) * (q + m) / ((m + 1) * z);
    if (std::abs(next) > std::abs(term)) return false;
    sum += next;
    term = next;
    if (std::abs(term) < 1e-15 * std::abs(sum)) {
      out = sum;
      return true;
    }
  }
  return false;
}

// z^alpha U(alpha, 1 + 2b, z) = (1/Gamma(alpha)) int_0^inf e^{-u} u^{alpha-1} (1 + u/z)^e du
// with e = a + b - 1/2.
double scaled_by_integral(double a, double b, double z) {
  const double alpha = b - a + 0.5;
  const double e = a + b - 0.5;
  if (!(alpha > -1.0)) fail("whittaker_w: integral representation needs b - a + 1/2 > -1", a, b, z);

  const double shape = std::max(alpha, 1.0) + std::max(e, 0.0);
  const double hi = quad::gamma_upper_limit(shape, 1.0);

  if (alpha >= 1.0) {
    const double lg = std::lgamma(alpha);
    auto f = [&](double u) {
      if (u <= 0) return alpha == 1.0 ? std::exp(-lg) : 0.0;
      return std::exp((alpha - 1.0) * std::log(u) - u + e * std::log1p(u / z) - lg);
    };
    return quad::integrate(f, 0.0, hi, quad::gamma_breaks(shape, 1.0, 0.0, hi));
  }

  // Subtract the value at u = 0 so the integral also converges for alpha in (-1, 0].
  auto g0 = [&](double u) {
    return std::expm1(-u + e * std::log1p(u / z)) * std::pow(u, alpha - 1.0);
  };
  boost::math::quadrature::tanh_sinh<double> ts;
  double err = 0;
  const double near = ts.integrate(g0, 0.0, 1.0, 1e-13, &err);
  auto g1 = [&](double u) {
    return std::exp((alpha - 1.0) * std::log(u) - u + e * std::log1p(u / z));
  };
  const double far = quad::integrate(g1, 1.0, std::max(hi, 2.0), quad::gamma_breaks(shape, 1.0, 1.0, hi));
  const double r = (alpha * (near + far) + 1.0) / std::tgamma(alpha + 1.0);
  if (!std::isfinite(r)) fail("whittaker_w: integral evaluation failed", a, b, z);
  return r;
}

}  // namespace

double whittaker_w_scaled(double a, double b, double z) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(z)) fail("whittaker_w: non-finite input", a, b, z);
  if (!(z > 0)) fail("whittaker_w: z must be > 0", a, b, z);
  double w = 0;
  if (z > 30.0 && try_watson(a, b, z, w)) return w;
  return scaled_by_integral(a, b, z);
}

double whittaker_w(double a, double b, double z) {
  const double s = whittaker_w_scaled(a, b, z);
  const double r = s * std::exp(-0.5 * z + a * std::log(z));
  if (std::isinf(r)) fail("whittaker_w: result overflows", a, b, z);
  return r;
}

double watson_series(double a, double b, double z, std::size_t terms) {
  const double p = 0.5 - a + b;
  const double q = 0.5 - a - b;
  double term = 1.0, sum = 0.0;
  for (std::size_t m = 0; m < terms; ++m) {
    sum += term;
    term *= -(p + m) * (q + m) / ((m + 1.0) * z);
  }
  return sum;
}

}  // namespace rismon
