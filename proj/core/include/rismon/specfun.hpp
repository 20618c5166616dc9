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

#include <complex>
#include <cstddef>
#include <vector>

namespace rismon {

// Gauss-Chebyshev nodes theta_k = cos((2k-1)pi/(2K)) and their images
// tau_k = (theta_k + 1) pi / 4 on (0, pi/2).
struct QuadratureGrid {
  std::size_t order = 0;
  std::vector<double> theta;
  std::vector<double> tau;
};

QuadratureGrid chebyshev_grid(std::size_t order);

// Upper incomplete gamma Gamma(s, x) and its logarithm, s > 0, x >= 0.
double upper_incomplete_gamma(double s, double x);
double log_upper_incomplete_gamma(double s, double x);
// Regularized P(s, x) and Q(s, x) = 1 - P(s, x).
double regularized_gamma_p(double s, double x);
double regularized_gamma_q(double s, double x);

// log Gamma(z) for complex z, any branch continuous on Re z > 0.
std::complex<double> log_gamma(std::complex<double> z);

// Whittaker W_{a,b}(z), z > 0. The integral representation needs
// b - a + 1/2 > -1; outside that region a NumericError is thrown.
double whittaker_w(double a, double b, double z);
// e^{z/2} z^{-a} W_{a,b}(z): tends to 1 as z grows and never under/overflows
// for the parameter families used here.
double whittaker_w_scaled(double a, double b, double z);

// Partial sum over m < terms of
//   (-1)^m (1/2 - a + b)_m (1/2 - a - b)_m / (m! z^m),
// the asymptotic expansion of whittaker_w_scaled.
double watson_series(double a, double b, double z, std::size_t terms);

// G^{3,1}_{1,3}(x | -a ; -a, 0, 1/2) for a > -1, x > 0, evaluated on a shifted
// Mellin-Barnes contour. Equivalent to
//   2 sqrt(pi) (4x)^{-a} int_0^inf t^{2a+1} e^{-t} / (t^2 + 4x) dt.
double meijer_g_3113(double a, double x);
double log_meijer_g_3113(double a, double x);

namespace detail {
// Contour evaluation with the line Re s = -a - 1/2 + shift, crossed residues
// added back. Exposed so tests can compare two contours.
double log_meijer_g_3113_shift(double a, double x, int shift);
int meijer_g_3113_default_shift(double a, double x);
}  // namespace detail

}  // namespace rismon
