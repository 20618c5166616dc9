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
#include <complex>
#include <numbers>

#include "rismon/specfun.hpp"

namespace rismon {

namespace {

using cd = std::complex<double>;

// Stirling series with Bernoulli terms B_2k / (2k (2k-1) z^(2k-1)), |z| >= 15.
cd stirling(cd z) {
  static constexpr double c[] = {1.0 / 12,        -1.0 / 360,        1.0 / 1260,
                                 -1.0 / 1680,     1.0 / 1188,        -691.0 / 360360,
                                 1.0 / 156,       -3617.0 / 122400};
  const cd inv = 1.0 / z;
  const cd inv2 = inv * inv;
  cd sum = 0;
  cd p = inv;
  for (double ck : c) {
    sum += ck * p;
    p *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2 * std::numbers::pi) + sum;
}

}  // namespace

cd log_gamma(cd z) {
  if (z.imag() == 0 && z.real() > 0) return std::lgamma(z.real());
  if (z.real() < 0.5) {
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(std::numbers::pi) - std::log(std::sin(std::numbers::pi * z)) -
           log_gamma(1.0 - z);
  }
  cd shift = 0;
  while (std::abs(z) < 15.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling(z) - shift;
}

}  // namespace rismon
