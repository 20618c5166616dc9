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

#include <functional>
#include <initializer_list>
#include <vector>

namespace rismon::quad {

// Adaptive Gauss-Kronrod on [a, b], split at the given interior points.
// Throws NumericError when the error estimate misses both rel_tol * L1 norm
// and abs_tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const std::vector<double>& breaks = {}, double rel_tol = 1e-11,
                 double abs_tol = 0.0);

// Breakpoints around a Gamma(shape, scale) bulk, clipped to [lo, hi].
std::vector<double> gamma_breaks(double shape, double scale, double lo, double hi);
// Point beyond which Gamma(shape, scale) has negligible mass.
double gamma_upper_limit(double shape, double scale);

}  // namespace rismon::quad
