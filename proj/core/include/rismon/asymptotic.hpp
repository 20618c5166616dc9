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

#include "rismon/config.hpp"
#include "rismon/model.hpp"

namespace rismon {

// Passive limits: gamma_j -> 0 and R_th = 0 regardless of the config values.

// Pr(W^2 > Y) through the Whittaker function.
double ssp_rislo_passive(const DerivedParams& params, const SystemConfig& config);
// Same probability by direct quadrature over the Gamma law of W.
double ssp_rislo_passive_numeric(const DerivedParams& params, const SystemConfig& config);
// The printed Whittaker expression, kept for the deviation report.
double ssp_rislo_passive_printed(const DerivedParams& params, const SystemConfig& config);

// Saddle-point expansion for large L; terms = 1 (leading order) or 2 (first
// correction). Requires zeta = xi / (4 w1^2) > 10.
double ssp_rislo_passive_large_l(const DerivedParams& params, const SystemConfig& config,
                                 std::size_t terms = 2);

double ssp_risco_passive(const DerivedParams& params);
double msr_limit(double zeta_msr);

}  // namespace rismon
