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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rismon {

inline constexpr std::size_t kMaxJammers = 12;

enum class Scheme { rislo, rislr, risco, riscr };

inline constexpr Scheme kAllSchemes[] = {Scheme::rislo, Scheme::rislr, Scheme::risco,
                                         Scheme::riscr};

std::string_view to_string(Scheme s);
Scheme parse_scheme(std::string_view name);  // case-insensitive, throws ConfigError

double db_to_linear(double db);

// Scenario parameters. Defaults are the reference scenario: L=4 RIS elements,
// N=3 jammers, unit direct-link variance, 0.5 on every RIS hop, 10 dB SNRs,
// R_th = 1 bit/s/Hz and K = 400 quadrature nodes.
struct SystemConfig {
  std::size_t num_elements = 4;
  std::size_t num_jammers = 3;
  double var_sd = 1.0;
  double var_sr = 0.5;
  double var_rm = 0.5;
  double var_rd = 0.5;
  std::vector<double> var_nr = {0.5, 0.5, 0.5};
  double gamma_s_db = 10.0;
  double gamma_j_db = 10.0;
  double r_th = 1.0;
  std::size_t quad_order = 400;
  std::uint64_t master_seed = 20250101;

  double gamma_s() const { return db_to_linear(gamma_s_db); }
  double gamma_j() const { return db_to_linear(gamma_j_db); }

  // Change N, broadcasting the first jammer variance to the new size.
  void set_num_jammers(std::size_t n);

  // Throws ConfigError naming the offending field.
  void validate() const;
};

bool operator==(const SystemConfig& a, const SystemConfig& b);

}  // namespace rismon
