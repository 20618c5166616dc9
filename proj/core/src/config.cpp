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
#include "rismon/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "rismon/error.hpp"

namespace rismon {

std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::rislo: return "RISLO";
    case Scheme::rislr: return "RISLR";
    case Scheme::risco: return "RISCO";
    case Scheme::riscr: return "RISCR";
  }
  return "?";
}

Scheme parse_scheme(std::string_view name) {
  std::string up(name);
  std::transform(up.begin(), up.end(), up.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (Scheme s : kAllSchemes)
    if (to_string(s) == up) return s;
  throw ConfigError("scheme", "unknown scheme '" + std::string(name) + "'");
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

void SystemConfig::set_num_jammers(std::size_t n) {
  const double v = var_nr.empty() ? 0.5 : var_nr.front();
  num_jammers = n;
  var_nr.assign(n, v);
}

void SystemConfig::validate() const {
  if (num_elements < 1) throw ConfigError("num_elements", "must be >= 1");
  if (num_elements > 65536) throw ConfigError("num_elements", "must be <= 65536");
  if (num_jammers < 1) throw ConfigError("num_jammers", "must be >= 1");
  if (num_jammers > kMaxJammers)
    throw ConfigError("num_jammers", "must be <= 12 (subset enumeration bound)");
  if (quad_order < 1) throw ConfigError("quad_order", "must be >= 1");
  auto nonneg = [](double v, const char* key) {
    if (!std::isfinite(v) || v < 0) throw ConfigError(key, "must be finite and >= 0");
  };
  nonneg(var_sd, "var_sd");
  nonneg(var_sr, "var_sr");
  nonneg(var_rm, "var_rm");
  nonneg(var_rd, "var_rd");
  if (var_nr.size() != num_jammers)
    throw ConfigError("var_nr", "needs one value per jammer (" + std::to_string(num_jammers) +
                                    "), got " + std::to_string(var_nr.size()));
  for (double v : var_nr) nonneg(v, "var_nr");
  if (!std::isfinite(gamma_s_db)) throw ConfigError("gamma_s_db", "must be finite");
  if (!std::isfinite(gamma_j_db)) throw ConfigError("gamma_j_db", "must be finite");
  nonneg(r_th, "r_th");
}

bool operator==(const SystemConfig& a, const SystemConfig& b) {
  return a.num_elements == b.num_elements && a.num_jammers == b.num_jammers &&
         a.var_sd == b.var_sd && a.var_sr == b.var_sr && a.var_rm == b.var_rm &&
         a.var_rd == b.var_rd && a.var_nr == b.var_nr && a.gamma_s_db == b.gamma_s_db &&
         a.gamma_j_db == b.gamma_j_db && a.r_th == b.r_th && a.quad_order == b.quad_order &&
         a.master_seed == b.master_seed;
}

}  // namespace rismon
