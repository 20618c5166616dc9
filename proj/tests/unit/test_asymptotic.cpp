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
#include <gtest/gtest.h>

#include <cmath>

#include "rismon/analytic.hpp"
#include "rismon/asymptotic.hpp"
#include "rismon/error.hpp"

using namespace rismon;

namespace {

SystemConfig passive(std::size_t L = 4) {
  SystemConfig c;
  c.num_elements = L;
  c.r_th = 0;
  c.gamma_j_db = -80;
  return c;
}

}  // namespace

TEST(PassiveRislo, WhittakerFormMatchesQuadrature) {
  for (std::size_t L : {1, 4, 8, 16, 32}) {
    const auto c = passive(L);
    const auto p = derive_params(c);
    EXPECT_NEAR(ssp_rislo_passive(p, c), ssp_rislo_passive_numeric(p, c), 1e-12) << L;
  }
}

TEST(PassiveRislo, AgreesWithFullModelAtVanishingJamming) {
  const auto c = passive();
  const auto p = derive_params(c);
  EXPECT_NEAR(ssp_rislo_passive(p, c), ssp(Scheme::rislo, c).value, 1e-6);
}

TEST(PassiveRislo, StrongMonitorChannel) {
  auto c = passive();
  double prev = 0;
  for (double v : {0.5, 5.0, 50.0, 5e3}) {
    c.var_rm = v;
    const auto p = derive_params(c);
    const double s = ssp_rislo_passive(p, c);
    EXPECT_GT(s, prev);
    prev = s;
  }
  EXPECT_GT(prev, 0.999);
}

TEST(PassiveRislo, PrintedArgumentDisagrees) {
  const auto c = passive();
  const auto p = derive_params(c);
  EXPECT_GT(std::abs(ssp_rislo_passive_printed(p, c) - ssp_rislo_passive(p, c)), 0.1);
}

TEST(PassiveRisloLargeL, MatchesExactFailureProbability) {
  // Compare failure probabilities, which carry the large-L information.
  for (std::size_t L : {16, 32, 64}) {
    const auto c = passive(L);
    const auto p = derive_params(c);
    const double exact = 1 - ssp_rislo_passive_numeric(p, c);
    EXPECT_NEAR(1 - ssp_rislo_passive_large_l(p, c, 1), exact, 0.01 * exact) << L;
    EXPECT_NEAR(1 - ssp_rislo_passive_large_l(p, c, 2), exact, 0.002 * exact) << L;
  }
}

TEST(PassiveRisloLargeL, ExponentialSaturation) {
  double prev_log = 0;
  for (std::size_t L : {16, 32, 64}) {
    const auto c = passive(L);
    const auto p = derive_params(c);
    const double log_fail = std::log(1 - ssp_rislo_passive_large_l(p, c, 2));
    // Doubling L roughly doubles the exponent.
    if (prev_log != 0) {
      EXPECT_NEAR(log_fail / prev_log, 2.0, 0.25) << L;
    }
    prev_log = log_fail;
  }
  const auto c = passive(256);
  const auto p = derive_params(c);
  EXPECT_NEAR(ssp_rislo_passive_large_l(p, c), ssp_rislo_passive(p, c), 1e-2);
  EXPECT_EQ(ssp_rislo_passive_large_l(p, c), 1.0);
}

TEST(PassiveRisloLargeL, OutOfRegime) {
  const auto c = passive(4);
  const auto p = derive_params(c);
  EXPECT_THROW(ssp_rislo_passive_large_l(p, c), NumericError);
  const auto big = passive(64);
  EXPECT_THROW(ssp_rislo_passive_large_l(derive_params(big), big, 3), std::invalid_argument);
}

TEST(PassiveRisco, Values) {
  EXPECT_NEAR(ssp_risco_passive(derive_params(passive())), 1.0 / 3.0, 1e-12);
  DerivedParams p;
  p.delta2 = 0;
  EXPECT_EQ(ssp_risco_passive(p), 1.0);
}

TEST(MsrLimit, Values) {
  EXPECT_EQ(msr_limit(1.0), 0.5);
  EXPECT_EQ(msr_limit(INFINITY), 1.0);
  EXPECT_NEAR(msr_limit(1e9), 1.0, 1e-8);
  EXPECT_NEAR(ssp_risco_passive(derive_params(passive(4096))), 0.5, 0.01);
}

TEST(MsrLimit, Separation) {
  const auto c = passive(256);
  const auto p = derive_params(c);
  EXPECT_GT(ssp_rislo_passive(p, c), 0.99);
  const double co = ssp_risco_passive(p);
  EXPECT_LT(co, 0.55);
  EXPECT_GT(co, 0.48);
  // gj T^2 is still ~1e-4 at L = 256 and -80 dB
  EXPECT_NEAR(ssp(Scheme::risco, c).value, co, 1e-4);
}
