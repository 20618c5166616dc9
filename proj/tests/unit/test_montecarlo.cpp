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
#include <random>

#include "rismon/analytic.hpp"
#include "rismon/asymptotic.hpp"
#include "rismon/montecarlo.hpp"

using namespace rismon;

TEST(Wilson, KnownInterval) {
  const auto i = wilson_interval(50, 100);
  EXPECT_NEAR(i.low, 0.403832, 1e-6);
  EXPECT_NEAR(i.high, 0.596168, 1e-6);
  const auto z = wilson_interval(0, 1000);
  EXPECT_EQ(z.low, 0.0);
  EXPECT_GT(z.high, 0.0);
  const auto one = wilson_interval(1000, 1000);
  EXPECT_LT(one.low, 1.0);
  EXPECT_NEAR(one.high, 1.0, 1e-15);
}

TEST(Wilson, Coverage) {
  std::mt19937_64 rng(5);
  std::bernoulli_distribution coin(0.3);
  const int reps = 4000, n = 500;
  int covered = 0;
  for (int r = 0; r < reps; ++r) {
    std::uint64_t k = 0;
    for (int i = 0; i < n; ++i) k += coin(rng);
    const auto ci = wilson_interval(k, n);
    covered += ci.low <= 0.3 && 0.3 <= ci.high;
  }
  EXPECT_NEAR(covered / double(reps), 0.95, 0.015);
}

TEST(MonteCarlo, DeadMonitorLink) {
  SystemConfig c;
  c.gamma_s_db = -80;
  for (Scheme s : kAllSchemes) EXPECT_LT(estimate_ssp(c, s, 20000, 3).value, 1e-3);
}

TEST(MonteCarlo, WorkerCountDoesNotChangeResults) {
  SystemConfig c;
  const auto a = estimate_ssp_coupled(c, 30000, 99, {1});
  const auto b = estimate_ssp_coupled(c, 30000, 99, {3});
  for (Scheme s : kAllSchemes) {
    EXPECT_EQ(a.at(s).successes, b.at(s).successes);
    EXPECT_EQ(a.at(s).value, b.at(s).value);
  }
  EXPECT_EQ(estimate_ssp(c, Scheme::risco, 30000, 99, {1}).successes,
            estimate_ssp(c, Scheme::risco, 30000, 99, {4}).successes);
}

TEST(MonteCarlo, SingleSchemeMatchesCoupledRun) {
  SystemConfig c;
  const auto all = estimate_ssp_coupled(c, 20000, 8);
  for (Scheme s : kAllSchemes) EXPECT_EQ(estimate_ssp(c, s, 20000, 8).successes, all.at(s).successes);
}

TEST(MonteCarlo, SingleJammerColumnsCoincide) {
  SystemConfig c;
  c.set_num_jammers(1);
  const auto r = estimate_ssp_coupled(c, 20000, 4);
  EXPECT_EQ(r.at(Scheme::rislo).successes, r.at(Scheme::rislr).successes);
  EXPECT_EQ(r.at(Scheme::risco).successes, r.at(Scheme::riscr).successes);
}

TEST(MonteCarlo, EstimateCarriesInterval) {
  SystemConfig c;
  const auto e = estimate_ssp(c, Scheme::rislo, 20000, 12);
  EXPECT_EQ(e.trials, 20000u);
  EXPECT_EQ(e.seed, 12u);
  EXPECT_LE(e.ci_low, e.value);
  EXPECT_GE(e.ci_high, e.value);
}

TEST(MonteCarlo, RisloNearAnalytic) {
  SystemConfig c;
  const auto e = estimate_ssp(c, Scheme::rislo, 200000, 21);
  EXPECT_NEAR(e.value, ssp(Scheme::rislo, c, Method::numeric_integral).value, 0.03);
}

TEST(MonteCarlo, PassiveLimits) {
  SystemConfig c;
  c.r_th = 0;
  c.gamma_j_db = -80;
  const auto p = derive_params(c);
  const auto r = estimate_ssp_coupled(c, 200000, 33);
  EXPECT_NEAR(r.at(Scheme::rislo).value, ssp_rislo_passive(p, c), 0.02);
  EXPECT_NEAR(r.at(Scheme::risco).value, 1.0 / 3.0, 0.02);
}

TEST(EmpiricalCdf, Basics) {
  EmpiricalCdf e({3.0, 1.0, 2.0, 2.0});
  EXPECT_EQ(e(0.5), 0.0);
  EXPECT_EQ(e(2.0), 0.75);
  EXPECT_EQ(e(10.0), 1.0);
  EXPECT_EQ(e.samples().front(), 1.0);
  EXPECT_EQ(ks_distance(e, e), 0.0);
  EXPECT_EQ(ks_distance(e, [&](double x) { return e(x); }), 0.0);
  EXPECT_THROW(empirical_cdf(SystemConfig{}, Quantity::y_gain, 10, 1), std::invalid_argument);
}

TEST(EmpiricalCdf, KsAgainstExponentialDraws) {
  std::mt19937_64 rng(8);
  std::exponential_distribution<double> ex(1.0);
  std::vector<double> s(100000);
  for (auto& x : s) x = ex(rng);
  EXPECT_LT(ks_distance(EmpiricalCdf(std::move(s)), [](double x) { return x > 0 ? -std::expm1(-x) : 0.0; }), 0.01);
}

TEST(EmpiricalCdf, AmplitudeMomentsAtSixteen) {
  SystemConfig c;
  c.num_elements = 16;
  const auto e = empirical_cdf(c, Quantity::w_amplitude, 200000, 2);
  double m = 0;
  for (double w : e.samples()) m += w;
  m /= e.size();
  EXPECT_NEAR(m, w_mean(c), 0.01 * w_mean(c));
}

TEST(EmpiricalCdf, JammingGainIsExponential) {
  SystemConfig c;
  c.num_elements = 32;
  const double mean = 32 * c.var_nr[0] * c.var_rd;
  const auto lo = empirical_cdf(c, Quantity::q_rislo_gain, 100000, 6);
  const auto rnd = empirical_cdf(c, Quantity::q_random_phase_gain, 100000, 7);
  EXPECT_LT(ks_distance(lo, [&](double q) { return cdf_gain_exponential(q, mean); }), 0.02);
  EXPECT_LT(ks_distance(lo, rnd), 0.02);
}

TEST(EmpiricalCdf, SuspiciousGainMean) {
  SystemConfig c;
  const auto y = empirical_cdf(c, Quantity::y_gain, 200000, 9);
  double m = 0;
  for (double v : y.samples()) m += v;
  EXPECT_NEAR(m / y.size(), derive_params(c).xi, 0.02 * derive_params(c).xi);
}
