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

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "rismon/analytic.hpp"
#include "rismon/error.hpp"
#include "rismon/harness.hpp"

using namespace rismon;

namespace {

std::size_t count_lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

std::string config_error_key(std::string_view text) {
  try {
    parse_config_text(text);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "";
}

}  // namespace

TEST(Config, EmptyTextIsTableOne) {
  const auto c = parse_config_text("");
  EXPECT_EQ(c, SystemConfig{});
  EXPECT_EQ(c.num_elements, 4u);
  EXPECT_EQ(c.num_jammers, 3u);
  EXPECT_EQ(c.gamma_s_db, 10.0);
  EXPECT_EQ(c.gamma_j_db, 10.0);
  EXPECT_EQ(c.r_th, 1.0);
  EXPECT_EQ(c.quad_order, 400u);
  EXPECT_EQ(c.var_sd, 1.0);
  EXPECT_EQ(c.var_rm, 0.5);
}

TEST(Config, SingleOverride) {
  auto expected = SystemConfig{};
  expected.gamma_j_db = 20;
  EXPECT_EQ(parse_config_text("gamma_j_db=20\n"), expected);
  EXPECT_EQ(parse_config_text("  # comment\ngamma_j_db = 20   # trailing\n\n"), expected);
}

TEST(Config, ErrorsNameTheKey) {
  EXPECT_EQ(config_error_key("num_elements=0"), "num_elements");
  EXPECT_EQ(config_error_key("num_jammers=20"), "num_jammers");
  EXPECT_EQ(config_error_key("var_rm=-1"), "var_rm");
  EXPECT_EQ(config_error_key("gamma_s_db=abc"), "gamma_s_db");
  EXPECT_EQ(config_error_key("quad_order=0"), "quad_order");
  EXPECT_EQ(config_error_key("var_nr=0.5,0.5"), "var_nr");
  EXPECT_FALSE(config_error_key("bogus=1").empty());
  try {
    parse_config_text("r_th=1\nvar_sd=x\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(Config, JammerVariances) {
  const auto a = parse_config_text("var_nr=0.3\nnum_jammers=5\n");
  EXPECT_EQ(a.var_nr, std::vector<double>(5, 0.3));
  const auto b = parse_config_text("var_nr=0.1,0.2\nnum_jammers=2\n");
  EXPECT_EQ(b.var_nr, (std::vector<double>{0.1, 0.2}));
  SystemConfig c;
  c.set_num_jammers(20);
  EXPECT_THROW(c.validate(), ConfigError);
  EXPECT_THROW(run_validation(c), ConfigError);
}

TEST(Config, FileAndOverrides) {
  const std::string path = ::testing::TempDir() + "rismon_cfg.txt";
  {
    std::ofstream f(path);
    f << "num_elements = 8\nr_th = 2\n";
  }
  auto c = parse_config(path);
  EXPECT_EQ(c.num_elements, 8u);
  EXPECT_EQ(c.r_th, 2.0);
  apply_config_settings(c, {{"var_nr", "0.1,0.2,0.3,0.4", 0}, {"num_jammers", "4", 0}});
  EXPECT_EQ(c.var_nr.size(), 4u);
  EXPECT_EQ(c.var_nr[3], 0.4);
  EXPECT_THROW(parse_config(path + ".missing"), std::exception);
  std::remove(path.c_str());
}

TEST(Sweep, AxisApplication) {
  const SystemConfig base;
  const auto m = apply_axis(base, SweepAxis::msr_db, 10);
  EXPECT_NEAR(m.var_rm, 5.0, 1e-12);
  EXPECT_NEAR(derive_params(m).zeta_msr, 10.0, 1e-12);
  EXPECT_EQ(apply_axis(base, SweepAxis::num_elements, 16).num_elements, 16u);
  EXPECT_THROW(apply_axis(base, SweepAxis::num_elements, 2.5), ConfigError);
  EXPECT_EQ(apply_axis(base, SweepAxis::r_th, 3).r_th, 3.0);
  EXPECT_EQ(parse_axis("gamma_s_db"), SweepAxis::gamma_s_db);
  EXPECT_THROW(parse_axis("nope"), ConfigError);
}

TEST(Sweep, RowCountAndHeader) {
  SweepSpec spec;
  spec.values = {0, 5, 10, 15, 20};
  spec.trials = 0;
  std::ostringstream out;
  run_sweep(SystemConfig{}, spec, out);
  const auto csv = out.str();
  EXPECT_EQ(count_lines(csv), 21u);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "scheme,axis_name,axis_value,ssp_closed_form,ssp_numeric_integral,ssp_mc,ci_low,ci_high,trials,seed");
}

TEST(Sweep, MonteCarloColumnIsReproducible) {
  SweepSpec spec;
  spec.values = {0, 10};
  spec.trials = 5000;
  spec.seed = 77;
  std::ostringstream a, b;
  spec.workers = 1;
  run_sweep(SystemConfig{}, spec, a);
  spec.workers = 3;
  run_sweep(SystemConfig{}, spec, b);
  EXPECT_EQ(a.str(), b.str());
  const auto rows = run_sweep(SystemConfig{}, spec);
  ASSERT_EQ(rows.size(), 8u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.trials, 5000u);
    EXPECT_LE(r.ci_low, r.mc);
    EXPECT_GE(r.ci_high, r.mc);
  }
}

TEST(Sweep, InvalidPointsFailBeforeRunning) {
  SweepSpec spec;
  spec.axis = SweepAxis::num_elements;
  spec.values = {4, 0};
  spec.trials = 0;
  EXPECT_THROW(run_sweep(SystemConfig{}, spec), ConfigError);
  spec.values = {};
  EXPECT_THROW(spec.validate(), ConfigError);
}

TEST(Figures, Presets) {
  const auto f2 = figure_sweep("fig2");
  EXPECT_EQ(f2.axis, SweepAxis::gamma_j_db);
  EXPECT_EQ(f2.values, (std::vector<double>{0, 5, 10, 15, 20}));
  EXPECT_EQ(f2.trials, 1000000u);
  EXPECT_EQ(figure_sweep("fig6").axis, SweepAxis::num_elements);
  EXPECT_THROW(figure_sweep("fig9"), ConfigError);
  std::ostringstream out;
  EXPECT_THROW(run_figure("fig0", SystemConfig{}, out), ConfigError);
}

TEST(Figures, ElementSweepShape) {
  auto spec = figure_sweep("fig6");
  spec.trials = 0;
  auto last_two = [&](const SystemConfig& base, Scheme s) {
    std::vector<double> v;
    for (const auto& r : run_sweep(base, spec))
      if (r.scheme == s) v.push_back(r.closed_form);
    return std::pair{v[v.size() - 2], v.back()};
  };
  // With jamming off RISCO levels out below 1 while RISLO saturates.
  SystemConfig passive;
  passive.gamma_j_db = -80;
  EXPECT_GT(last_two(passive, Scheme::rislo).second, 0.999);
  const auto [prev, last] = last_two(passive, Scheme::risco);
  EXPECT_LT(last, 0.5);
  EXPECT_NEAR(last, prev, 0.02);
  // With jamming on, gj T^2 grows like L^2 and RISCO is pushed towards 1 too.
  const auto active = last_two(SystemConfig{}, Scheme::risco);
  EXPECT_GT(active.second, active.first);
  EXPECT_GT(last_two(SystemConfig{}, Scheme::rislo).second, 0.999);
}

TEST(Figures, CdfTable) {
  std::ostringstream out;
  FigureOptions opt;
  opt.trials = 2000;
  run_figure("fig7", SystemConfig{}, out, opt);
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "x,cdf_theory,cdf_rislo_phases,cdf_random_phases");
  EXPECT_EQ(count_lines(out.str()), 201u);
}

TEST(Validation, DefaultConfigPasses) {
  ValidationOptions opt;
  opt.mc_samples = 100000;
  const auto report = run_validation(SystemConfig{}, opt);
  for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  EXPECT_EQ(report.exit_code(), 0);
  const auto w = std::count_if(report.deviations.begin(), report.deviations.end(),
                               [](const DeviationRecord& r) { return r.formula == "w-moments-printed"; });
  EXPECT_EQ(w, 1);
  const auto ks = std::find_if(report.checks.begin(), report.checks.end(),
                               [](const CheckResult& c) { return c.name.find("KS") != std::string::npos; });
  ASSERT_NE(ks, report.checks.end());
  EXPECT_TRUE(ks->passed);
}

TEST(Validation, CorruptedClosedFormIsBlocking) {
  ValidationOptions opt;
  opt.mc_samples = 20000;
  opt.ks_samples = 20000;
  opt.hooks.closed_form = [](Scheme s, const SystemConfig& c) {
    const double v = ssp(s, c, Method::closed_form).value;
    return s == Scheme::risco ? v * 1.05 : v;
  };
  const auto report = run_validation(SystemConfig{}, opt);
  EXPECT_NE(report.exit_code(), 0);
  const auto it = std::find_if(report.deviations.begin(), report.deviations.end(),
                               [](const DeviationRecord& r) { return r.blocking; });
  ASSERT_NE(it, report.deviations.end());
  EXPECT_EQ(it->formula, "risco-meijer-g");
  EXPECT_GT(it->gap, 1e-4);

  const std::string path = ::testing::TempDir() + "rismon_ledger.txt";
  std::remove(path.c_str());
  append_ledger(path, report.deviations);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_NE(text.str().find("formula=risco-meijer-g"), std::string::npos);
  EXPECT_NE(text.str().find("blocking=yes"), std::string::npos);
  EXPECT_EQ(count_lines(text.str()), report.deviations.size());
  std::remove(path.c_str());
}
