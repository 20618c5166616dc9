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
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rismon/analytic.hpp"
#include "rismon/error.hpp"
#include "rismon/harness.hpp"
#include "rismon/montecarlo.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kValidationFailed = 1;
constexpr int kUsage = 2;

rismon::SystemConfig load(const std::string& path, const std::vector<std::string>& sets) {
  rismon::SystemConfig c = path.empty() ? rismon::SystemConfig{} : rismon::parse_config(path);
  std::vector<rismon::ConfigSetting> settings;
  for (const auto& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw rismon::ConfigError("set", "expected key=value, got '" + s + "'");
    settings.push_back({s.substr(0, eq), s.substr(eq + 1), 0});
  }
  rismon::apply_config_settings(c, settings);
  return c;
}

std::vector<double> parse_values(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw rismon::ConfigError("values", "not a number: '" + item + "'");
    }
  }
  return out;
}

std::vector<rismon::Scheme> parse_schemes(const std::string& text) {
  std::vector<rismon::Scheme> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(rismon::parse_scheme(item));
  return out;
}

// Output to a file when a path is given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw rismon::ConfigError("out", "cannot open '" + path + "' for writing");
    }
  }
  std::ostream& get() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rismon: surveillance success probability for RIS-aided monitoring with cooperative jamming"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> sets;
  std::size_t workers = 0;
  app.add_option("-c,--config", config_path, "key=value config file")->check(CLI::ExistingFile);
  app.add_option("-s,--set", sets, "override one config key (key=value), repeatable");
  app.add_option("-j,--workers", workers, "Monte-Carlo worker threads (0 = all cores)");

  std::uint64_t trials = 1000000;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::string schemes_text = "RISLO,RISLR,RISCO,RISCR";

  auto* ssp_cmd = app.add_subcommand("ssp", "all SSP estimates at one operating point (CSV)");
  ssp_cmd->add_option("--schemes", schemes_text, "comma list of RISLO,RISLR,RISCO,RISCR");
  ssp_cmd->add_option("--trials", trials, "Monte-Carlo trials (0 skips simulation)");
  ssp_cmd->add_option("--seed", seed, "Monte-Carlo master seed (default: config master_seed)");
  ssp_cmd->add_option("--out", out_path, "output CSV (default stdout)");

  std::string axis;
  std::string values;
  auto* sweep_cmd = app.add_subcommand("sweep", "SSP along one parameter axis (CSV)");
  sweep_cmd->add_option("--axis", axis, "gamma_j_db, msr_db, r_th, gamma_s_db or num_elements")->required();
  sweep_cmd->add_option("--values", values, "comma list, strictly increasing")->required();
  sweep_cmd->add_option("--schemes", schemes_text, "comma list of RISLO,RISLR,RISCO,RISCR");
  sweep_cmd->add_option("--trials", trials, "Monte-Carlo trials per point (0 skips simulation)");
  sweep_cmd->add_option("--seed", seed, "Monte-Carlo master seed (default: config master_seed)");
  sweep_cmd->add_option("--out", out_path, "output CSV (default stdout)");

  std::string ledger_path;
  std::size_t mc_samples = 1000000;
  auto* validate_cmd = app.add_subcommand("validate", "run the invariant suite and typo arbitration");
  validate_cmd->add_option("--ledger", ledger_path, "append deviation records to this file");
  validate_cmd->add_option("--samples", mc_samples, "samples for the moment check");

  std::string figure;
  std::optional<std::uint64_t> figure_trials;
  auto* figure_cmd = app.add_subcommand("figure", "reproduce a figure preset as CSV");
  figure_cmd->add_option("name", figure, "fig2 .. fig7")->required()->check(
      CLI::IsMember({"fig2", "fig3", "fig4", "fig5", "fig6", "fig7"}));
  figure_cmd->add_option("--trials", figure_trials, "override trials per point, 0 skips simulation (samples for fig7)");
  figure_cmd->add_option("--out", out_path, "output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    const rismon::SystemConfig config = load(config_path, sets);

    if (*ssp_cmd || *sweep_cmd) {
      rismon::SweepSpec spec;
      if (*ssp_cmd) {
        spec.axis = rismon::SweepAxis::gamma_j_db;
        spec.values = {config.gamma_j_db};
      } else {
        spec.axis = rismon::parse_axis(axis);
        spec.values = parse_values(values);
      }
      spec.schemes = parse_schemes(schemes_text);
      spec.trials = trials;
      spec.seed = seed.value_or(config.master_seed);
      spec.workers = workers;
      spec.validate();
      Sink sink(out_path);
      rismon::run_sweep(config, spec, sink.get());
      return kOk;
    }

    if (*validate_cmd) {
      rismon::ValidationOptions opts;
      opts.mc_samples = mc_samples;
      opts.workers = workers;
      const auto report = rismon::run_validation(config, opts);
      rismon::write_report(std::cout, report);
      if (!ledger_path.empty()) rismon::append_ledger(ledger_path, report.deviations);
      return report.passed() ? kOk : kValidationFailed;
    }

    if (*figure_cmd) {
      rismon::FigureOptions opts;
      opts.trials = figure_trials;
      opts.workers = workers;
      Sink sink(out_path);
      rismon::run_figure(figure, config, sink.get(), opts);
      return kOk;
    }
  } catch (const rismon::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidationFailed;
  }
  return kUsage;
}
