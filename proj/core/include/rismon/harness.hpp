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

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rismon/config.hpp"

namespace rismon {

// key=value text, '#' starts a comment. Missing keys keep the defaults.
SystemConfig parse_config_text(std::string_view text);
SystemConfig parse_config(const std::string& path);
// Apply one "key=value" assignment (also used for CLI overrides).
void apply_config_setting(SystemConfig& config, std::string_view key, std::string_view value);

struct ConfigSetting {
  std::string key;
  std::string value;
  std::size_t line = 0;  // 0 when not from a file
};
// Applies num_jammers first, then the rest in order, then validates.
void apply_config_settings(SystemConfig& config, const std::vector<ConfigSetting>& settings);

enum class SweepAxis { gamma_j_db, msr_db, r_th, gamma_s_db, num_elements };

std::string_view to_string(SweepAxis axis);
SweepAxis parse_axis(std::string_view name);

// Config at one sweep point. msr_db scales var_rm and var_nr by 10^(msr/10).
SystemConfig apply_axis(const SystemConfig& base, SweepAxis axis, double value);

struct SweepSpec {
  SweepAxis axis = SweepAxis::gamma_j_db;
  std::vector<double> values;
  std::vector<Scheme> schemes = {Scheme::rislo, Scheme::rislr, Scheme::risco, Scheme::riscr};
  std::uint64_t trials = 1000000;  // 0 disables the Monte-Carlo column
  std::uint64_t seed = 1;
  std::size_t workers = 0;

  void validate() const;
};

struct SweepRow {
  Scheme scheme;
  SweepAxis axis;
  double axis_value;
  double closed_form;
  double numeric_integral;
  double mc;
  double ci_low;
  double ci_high;
  std::uint64_t trials;
  std::uint64_t seed;
};

std::vector<SweepRow> run_sweep(const SystemConfig& config, const SweepSpec& spec);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void run_sweep(const SystemConfig& config, const SweepSpec& spec, std::ostream& out);

// Empirical CDFs of the CJ gain at L = 32 next to the exponential law.
struct CdfTable {
  std::vector<double> x;
  std::vector<double> theory;
  std::vector<double> rislo_phases;
  std::vector<double> random_phases;
};
CdfTable cdf_table(const SystemConfig& config, std::size_t samples, std::uint64_t seed,
                   std::size_t points = 200);
void write_cdf_csv(std::ostream& out, const CdfTable& table);

inline constexpr std::string_view kFigureNames[] = {"fig2", "fig3", "fig4",
                                                    "fig5", "fig6", "fig7"};

struct FigureOptions {
  std::optional<std::uint64_t> trials;  // override the preset trial count
  std::size_t workers = 0;
};

// Writes the preset's CSV. Throws ConfigError for an unknown name.
void run_figure(std::string_view name, const SystemConfig& base, std::ostream& out,
                const FigureOptions& options = {});
SweepSpec figure_sweep(std::string_view name);

struct DeviationRecord {
  std::string formula;
  double printed = 0;
  double reference = 0;
  double gap = 0;
  std::string point;
  std::string note;
  bool blocking = false;  // true when the run must fail
};

std::string format_record(const DeviationRecord& record);

struct ValidationHooks {
  // Closed-form evaluator under arbitration; replaced by tests to inject faults.
  std::function<double(Scheme, const SystemConfig&)> closed_form;
};

struct ValidationOptions {
  std::size_t mc_samples = 1000000;
  std::size_t ks_samples = 100000;
  std::uint64_t seed = 7;
  std::size_t workers = 0;
  ValidationHooks hooks;
};

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  std::vector<DeviationRecord> deviations;
  bool passed() const;
  int exit_code() const { return passed() ? 0 : 1; }
};

ValidationReport run_validation(const SystemConfig& config, const ValidationOptions& options = {});
void write_report(std::ostream& out, const ValidationReport& report);
// Appends every record to the ledger file.
void append_ledger(const std::string& path, const std::vector<DeviationRecord>& records);

}  // namespace rismon
