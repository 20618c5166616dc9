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
#include <algorithm>
#include <cmath>
#include <iomanip>
#include <locale>
#include <ostream>
#include <set>
#include <sstream>

#include "rismon/analytic.hpp"
#include "rismon/error.hpp"
#include "rismon/harness.hpp"
#include "rismon/montecarlo.hpp"

namespace rismon {

namespace {

std::string number(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

std::string_view to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::gamma_j_db: return "gamma_j_db";
    case SweepAxis::msr_db: return "msr_db";
    case SweepAxis::r_th: return "r_th";
    case SweepAxis::gamma_s_db: return "gamma_s_db";
    case SweepAxis::num_elements: return "num_elements";
  }
  return "?";
}

SweepAxis parse_axis(std::string_view name) {
  for (auto a : {SweepAxis::gamma_j_db, SweepAxis::msr_db, SweepAxis::r_th, SweepAxis::gamma_s_db,
                 SweepAxis::num_elements})
    if (to_string(a) == name) return a;
  throw ConfigError("axis", "unknown sweep axis '" + std::string(name) + "'");
}

SystemConfig apply_axis(const SystemConfig& base, SweepAxis axis, double value) {
  SystemConfig c = base;
  switch (axis) {
    case SweepAxis::gamma_j_db: c.gamma_j_db = value; break;
    case SweepAxis::gamma_s_db: c.gamma_s_db = value; break;
    case SweepAxis::r_th: c.r_th = value; break;
    case SweepAxis::msr_db: {
      const double f = db_to_linear(value);
      c.var_rm = base.var_rm * f;
      for (auto& v : c.var_nr) v *= f;
      break;
    }
    case SweepAxis::num_elements:
      if (!(value >= 1) || value != std::floor(value))
        throw ConfigError("num_elements", "sweep value must be a positive integer, got " + number(value));
      c.num_elements = static_cast<std::size_t>(value);
      break;
  }
  c.validate();
  return c;
}

void SweepSpec::validate() const {
  if (values.empty()) throw ConfigError("values", "sweep needs at least one value");
  for (std::size_t i = 1; i < values.size(); ++i)
    if (!(values[i] > values[i - 1])) throw ConfigError("values", "sweep values must be strictly increasing");
  if (schemes.empty()) throw ConfigError("schemes", "sweep needs at least one scheme");
  std::set<Scheme> seen(schemes.begin(), schemes.end());
  if (seen.size() != schemes.size()) throw ConfigError("schemes", "duplicate scheme");
}

std::vector<SweepRow> run_sweep(const SystemConfig& config, const SweepSpec& spec) {
  spec.validate();
  std::vector<SystemConfig> points;
  for (double v : spec.values) points.push_back(apply_axis(config, spec.axis, v));

  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const SystemConfig& c = points[i];
    try {
      std::map<Scheme, SspEstimate> mc;
      if (spec.trials > 0) mc = estimate_ssp_coupled(c, spec.trials, spec.seed, {spec.workers});
      for (Scheme s : spec.schemes) {
        SweepRow r{s, spec.axis, spec.values[i], ssp(s, c, Method::closed_form).value,
                   ssp(s, c, Method::numeric_integral).value, std::nan(""), std::nan(""),
                   std::nan(""), spec.trials, spec.seed};
        if (spec.trials > 0) {
          const auto& e = mc.at(s);
          r.mc = e.value;
          r.ci_low = e.ci_low;
          r.ci_high = e.ci_high;
        }
        rows.push_back(r);
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw NumericError(std::string(e.what()) + " [sweep point " + std::string(to_string(spec.axis)) +
                         "=" + number(spec.values[i]) + "]");
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "scheme,axis_name,axis_value,ssp_closed_form,ssp_numeric_integral,ssp_mc,ci_low,ci_high,"
         "trials,seed\n";
  for (const auto& r : rows) {
    out << to_string(r.scheme) << ',' << to_string(r.axis) << ',' << number(r.axis_value) << ','
        << number(r.closed_form) << ',' << number(r.numeric_integral) << ',' << number(r.mc) << ','
        << number(r.ci_low) << ',' << number(r.ci_high) << ',' << r.trials << ',' << r.seed << '\n';
  }
  if (!out) throw std::runtime_error("write_sweep_csv: output stream failed");
}

void run_sweep(const SystemConfig& config, const SweepSpec& spec, std::ostream& out) {
  write_sweep_csv(out, run_sweep(config, spec));
}

CdfTable cdf_table(const SystemConfig& config, std::size_t samples, std::uint64_t seed,
                   std::size_t points) {
  config.validate();
  const double mean = static_cast<double>(config.num_elements) * config.var_nr[0] * config.var_rd;
  const auto rislo = empirical_cdf(config, Quantity::q_rislo_gain, samples, seed);
  const auto random = empirical_cdf(config, Quantity::q_random_phase_gain, samples, seed + 1);
  CdfTable t;
  const double top = -mean * std::log(1e-3);
  for (std::size_t i = 0; i < points; ++i) {
    const double x = top * static_cast<double>(i) / static_cast<double>(points - 1);
    t.x.push_back(x);
    t.theory.push_back(cdf_gain_exponential(x, mean));
    t.rislo_phases.push_back(rislo(x));
    t.random_phases.push_back(random(x));
  }
  return t;
}

void write_cdf_csv(std::ostream& out, const CdfTable& t) {
  out << "x,cdf_theory,cdf_rislo_phases,cdf_random_phases\n";
  for (std::size_t i = 0; i < t.x.size(); ++i)
    out << number(t.x[i]) << ',' << number(t.theory[i]) << ',' << number(t.rislo_phases[i]) << ','
        << number(t.random_phases[i]) << '\n';
  if (!out) throw std::runtime_error("write_cdf_csv: output stream failed");
}

SweepSpec figure_sweep(std::string_view name) {
  SweepSpec s;
  s.trials = 1000000;
  if (name == "fig2") {
    s.axis = SweepAxis::gamma_j_db;
    s.values = {0, 5, 10, 15, 20};
    s.seed = 2002;
  } else if (name == "fig3") {
    s.axis = SweepAxis::msr_db;
    s.values = {-10, -5, 0, 5, 10};
    s.seed = 2003;
  } else if (name == "fig4") {
    s.axis = SweepAxis::r_th;
    s.values = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
    s.seed = 2004;
  } else if (name == "fig5") {
    s.axis = SweepAxis::gamma_s_db;
    s.values = {0, 5, 10, 15, 20};
    s.seed = 2005;
  } else if (name == "fig6") {
    s.axis = SweepAxis::num_elements;
    s.values = {2, 4, 8, 16, 32, 64};
    s.seed = 2006;
  } else {
    throw ConfigError("figure", "no sweep preset named '" + std::string(name) + "'");
  }
  return s;
}

void run_figure(std::string_view name, const SystemConfig& base, std::ostream& out,
                const FigureOptions& options) {
  if (name == "fig7") {
    SystemConfig c = base;
    c.num_elements = 32;
    write_cdf_csv(out, cdf_table(c, options.trials.value_or(100000), 2007));
    return;
  }
  SweepSpec s = figure_sweep(name);
  if (options.trials) s.trials = *options.trials;
  s.workers = options.workers;
  run_sweep(base, s, out);
}

}  // namespace rismon
