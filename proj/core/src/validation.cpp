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
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include "rismon/analytic.hpp"
#include "rismon/asymptotic.hpp"
#include "rismon/channel.hpp"
#include "rismon/error.hpp"
#include "rismon/harness.hpp"
#include "rismon/model.hpp"
#include "rismon/montecarlo.hpp"
#include "rismon/quadrature.hpp"
#include "rismon/specfun.hpp"

namespace rismon {

namespace {

using std::numbers::pi;

constexpr double kArbitrationTol = 1e-4;

std::string fmt(double v, int precision = 6) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

std::string point_of(const SystemConfig& c) {
  std::ostringstream os;
  os << "L=" << c.num_elements << ";N=" << c.num_jammers << ";gamma_s_db=" << c.gamma_s_db
     << ";gamma_j_db=" << c.gamma_j_db << ";r_th=" << c.r_th << ";var_sd=" << c.var_sd
     << ";var_sr=" << c.var_sr << ";var_rm=" << c.var_rm << ";var_rd=" << c.var_rd
     << ";var_nr=" << c.var_nr[0] << ";K=" << c.quad_order;
  return os.str();
}

class Suite {
 public:
  explicit Suite(ValidationReport& r) : report_(r) {}

  template <class F>
  void check(const std::string& name, F&& body) {
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
      ok = false;
    }
    report_.checks.push_back({name, ok, detail});
  }

  void record(DeviationRecord r) {
    if (r.gap > kArbitrationTol || !std::isfinite(r.gap)) report_.deviations.push_back(std::move(r));
  }

 private:
  ValidationReport& report_;
};

std::string closed_form_id(Scheme s) {
  switch (s) {
    case Scheme::rislo: return "rislo-gauss-chebyshev";
    case Scheme::rislr: return "rislr-gauss-chebyshev";
    case Scheme::risco: return "risco-meijer-g";
    case Scheme::riscr: return "riscr-meijer-g";
  }
  return "unknown";
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

bool coherent_identity(std::string& detail, std::uint64_t seed) {
  double worst = 0;
  for (std::size_t L : {1, 4, 64}) {
    SystemConfig c;
    c.num_elements = L;
    for (std::uint64_t i = 0; i < 1000; ++i) {
      RandomStream s = RandomStream::for_trial(seed, i);
      const auto real = sample_channels(c, s);
      double ls = 0, cj = 0;
      for (std::size_t l = 0; l < L; ++l) {
        ls += std::abs(real.h_rm[l]) * std::abs(real.h_sr[l]);
        cj += std::abs(real.h_rd[l]) * std::abs(real.jammer(0)[l]);
      }
      worst = std::max(worst, rel(cascaded_amplitude(real.h_rm, design_phases_rislo(real), real.h_sr), ls));
      worst = std::max(worst, rel(cascaded_amplitude(real.h_rd, design_phases_risco(real, 0), real.jammer(0)), cj));
      const PhaseConfig phases = design_phases_rislo(real);
      for (double p : phases.phases())
        if (!(p >= 0 && p < 2 * pi)) {
          detail = "phase outside [0, 2pi): " + fmt(p, 17);
          return false;
        }
    }
  }
  detail = "max relative gap " + fmt(worst, 3) + " over 3000 realizations";
  return worst < 1e-10;
}

// 2 sqrt(pi) (4x)^{-a} int_0^inf t^{2a+1} e^{-t} / (t^2 + 4x) dt, in logs.
double meijer_integral(double a, double x) {
  const double shape = 2 * a + 2;
  const double lg = std::lgamma(shape);
  auto f = [&](double t) {
    if (t <= 0) return 0.0;
    return std::exp((shape - 1) * std::log(t) - t - lg) / (t * t + 4 * x);
  };
  boost::math::quadrature::tanh_sinh<double> ts;
  const double hi = quad::gamma_upper_limit(shape, 1.0);
  const double head = ts.integrate(f, 0.0, 1.0, 1e-13);
  const double tail = quad::integrate(f, 1.0, std::max(hi, 2.0), quad::gamma_breaks(shape, 1.0, 1.0, hi));
  return std::log(2 * std::sqrt(pi)) - a * std::log(4 * x) + lg + std::log(head + tail);
}

// Pr(V <= v) straight from the definition, as a quadrature over y.
double cdf_v_by_quadrature(double v, const SystemConfig& c, double xi) {
  const double thr = std::exp2(c.r_th);
  const double gj = c.gamma_j();
  std::vector<double> q(c.num_jammers);
  for (std::size_t n = 0; n < q.size(); ++n)
    q[n] = static_cast<double>(c.num_elements) * c.var_nr[n] * c.var_rd;
  auto f = [&](double y) {
    const double m = (thr * y / v - 1.0) / gj;
    if (m <= 0) return std::exp(-y / xi) / xi;
    double below = 1;
    for (double qn : q) below *= -std::expm1(-m / qn);
    return std::exp(-y / xi) / xi * (1.0 - below);
  };
  const double knee = v / thr;
  return quad::integrate(f, 0.0, knee + 60.0 * xi, {knee, knee + xi, knee + 5 * xi});
}

}  // namespace

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string format_record(const DeviationRecord& r) {
  std::ostringstream os;
  os << std::setprecision(10) << "formula=" << r.formula << " printed=" << r.printed
     << " reference=" << r.reference << " gap=" << r.gap << " point=" << r.point
     << " blocking=" << (r.blocking ? "yes" : "no");
  if (!r.note.empty()) os << " note=\"" << r.note << "\"";
  return os.str();
}

ValidationReport run_validation(const SystemConfig& config, const ValidationOptions& options) {
  config.validate();
  ValidationReport report;
  Suite suite(report);
  auto closed = options.hooks.closed_form
                    ? options.hooks.closed_form
                    : [](Scheme s, const SystemConfig& c) { return ssp(s, c, Method::closed_form).value; };
  const DerivedParams p = derive_params(config, 0);

  suite.check("core-model: coherent combining and phase wrap",
              [&](std::string& d) { return coherent_identity(d, options.seed); });

  suite.check("core-model: W moments at L=16", [&](std::string& d) {
    SystemConfig c = config;
    c.num_elements = 16;
    const auto cdf = empirical_cdf(c, Quantity::w_amplitude, options.mc_samples, options.seed);
    double m = 0, m2 = 0;
    for (double w : cdf.samples()) m += w;
    m /= static_cast<double>(cdf.size());
    for (double w : cdf.samples()) m2 += (w - m) * (w - m);
    const double var = m2 / static_cast<double>(cdf.size() - 1);
    const double mean_gap = rel(m, w_mean(c));
    const double var_gap = rel(var, w_variance(c));

    const double L = 16.0;
    const double ss = std::sqrt(c.var_rm * c.var_sr);
    const double printed_mean = pi * L / 16.0 * ss;
    const double printed_var = pi * L * c.var_rm * c.var_sr * (1.0 - pi * pi / 16.0);
    DeviationRecord r;
    r.formula = "w-moments-printed";
    r.printed = printed_mean;
    r.reference = m;
    r.gap = std::max(rel(printed_mean, m), rel(printed_var, var));
    r.point = point_of(c);
    r.note = "Var(W) printed " + fmt(printed_var) + " sampled " + fmt(var) +
             "; corrected moments (pi/4)L ss and L s^2s^2(16-pi^2)/16 are used";
    suite.record(r);

    d = "mean gap " + fmt(mean_gap, 3) + ", variance gap " + fmt(var_gap, 3) + " (tolerance 1%)";
    return mean_gap < 0.01 && var_gap < 0.01;
  });

  suite.check("specfun: identities and Meijer-G integral form", [&](std::string& d) {
    double worst_gamma = 0, worst_w = 0, worst_g = 0;
    for (double x : {0.1, 0.5, 2.0, 10.0})
      worst_gamma = std::max(worst_gamma, rel(upper_incomplete_gamma(1.0, x), std::exp(-x)));
    double fact = 1;
    for (int n = 1; n <= 20; ++n) {
      worst_gamma = std::max(worst_gamma, rel(upper_incomplete_gamma(n, 0.0), fact));
      fact *= n;
    }
    for (double b : {0.0, 0.5, 1.0})
      for (double z : {0.5, 2.0, 10.0})
        worst_w = std::max(worst_w, rel(whittaker_w(b + 0.5, b, z), std::pow(z, b + 0.5) * std::exp(-z / 2)));
    for (double a : {-0.5, 0.3, 3.22, 10.0, 40.0})
      for (double x : {0.01, 1.0, 20.0, 500.0})
        worst_g = std::max(worst_g, std::abs(log_meijer_g_3113(a, x) - meijer_integral(a, x)));
    d = "incomplete gamma " + fmt(worst_gamma, 3) + ", Whittaker " + fmt(worst_w, 3) +
        ", Meijer-G (log) " + fmt(worst_g, 3);
    return worst_gamma < 1e-12 && worst_w < 1e-8 && worst_g < 1e-6;
  });

  suite.check("analytic: CDF validity", [&](std::string& d) {
    double prev_v = 0, prev_w = 0;
    const double span_w = 10 * w_mean(config);
    const double span_v = 50 * std::exp2(config.r_th) * p.xi;
    for (int i = 1; i <= 1000; ++i) {
      const double fv = cdf_v(span_v * i / 1000.0, p, config);
      const double fw = cdf_w_gamma(span_w * i / 1000.0, p.lambda, p.w1);
      if (fv < prev_v || fw < prev_w || fv > 1 || fw > 1) {
        d = "not monotone at grid point " + std::to_string(i);
        return false;
      }
      prev_v = fv;
      prev_w = fw;
    }
    const double lo = cdf_v(1e-12, p, config);
    const double hi = cdf_v(1e12, p, config);
    d = "F_V(1e-12)=" + fmt(lo, 3) + ", F_V(1e12)=" + fmt(hi, 12);
    return lo < 1e-9 && hi > 1 - 1e-9;
  });

  suite.check("analytic: F_V against its defining integral", [&](std::string& d) {
    double worst = 0;
    for (double v : {0.05, 0.3, 1.0, 3.0, 10.0}) worst = std::max(worst, std::abs(cdf_v(v, p, config) - cdf_v_by_quadrature(v, config, p.xi)));
    if (config.num_jammers > 0) {
      DeviationRecord r;
      r.formula = "cdf-v-printed";
      r.printed = cdf_v_printed(1.0, p, config);
      r.reference = cdf_v(1.0, p, config);
      r.gap = std::abs(r.printed - r.reference);
      r.point = point_of(config) + ";v=1";
      r.note = "printed form carries e^{1/(v L var_nr var_rd)} without gamma_J; re-derived F_V is used";
      suite.record(r);
    }
    d = "max gap " + fmt(worst, 3) + " (tolerance 1e-8)";
    return worst < 1e-8;
  });

  suite.check("analytic: closed form vs numeric integral", [&](std::string& d) {
    double worst = 0;
    bool ok = true;
    std::vector<double> gj = {config.gamma_j_db, 0.0, 10.0, 20.0};
    for (double g : gj) {
      SystemConfig c = config;
      c.gamma_j_db = g;
      for (Scheme s : kAllSchemes) {
        const double cf = closed(s, c);
        const double ni = ssp(s, c, Method::numeric_integral).value;
        const double gap = std::abs(cf - ni);
        worst = std::max(worst, gap);
        if (gap > kArbitrationTol) {
          ok = false;
          suite.record({closed_form_id(s), cf, ni, gap, point_of(c), "closed form disagrees with the quadrature reference", true});
        }
      }
    }
    d = "max |closed - numeric| " + fmt(worst, 3) + " (tolerance 1e-4)";
    return ok;
  });

  suite.check("analytic: printed Gauss-Chebyshev and passive forms (documentation)", [&](std::string& d) {
    DeviationRecord r;
    r.formula = "rislo-gauss-chebyshev-printed";
    r.printed = ssp_rislo(p, config, Method::printed_form).value;
    r.reference = ssp_rislo(p, config, Method::numeric_integral).value;
    r.gap = std::isfinite(r.printed) ? std::abs(r.printed - r.reference) : INFINITY;
    r.point = point_of(config);
    r.note = "v = tan(tau) nodes with the e^{1/(v q)} factor; re-derived sum is used";
    suite.record(r);

    SystemConfig c = config;
    c.r_th = 0;
    const auto pp = derive_params(c, 0);
    DeviationRecord w;
    w.formula = "rislo-passive-whittaker-printed";
    w.printed = ssp_rislo_passive_printed(pp, c);
    w.reference = ssp_rislo_passive_numeric(pp, c);
    w.gap = std::abs(w.printed - w.reference);
    w.point = point_of(c) + ";gamma_j=0";
    w.note = "printed argument L var_nr var_rd/(4 w1^2) and no complement; 1 - W-form at xi/(4 w1^2) is used";
    suite.record(w);
    d = "printed RISLO sum " + fmt(r.printed) + " vs " + fmt(r.reference) + "; printed passive " +
        fmt(w.printed) + " vs " + fmt(w.reference);
    return true;
  });

  suite.check("asymptotic: passive limits", [&](std::string& d) {
    SystemConfig c = config;
    c.r_th = 0;
    const auto pp = derive_params(c, 0);
    const double w = ssp_rislo_passive(pp, c);
    const double n = ssp_rislo_passive_numeric(pp, c);
    d = "Whittaker form " + fmt(w, 10) + " vs quadrature " + fmt(n, 10) + "; RISCO passive " +
        fmt(ssp_risco_passive(pp));
    return std::abs(w - n) < 1e-4;
  });

  suite.check("analytic: quadrature order K vs 2K", [&](std::string& d) {
    SystemConfig c2 = config;
    c2.quad_order = 2 * config.quad_order;
    double worst = 0;
    for (Scheme s : {Scheme::rislo, Scheme::rislr})
      worst = std::max(worst, std::abs(ssp(s, config).value - ssp(s, c2).value));
    d = "max change " + fmt(worst, 3) + " (tolerance 1e-4)";
    return worst < 1e-4;
  });

  suite.check("analytic: selection ordering over gamma_J", [&](std::string& d) {
    double worst = 0;
    for (double g : {0.0, 5.0, 10.0, 15.0, 20.0}) {
      SystemConfig c = config;
      c.gamma_j_db = g;
      worst = std::min({worst, ssp(Scheme::rislo, c).value - ssp(Scheme::rislr, c).value,
                        ssp(Scheme::risco, c).value - ssp(Scheme::riscr, c).value});
    }
    d = "min (optimal - random) " + fmt(worst, 3);
    return worst > -1e-6;
  });

  suite.check("montecarlo: CJ gain CDFs at L=32 (KS)", [&](std::string& d) {
    SystemConfig c = config;
    c.num_elements = 32;
    const double mean = 32.0 * c.var_nr[0] * c.var_rd;
    const auto a = empirical_cdf(c, Quantity::q_rislo_gain, options.ks_samples, options.seed + 11);
    const auto b = empirical_cdf(c, Quantity::q_random_phase_gain, options.ks_samples, options.seed + 12);
    auto theory = [&](double x) { return cdf_gain_exponential(x, mean); };
    const double d1 = ks_distance(a, theory);
    const double d2 = ks_distance(b, theory);
    const double d3 = ks_distance(a, b);
    d = "theory/RISLO " + fmt(d1, 3) + ", theory/random " + fmt(d2, 3) + ", RISLO/random " + fmt(d3, 3);
    return d1 < 0.02 && d2 < 0.02 && d3 < 0.02;
  });

  return report;
}

void write_report(std::ostream& out, const ValidationReport& report) {
  for (const auto& c : report.checks)
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << '\n';
  out << "deviation records: " << report.deviations.size() << '\n';
  for (const auto& r : report.deviations) out << "  " << format_record(r) << '\n';
  out << (report.passed() ? "validation passed" : "validation FAILED") << '\n';
}

void append_ledger(const std::string& path, const std::vector<DeviationRecord>& records) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open ledger file '" + path + "'");
  for (const auto& r : records) out << format_record(r) << '\n';
}

}  // namespace rismon
