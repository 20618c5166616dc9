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
#include "rismon/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include "rismon/channel.hpp"
#include "rismon/model.hpp"
#include "rismon/random.hpp"

namespace rismon {

namespace {

constexpr std::uint64_t kChunk = 4096;

struct Scratch {
  ChannelRealization real;
};

struct LinkOutcome {
  double w;  // LS amplitude
  double y;  // suspicious gain
  double q;  // CJ gain of the active jammer
};

LinkOutcome evaluate_links(const ChannelRealization& real, const PhaseConfig& phases,
                           std::size_t jammer) {
  const double w = cascaded_amplitude(real.h_rm, phases, real.h_sr);
  const double y = std::norm(real.h_sd + cascaded_coefficient(real.h_rd, phases, real.h_sr));
  const double q = std::norm(cascaded_coefficient(real.h_rd, phases, real.jammer(jammer)));
  return {w, y, q};
}

bool success(const LinkOutcome& o, double gs, double gj, double r_th) {
  const double rmr = relative_monitoring_rate(monitoring_rate(gs, o.w), suspicious_rate(gs, gj, o.y, o.q));
  return rmr > r_th;
}

// Bit i of the result is the success indicator of kAllSchemes[i] when
// that scheme is requested in `mask`.
unsigned run_trial(const SystemConfig& config, std::uint64_t seed, std::uint64_t trial,
                   unsigned mask, Scratch& s) {
  RandomStream stream = RandomStream::for_trial(seed, trial);
  const std::uint64_t draw = stream();  // random jammer choice, always consumed first
  sample_channels_into(config, stream, s.real);
  const double gs = config.gamma_s();
  const double gj = config.gamma_j();
  unsigned out = 0;

  if (mask & 0b0011u) {
    const PhaseConfig ls = design_phases_rislo(s.real);
    if (mask & 0b0001u) {
      const std::size_t n = argmax_gain(jammer_gains(s.real, ls));
      if (success(evaluate_links(s.real, ls, n), gs, gj, config.r_th)) out |= 0b0001u;
    }
    if (mask & 0b0010u) {
      const std::size_t n = select_jammer(Scheme::rislr, s.real, draw);
      if (success(evaluate_links(s.real, ls, n), gs, gj, config.r_th)) out |= 0b0010u;
    }
  }
  if (mask & 0b0100u) {
    const std::size_t n = select_jammer(Scheme::risco, s.real, draw);
    if (success(evaluate_links(s.real, design_phases_risco(s.real, n), n), gs, gj, config.r_th))
      out |= 0b0100u;
  }
  if (mask & 0b1000u) {
    const std::size_t n = select_jammer(Scheme::riscr, s.real, draw);
    if (success(evaluate_links(s.real, design_phases_risco(s.real, n), n), gs, gj, config.r_th))
      out |= 0b1000u;
  }
  return out;
}

unsigned scheme_bit(Scheme s) { return 1u << static_cast<unsigned>(s); }

std::size_t worker_count(const McOptions& o, std::uint64_t trials) {
  std::size_t w = o.workers ? o.workers : std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t chunks = (trials + kChunk - 1) / kChunk;
  return static_cast<std::size_t>(std::min<std::uint64_t>(w, chunks));
}

struct Counts {
  std::uint64_t success[4] = {0, 0, 0, 0};
};

Counts run_trials(const SystemConfig& config, std::uint64_t trials, std::uint64_t seed,
                  unsigned mask, bool check_dominance, const McOptions& options) {
  config.validate();
  if (trials == 0) throw std::invalid_argument("Monte-Carlo estimate needs trials >= 1");
  const std::size_t workers = worker_count(options, trials);
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> violated{false};
  std::vector<Counts> partial(workers);

  auto body = [&](std::size_t id) {
    Scratch scratch;
    Counts& c = partial[id];
    for (;;) {
      const std::uint64_t begin = next.fetch_add(kChunk);
      if (begin >= trials || violated.load(std::memory_order_relaxed)) break;
      const std::uint64_t end = std::min(trials, begin + kChunk);
      for (std::uint64_t t = begin; t < end; ++t) {
        const unsigned r = run_trial(config, seed, t, mask, scratch);
        for (unsigned b = 0; b < 4; ++b) c.success[b] += (r >> b) & 1u;
        if (check_dominance && (r & 0b0010u) && !(r & 0b0001u)) violated = true;
      }
    }
  };

  std::exception_ptr error;
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t i = 0; i < workers; ++i)
      pool.emplace_back([&, i] {
        try {
          body(i);
        } catch (...) {
          errors[i] = std::current_exception();
          violated = true;
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  if (violated) throw std::logic_error("coupled Monte Carlo: RISLR succeeded where RISLO failed");

  Counts total;
  for (const auto& c : partial)
    for (unsigned b = 0; b < 4; ++b) total.success[b] += c.success[b];
  return total;
}

SspEstimate make_estimate(Scheme scheme, std::uint64_t successes, std::uint64_t trials,
                          std::uint64_t seed) {
  SspEstimate e;
  e.scheme = scheme;
  e.successes = successes;
  e.trials = trials;
  e.seed = seed;
  e.value = static_cast<double>(successes) / static_cast<double>(trials);
  const Interval ci = wilson_interval(successes, trials);
  e.ci_low = std::min(ci.low, e.value);
  e.ci_high = std::max(ci.high, e.value);
  return e;
}

}  // namespace

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) throw std::invalid_argument("wilson_interval: trials must be >= 1");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2 * n)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
  if (successes == 0) return {0.0, std::min(1.0, centre + half)};
  if (successes == trials) return {std::max(0.0, centre - half), 1.0};
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

SspEstimate estimate_ssp(const SystemConfig& config, Scheme scheme, std::uint64_t trials,
                         std::uint64_t seed, const McOptions& options) {
  const Counts c = run_trials(config, trials, seed, scheme_bit(scheme), false, options);
  return make_estimate(scheme, c.success[static_cast<unsigned>(scheme)], trials, seed);
}

std::map<Scheme, SspEstimate> estimate_ssp_coupled(const SystemConfig& config,
                                                   std::uint64_t trials, std::uint64_t seed,
                                                   const McOptions& options) {
  const Counts c = run_trials(config, trials, seed, 0b1111u, true, options);
  std::map<Scheme, SspEstimate> out;
  for (Scheme s : kAllSchemes)
    out[s] = make_estimate(s, c.success[static_cast<unsigned>(s)], trials, seed);
  return out;
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples)) {
  if (sorted_.empty()) throw std::invalid_argument("EmpiricalCdf: empty sample");
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

EmpiricalCdf empirical_cdf(const SystemConfig& config, Quantity quantity, std::size_t samples,
                           std::uint64_t seed) {
  config.validate();
  if (samples < 1000) throw std::invalid_argument("empirical_cdf: needs at least 1000 samples");
  std::vector<double> out(samples);
  ChannelRealization real;
  std::uniform_real_distribution<double> phase(0.0, 2 * std::numbers::pi);
  for (std::size_t i = 0; i < samples; ++i) {
    RandomStream stream = RandomStream::for_trial(seed, i);
    sample_channels_into(config, stream, real);
    switch (quantity) {
      case Quantity::q_rislo_gain: {
        const auto ls = design_phases_rislo(real);
        out[i] = std::norm(cascaded_coefficient(real.h_rd, ls, real.jammer(0)));
        break;
      }
      case Quantity::w_amplitude:
        out[i] = cascaded_amplitude(real.h_rm, design_phases_rislo(real), real.h_sr);
        break;
      case Quantity::y_gain:
        out[i] = std::norm(real.h_sd +
                           cascaded_coefficient(real.h_rd, design_phases_rislo(real), real.h_sr));
        break;
      case Quantity::q_random_phase_gain: {
        std::vector<double> phi(config.num_elements);
        for (auto& p : phi) p = phase(stream);
        out[i] = std::norm(cascaded_coefficient(real.h_rd, PhaseConfig(std::move(phi)), real.jammer(0)));
        break;
      }
      default:
        throw std::invalid_argument("empirical_cdf: unknown quantity");
    }
  }
  return EmpiricalCdf(std::move(out));
}

double ks_distance(const EmpiricalCdf& a, const EmpiricalCdf& b) {
  const auto& x = a.samples();
  const auto& y = b.samples();
  const double na = static_cast<double>(x.size());
  const double nb = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double d = 0;
  while (i < x.size() || j < y.size()) {
    const double v = (j >= y.size() || (i < x.size() && x[i] <= y[j])) ? x[i] : y[j];
    while (i < x.size() && x[i] <= v) ++i;
    while (j < y.size() && y[j] <= v) ++j;
    d = std::max(d, std::abs(i / na - j / nb));
  }
  return d;
}

double ks_distance(const EmpiricalCdf& a, const std::function<double(double)>& cdf) {
  const auto& x = a.samples();
  const double n = static_cast<double>(x.size());
  double d = 0;
  std::size_t i = 0;
  while (i < x.size()) {
    const double v = x[i];
    const double below = i / n;
    while (i < x.size() && x[i] == v) ++i;
    // Compare on both sides of the jump; the left limit of cdf matters when
    // it is itself a step function.
    const double f = cdf(v);
    const double f_left = cdf(std::nextafter(v, -INFINITY));
    d = std::max({d, std::abs(i / n - f), std::abs(below - f_left)});
  }
  return d;
}

}  // namespace rismon
