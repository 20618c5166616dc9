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
#include <benchmark/benchmark.h>

#include "rismon/analytic.hpp"
#include "rismon/channel.hpp"
#include "rismon/montecarlo.hpp"
#include "rismon/specfun.hpp"

using namespace rismon;

static void BM_UpperIncompleteGamma(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(upper_incomplete_gamma(6.4397, x));
    x = x < 40 ? x * 1.1 : 0.1;
  }
}
BENCHMARK(BM_UpperIncompleteGamma);

static void BM_MeijerG(benchmark::State& state) {
  const double a = static_cast<double>(state.range(0)) / 2;
  double x = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_meijer_g_3113(a, x));
    x = x < 100 ? x * 1.3 : 0.01;
  }
}
BENCHMARK(BM_MeijerG)->Arg(1)->Arg(12)->Arg(80);

static void BM_Whittaker(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(whittaker_w_scaled(0.25 - 3.22, -0.25, 5.0));
}
BENCHMARK(BM_Whittaker);

static void BM_ClosedForm(benchmark::State& state) {
  const auto scheme = static_cast<Scheme>(state.range(0));
  SystemConfig c;
  for (auto _ : state) benchmark::DoNotOptimize(ssp(scheme, c).value);
  state.SetLabel(std::string(to_string(scheme)));
}
BENCHMARK(BM_ClosedForm)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

static void BM_NumericIntegral(benchmark::State& state) {
  const auto scheme = static_cast<Scheme>(state.range(0));
  SystemConfig c;
  for (auto _ : state) benchmark::DoNotOptimize(ssp(scheme, c, Method::numeric_integral).value);
  state.SetLabel(std::string(to_string(scheme)));
}
BENCHMARK(BM_NumericIntegral)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

static void BM_SampleChannels(benchmark::State& state) {
  SystemConfig c;
  c.num_elements = static_cast<std::size_t>(state.range(0));
  RandomStream s(1);
  ChannelRealization r;
  for (auto _ : state) {
    sample_channels_into(c, s, r);
    benchmark::DoNotOptimize(r.h_sd);
  }
}
BENCHMARK(BM_SampleChannels)->Arg(4)->Arg(64);

static void BM_CoupledTrials(benchmark::State& state) {
  SystemConfig c;
  c.num_elements = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(estimate_ssp_coupled(c, 10000, 1, {1}));
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_CoupledTrials)->Arg(4)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
