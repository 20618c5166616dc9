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
#include "rismon/channel.hpp"

#include <cmath>
#include <random>

namespace rismon {

namespace {

void fill(std::vector<cplx>& h, std::size_t n, double var, RandomStream& stream,
          std::normal_distribution<double>& normal) {
  const double sd = std::sqrt(var / 2.0);
  h.resize(n);
  for (auto& c : h) {
    const double re = normal(stream);
    const double im = normal(stream);
    c = {sd * re, sd * im};
  }
}

}  // namespace

void sample_channels_into(const SystemConfig& config, RandomStream& stream,
                          ChannelRealization& out) {
  const std::size_t L = config.num_elements;
  const std::size_t N = config.num_jammers;
  std::normal_distribution<double> normal;
  out.num_elements = L;
  out.num_jammers = N;

  const double sd = std::sqrt(config.var_sd / 2.0);
  const double re = normal(stream);
  const double im = normal(stream);
  out.h_sd = {sd * re, sd * im};

  fill(out.h_sr, L, config.var_sr, stream, normal);
  fill(out.h_rm, L, config.var_rm, stream, normal);
  fill(out.h_rd, L, config.var_rd, stream, normal);

  out.h_nr.resize(N * L);
  for (std::size_t n = 0; n < N; ++n) {
    const double s = std::sqrt(config.var_nr[n] / 2.0);
    for (std::size_t l = 0; l < L; ++l) {
      const double a = normal(stream);
      const double b = normal(stream);
      out.h_nr[n * L + l] = {s * a, s * b};
    }
  }
}

ChannelRealization sample_channels(const SystemConfig& config, RandomStream& stream) {
  ChannelRealization r;
  sample_channels_into(config, stream, r);
  return r;
}

}  // namespace rismon
