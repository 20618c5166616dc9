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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "rismon/config.hpp"
#include "rismon/random.hpp"

namespace rismon {

using cplx = std::complex<double>;

// One draw of every fading coefficient. h_nr is stored row-major, N rows of L.
struct ChannelRealization {
  cplx h_sd{};
  std::vector<cplx> h_sr, h_rm, h_rd;
  std::vector<cplx> h_nr;
  std::size_t num_elements = 0;
  std::size_t num_jammers = 0;

  std::span<const cplx> jammer(std::size_t n) const {
    return {h_nr.data() + n * num_elements, num_elements};
  }
};

ChannelRealization sample_channels(const SystemConfig& config, RandomStream& stream);

// Same as sample_channels but reuses the buffers of `out`.
void sample_channels_into(const SystemConfig& config, RandomStream& stream,
                          ChannelRealization& out);

}  // namespace rismon
