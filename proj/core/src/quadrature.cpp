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
#include "rismon/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <queue>
#include <sstream>

#include "rismon/error.hpp"

namespace rismon::quad {

namespace {

struct Panel {
  double a, b, value, error, l1;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel evaluate(const std::function<double(double)>& f, double a, double b) {
  Panel p{a, b, 0, 0, 0};
  p.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 0, 0.0, &p.error, &p.l1);
  return p;
}

}  // namespace

// Global adaptive bisection: always split the panel with the largest error,
// stop once the summed error is below rel_tol times the L1 norm.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const std::vector<double>& breaks, double rel_tol,
                 double abs_tol) {
  if (!(b > a)) return 0.0;
  std::vector<double> pts{a};
  for (double p : breaks)
    if (p > a && p < b) pts.push_back(p);
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::priority_queue<Panel> queue;
  double total = 0, error = 0, l1 = 0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Panel p = evaluate(f, pts[i], pts[i + 1]);
    total += p.value;
    error += p.error;
    l1 += p.l1;
    queue.push(p);
  }

  constexpr int kMaxPanels = 20000;
  int panels = static_cast<int>(queue.size());
  while (error > std::max(rel_tol * l1, abs_tol) && panels < kMaxPanels) {
    const Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // cannot split further
    const Panel left = evaluate(f, worst.a, mid);
    const Panel right = evaluate(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    queue.push(left);
    queue.push(right);
    ++panels;
  }
  // recompute sums to shed accumulated rounding from the updates
  total = error = l1 = 0;
  for (; !queue.empty(); queue.pop()) {
    total += queue.top().value;
    error += queue.top().error;
    l1 += queue.top().l1;
  }
  if (!std::isfinite(total) || error > std::max(100 * rel_tol * l1, abs_tol) + 1e-300) {
    std::ostringstream os;
    os.precision(17);
    os << "quadrature did not converge on [" << a << ", " << b << "]: estimate " << total
       << ", error " << error;
    throw NumericError(os.str());
  }
  return total;
}

double gamma_upper_limit(double shape, double scale) {
  return scale * (shape + 40.0 * std::sqrt(shape) + 80.0);
}

std::vector<double> gamma_breaks(double shape, double scale, double lo, double hi) {
  const double mean = shape * scale;
  const double sd = std::sqrt(shape) * scale;
  std::vector<double> out;
  for (double k : {-8.0, -4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0, 8.0, 16.0}) {
    const double p = mean + k * sd;
    if (p > lo && p < hi) out.push_back(p);
  }
  return out;
}

}  // namespace rismon::quad
