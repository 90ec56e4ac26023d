// Copyright 2026 The ffq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ffq/quad.hpp"

#include <cmath>
#include <stdexcept>

#include "ffq/units.hpp"

namespace ffq {

GaussLegendre::GaussLegendre(int n) {
  if (n < 2) throw std::invalid_argument("GaussLegendre: need n >= 2");
  nodes.resize(n);
  weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(units::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

const GaussLegendre& gauss64() {
  static const GaussLegendre rule(64);
  return rule;
}

double panel_integrate(const std::function<double(double)>& f, double a,
                       double b, int panels, const GaussLegendre& rule) {
  if (panels < 1) panels = 1;
  double sum = 0.0;
  const double w = (b - a) / panels;
  for (int i = 0; i < panels; ++i)
    sum += rule.integrate(f, a + i * w, a + (i + 1) * w);
  return sum;
}

double log_panel_integrate(const std::function<double(double)>& f, double a,
                           double b, int panels_per_decade,
                           const GaussLegendre& rule) {
  if (a <= 0 || b <= a) throw std::invalid_argument("log_panel_integrate: need 0 < a < b");
  const double decades = std::log10(b / a);
  const int panels = std::max(1, static_cast<int>(std::ceil(decades * panels_per_decade)));
  double sum = 0.0;
  const double step = decades / panels;
  for (int i = 0; i < panels; ++i) {
    const double lo = a * std::pow(10.0, i * step);
    const double hi = a * std::pow(10.0, (i + 1) * step);
    sum += rule.integrate(f, lo, hi);
  }
  return sum;
}

}  // namespace ffq
