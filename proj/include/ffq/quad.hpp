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

#pragma once

#include <functional>
#include <vector>

namespace ffq {

/// Gauss-Legendre rule on [-1, 1]; nodes computed once by Newton iteration
/// on the Legendre polynomial.
struct GaussLegendre {
  explicit GaussLegendre(int n);
  std::vector<double> nodes;
  std::vector<double> weights;

  template <typename F>
  auto integrate(F&& f, double a, double b) const {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    auto acc = f(mid + half * nodes[0]) * (half * weights[0]);
    for (std::size_t i = 1; i < nodes.size(); ++i)
      acc += f(mid + half * nodes[i]) * (half * weights[i]);
    return acc;
  }
};

/// Shared 64-point rule.
const GaussLegendre& gauss64();

/// Integrate f over [a, b] split into n equal panels.
double panel_integrate(const std::function<double(double)>& f, double a,
                       double b, int panels, const GaussLegendre& rule = gauss64());

/// Integrate f over [a, b] with log-spaced panel boundaries (a, b > 0).
double log_panel_integrate(const std::function<double(double)>& f, double a,
                           double b, int panels_per_decade = 4,
                           const GaussLegendre& rule = gauss64());

}  // namespace ffq
