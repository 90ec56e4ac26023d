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

#include "ffq/noise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ffq/cosint.hpp"
#include "ffq/quad.hpp"

namespace ffq {

namespace {

using C = std::complex<double>;
constexpr C kI{0.0, 1.0};

// T(a) = int_0^t (t-u) Ci(a u) du
//      = t^2 Ci(at)/2 - t sin(at)/(2a) + (cos(at) - 1)/(2 a^2)
double ci_moment(double a, double t) {
  const double x = a * t;
  if (x < 1e-2) {
    const double x2 = x * x;
    return t * t *
           ((euler_gamma + std::log(x)) / 2.0 - 0.75 - x2 / 48.0 + x2 * x2 / 2880.0);
  }
  return t * t * cosine_integral(x) / 2.0 - t * std::sin(x) / (2.0 * a) +
         (std::cos(x) - 1.0) / (2.0 * a * a);
}

// g(nu) = int_0^t (t-u) e^{i nu u} du = i t/nu + (1 - e^{i nu t})/nu^2
C fejer_kernel(double nu, double t) {
  const double x = nu * t;
  if (std::abs(x) < 1e-4) {
    return C(t * t * (0.5 - x * x / 24.0), t * t * x * (1.0 / 6.0 - x * x / 120.0));
  }
  const double s = std::sin(0.5 * x);
  return C(2.0 * s * s / (nu * nu), t / nu - std::sin(x) / (nu * nu));
}

// Non-oscillatory part of g: i t/nu + 1/nu^2.
C fejer_smooth(double nu, double t) { return C(1.0 / (nu * nu), t / nu); }

}  // namespace

void NoiseSpectrum::validate() const {
  if (!(omega_l > 0) || !(omega_h > omega_l))
    throw std::invalid_argument("NoiseSpectrum: need 0 < omega_l < omega_h");
}

double NoiseSpectrum::log_ratio() const { return std::log(omega_h / omega_l); }

double NoiseSpectrum::s0() const { return 1.0 / (2.0 * log_ratio()); }

double NoiseSpectrum::spectral_density(double omega) const {
  const double w = std::abs(omega);
  if (w < omega_l || w > omega_h) return 0.0;
  return s0() / w;
}

double NoiseSpectrum::correlation(double t) const {
  if (t < 0) throw std::invalid_argument("correlation: t must be nonnegative");
  if (t == 0.0) return 1.0;
  return 2.0 * s0() * (cosine_integral(omega_h * t) - cosine_integral(omega_l * t));
}

double NoiseSpectrum::decay_j00(double t) const {
  if (t < 0) throw std::invalid_argument("decay_j00: t must be nonnegative");
  if (t == 0.0) return 0.0;
  return 2.0 * s0() * (ci_moment(omega_h, t) - ci_moment(omega_l, t));
}

double NoiseSpectrum::decay_j00_window(double t) const {
  if (t < 0) throw std::invalid_argument("decay_j00_window: t must be nonnegative");
  if (t == 0.0) return 0.0;
  if (t * omega_h < 10.0 || t * omega_l > 0.1) return decay_j00(t);
  return t * t * (1.5 - euler_gamma - std::log(omega_l * t)) / (2.0 * log_ratio());
}

std::complex<double> NoiseSpectrum::decay_j_resonant(double t, double w) const {
  if (t < 0) throw std::invalid_argument("decay_j_resonant: t must be nonnegative");
  if (t == 0.0) return 0.0;
  if (w < 0) return std::conj(decay_j_resonant(t, -w));
  if (w == 0.0) return decay_j00(t);

  // J(t,w,-w) = S0 int_{omega_l}^{omega_h} [g(w-w') + g(w+w')]/w' dw'.
  const GaussLegendre& rule = gauss64();
  C total = 0.0;

  auto full_integrand = [&](double wp) {
    return (fejer_kernel(w - wp, t) + fejer_kernel(w + wp, t)) / wp;
  };
  auto smooth_integrand = [&](double wp) {
    return (fejer_smooth(w - wp, t) + fejer_smooth(w + wp, t)) / wp;
  };

  // On the flanks g is split into its smooth part, integrated on log panels,
  // and the oscillatory remainder -e^{i nu t}/nu^2, reduced to boundary
  // terms by one integration by parts (next order is ~1/(nu t) smaller).
  auto flank = [&](double a, double b) {
    if (b <= a) return;
    const double decades = std::log10(b / a);
    const int panels = std::max(2, static_cast<int>(std::ceil(decades * 16)));
    const double step = decades / panels;
    for (int i = 0; i < panels; ++i) {
      const double pa = a * std::pow(10.0, i * step);
      const double pb = a * std::pow(10.0, (i + 1) * step);
      total += rule.integrate(smooth_integrand, pa, pb);
    }
    auto h_minus = [&](double wp) {  // weight for nu = w - w', phase' = -t
      const double nu = w - wp;
      return -std::exp(kI * (nu * t)) / (wp * nu * nu);
    };
    auto h_plus = [&](double wp) {  // nu = w + w', phase' = +t
      const double nu = w + wp;
      return -std::exp(kI * (nu * t)) / (wp * nu * nu);
    };
    total += (h_minus(b) - h_minus(a)) / (-kI * t);
    total += (h_plus(b) - h_plus(a)) / (kI * t);
  };

  const double window = 48.0 * units::two_pi / t;
  const double lo = std::max(omega_l, w - window);
  const double hi = std::min(omega_h, w + window);

  if (hi > lo) {
    const int panels = 96;
    const double step = (hi - lo) / panels;
    for (int i = 0; i < panels; ++i)
      total += rule.integrate(full_integrand, lo + i * step, lo + (i + 1) * step);
    flank(omega_l, lo);
    flank(hi, omega_h);
  } else {
    flank(omega_l, omega_h);
  }

  return s0() * total;
}

std::complex<double> NoiseSpectrum::decay_j(double t, double w1, double w2) const {
  if (t < 0) throw std::invalid_argument("decay_j: t must be nonnegative");
  if (t == 0.0) return 0.0;

  // J = int_0^t dt1 e^{i(w1+w2) t1} G(t1),  G(t1) = int_0^{t1} S(u) e^{-i w2 u} du
  // (u = t1 - t2).  Outer nodes are swept in ascending order so G accumulates.
  const GaussLegendre& rule = gauss64();
  const double wsum = std::abs(w1 + w2);
  const int outer_panels =
      std::max(8, std::min(4000, 2 * static_cast<int>(std::ceil(wsum * t / units::pi))));

  std::vector<double> outer_nodes, outer_weights;
  outer_nodes.reserve(static_cast<std::size_t>(outer_panels) * rule.nodes.size());
  outer_weights.reserve(outer_nodes.capacity());
  const double ow = t / outer_panels;
  for (int p = 0; p < outer_panels; ++p) {
    const double mid = (p + 0.5) * ow, half = 0.5 * ow;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      outer_nodes.push_back(mid + half * rule.nodes[i]);
      outer_weights.push_back(half * rule.weights[i]);
    }
  }

  static const GaussLegendre inner_rule(16);
  auto inner_f = [&](double u) { return correlation(u) * std::exp(-kI * (w2 * u)); };
  auto inner_segment = [&](double a, double b) -> C {
    C acc = 0.0;
    if (b <= a) return acc;
    const double osc_step =
        units::two_pi / std::max(std::abs(w2), 1.0 / t) / 4.0;
    double u = a;
    while (u < b) {
      double step = std::min(osc_step, b - u);
      if (u > 0) step = std::min(step, u);  // log refinement over S structure
      const double next = std::min(u + step, b);
      const double mid = 0.5 * (u + next), half = 0.5 * (next - u);
      for (std::size_t k = 0; k < inner_rule.nodes.size(); ++k)
        acc += inner_f(mid + half * inner_rule.nodes[k]) * (half * inner_rule.weights[k]);
      u = next;
    }
    return acc;
  };

  const double tiny = std::min(0.01 / omega_h, 0.5 * outer_nodes.front());
  C j = 0.0;
  C g_acc = C(tiny, 0.0);  // S ~ 1 on the leading sliver
  double u_prev = tiny;
  for (std::size_t i = 0; i < outer_nodes.size(); ++i) {
    const double t1 = outer_nodes[i];
    g_acc += inner_segment(u_prev, t1);
    u_prev = t1;
    j += outer_weights[i] * std::exp(kI * ((w1 + w2) * t1)) * g_acc;
  }
  return j;
}

}  // namespace ffq
