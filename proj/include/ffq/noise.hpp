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

#include <complex>

#include "ffq/units.hpp"

namespace ffq {

/// 1/f spectrum S(omega) = S0/|omega| between angular cutoffs, normalized so
/// the correlation function S(t) equals one at t = 0.
struct NoiseSpectrum {
  double omega_l = units::kilohertz;        // rad/s
  double omega_h = units::hertz * 1e12;     // rad/s

  void validate() const;

  double s0() const;
  double log_ratio() const;                    // ln(omega_h / omega_l)
  double spectral_density(double omega) const; // S0/|omega| inside the band

  /// Correlation function S(t) = 2 S0 [Ci(omega_h t) - Ci(omega_l t)].
  double correlation(double t) const;

  /// Decay profile J(t, 0, 0) = int_0^t (t-u) S(u) du, exact via Ci.
  double decay_j00(double t) const;

  /// Long-time-window form of J(t,0,0):
  ///   t^2 (3/2 - gamma_E - ln(omega_l t)) / (2 ln(omega_h/omega_l))
  /// valid for 1/omega_h << t << 1/omega_l; outside the window this falls
  /// back to the exact profile.
  double decay_j00_window(double t) const;

  /// J(t, w, -w), evaluated as a one-dimensional spectral integral.
  std::complex<double> decay_j_resonant(double t, double w) const;

  /// General decay profile J(t, w1, w2) by nested Gauss-Legendre panels.
  /// Intended as a cross-check oracle; cost grows with |w| t.
  std::complex<double> decay_j(double t, double w1, double w2) const;
};

}  // namespace ffq
