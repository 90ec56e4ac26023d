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

#include <utility>
#include <vector>

#include "ffq/linalg.hpp"
#include "ffq/single_qubit.hpp"

namespace ffq {

/// Dipole geometry of two donor-dot qubits: dipole lengths d1, d2, donor
/// separation r, relative permittivity.
struct DipoleGeometry {
  double d1;
  double d2;
  double r;
  double eps_r;
};

/// V_dd = e^2 d1 d2 / (16 pi eps_r eps_0 r^3), returned in rad/s.
double dipole_strength(const DipoleGeometry& g);

/// Effective two-qubit rates at a symmetric bias point: dipole couplings
/// g_f = V_dd z31^2, g_l = V_dd |z31 z10|, g_c = V_dd z10^2 and noise
/// strengths gamma1 = omega_n (z30 - z03)/2, gamma2 = omega_n (z11 + z22)/2.
struct CouplingRates {
  double g_f = 0.0;
  double g_l = 0.0;
  double g_c = 0.0;
  double g_l_signed = 0.0;  // V_dd z31 z10 with its physical sign
  double gamma1 = 0.0;      // signed
  double gamma2 = 0.0;      // signed
  double delta = 0.0;       // E_2 - E_1
};

CouplingRates coupling_rates(const ZCoefficients& z, double v_dd,
                             const FlipFlopSpectrum& spectrum, double omega_n);

enum class TwoQubitMode { full_z, truncated_eq8 };

/// Two identical qubits coupled by V_dd Z1 Z2 in the dressed product basis;
/// single-qubit mean-field shifts are absorbed into the bias.
struct TwoQubitSystem {
  Matrix hamiltonian;                            // 16x16 symmetric
  std::vector<std::pair<int, int>> basis_labels; // (level of qubit 1, of qubit 2)
  TwoQubitMode mode;
};

TwoQubitSystem build_two_qubit(const FlipFlopSpectrum& spectrum,
                               const ZCoefficients& z, double v_dd,
                               TwoQubitMode mode);

/// Dressed single-qubit position operator rebuilt from the nine
/// coefficients.
Matrix z_operator_from_coefficients(const ZCoefficients& z);

/// Closed-form gate frequencies, decay rates and quality factors of the
/// weakly-detuned (slow/fast) and highly-detuned regimes.
struct GateAnalytics {
  double omega_slow;
  double omega_fast;
  double gamma_slow;
  double gamma_fast;
  double omega_c;
  double gamma_c;
  double q_a;  // 3 g_f / gamma1 at the single-qubit sweet spot
  double q_b;  // 2 g_f delta^2 / (gamma1 (g_c^2 - delta^2))
  double q_c;  // delta^5 g_f / (g_l (delta^2-g_c^2)(delta^2 gamma2 - 2 g_c g_l gamma1))
};

GateAnalytics gate_analytics(const CouplingRates& rates);

/// Equilibrium leakage population for |psi(0)> = |01>,
/// P = (sin^2 phi_+ + sin^2 phi_-)/4 with tan phi_pm = +-2 g_l/(-delta -+ (g_c - g_f)).
double equilibrium_leakage(const CouplingRates& rates);

/// Slow relaxation rate 1/T1 = omega_n^2 (z10^2/omega0 + z31^2/omegaB)
/// from the noise-induced charge and spin flips.
double long_time_t1_rate(const ZCoefficients& z, double omega_n, double omega0,
                         double omega_b);

}  // namespace ffq
