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

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ffq/linalg.hpp"
#include "ffq/single_qubit.hpp"

namespace ffq {

/// Doubly-degenerate four-level system in the basis (s_L, s_R, c_L, c_R):
/// two low states coupled by g_s, two high states (energy delta above)
/// coupled by g_c, with on-site (g_1) and cross-site (g_2) excitations.
/// gamma1 drives s <-> c transitions on each side, gamma2 fluctuates the
/// c-state energies.
struct FourLevelParams {
  double delta = 0.0;
  double g_s = 0.0;
  double g_c = 0.0;
  double g_1 = 0.0;
  double g_2 = 0.0;
  double gamma1 = 0.0;
  double gamma2 = 0.0;

  /// Flip-flop dictionary: (s_L, s_R) = (|01>, |10>), (c_L, c_R) =
  /// (|02>, |20>), delta = E_2 - E_1, g_s = V_dd z31^2, g_c = V_dd z10^2,
  /// g_2 = V_dd z31 z10 (signed), g_1 = V_dd (z11+z22)(z03+z30+z33),
  /// gamma1 = omega_n (z11+z22)/2, gamma2 = omega_n (z30-z03)/2.
  static FourLevelParams from_flip_flop(const ZCoefficients& z, double v_dd,
                                        double delta, double omega_n,
                                        bool keep_g1 = false);

  Matrix hamiltonian() const;
  std::array<Matrix, 2> noise_operators() const;  // h_L, h_R
};

/// (phi_plus, phi_minus) with tan(phi_pm) = -2(g_1 +- g_2)/(-delta -+ (g_c - g_s)).
std::pair<double, double> mixing_angles(const FourLevelParams& p);

/// The six fundamental oscillation frequencies, their decay rates, the
/// mixing angles and the diagonalizing rotation.
struct ModeSet {
  std::array<double, 6> frequencies{};  // omega_a..omega_f (signed)
  std::array<double, 6> rates{};        // Gamma_a..Gamma_f
  double phi_plus = 0.0;
  double phi_minus = 0.0;
  Matrix rotation;     // 4x4 orthogonal, columns (s+', s-', c+', c-')
  Vector eigenvalues;  // of H0, in rotation-column order

  /// Eigenvector-column pairs (j,k) realizing each mode, frequencies[x] =
  /// eigenvalues[pair.first] - eigenvalues[pair.second] up to sign.
  static constexpr std::array<std::pair<int, int>, 6> mode_pairs{
      {{0, 1}, {0, 3}, {1, 2}, {2, 3}, {0, 2}, {1, 3}}};
};

ModeSet mode_set(const FourLevelParams& p);

/// Per-mode complex amplitudes of one density-matrix element.
struct AmplitudeTable {
  std::array<Complex, 6> forward{};   // C_{ab,+x}, phase e^{-i w_x t}
  std::array<Complex, 6> backward{};  // C_{ab,-x}, phase e^{+i w_x t}
  Complex equilibrium{};              // sum of j = k terms
};

AmplitudeTable amplitudes(const FourLevelParams& p, const ComplexMatrix& rho0,
                          int a, int b);

/// Closed-form element trajectories: equilibrium plus decaying
/// oscillations, each mode damped by exp(-2 J(t,0,0) Gamma_x^2).
class FourLevelTrajectory {
 public:
  FourLevelTrajectory(const FourLevelParams& p, const ComplexMatrix& rho0,
                      std::function<double(double)> j00);

  Complex element(int a, int b, double t) const;
  ComplexMatrix matrix(double t) const;
  ComplexMatrix equilibrium() const;
  const ModeSet& modes() const { return modes_; }

 private:
  ModeSet modes_;
  ComplexMatrix rho_eig_;
  std::function<double(double)> j00_;
};

/// Equilibrium population of the c states for |psi(0)> = alpha|s_L> + beta|s_R>.
double equilibrium_leakage_4lv(const FourLevelParams& p, double alpha, double beta);

enum class CouplingRegime { weak, resonant, strong };

struct CaseReport {
  CouplingRegime regime;
  double gate_time;       // pi/(2 g_s)
  double quality_factor;  // regime-specific closed form
};

/// Classify by delta/(g_c - g_s): >= 3 weak, in [1/3, 3] resonant, else
/// strong; throws when the case hierarchy (g_c - g_s) > |g_2| is violated.
CaseReport case_report(const FourLevelParams& p);

}  // namespace ffq
