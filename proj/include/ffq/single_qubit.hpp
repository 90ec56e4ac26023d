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
#include <optional>
#include <vector>

#include "ffq/constants.hpp"
#include "ffq/linalg.hpp"

namespace ffq {

/// Physical knobs of one flip-flop qubit.  Every energy is an angular
/// frequency (rad/s); the magnetic field is in tesla.
struct QubitBias {
  double detuning = 0.0;        // eps = e (E_z - E_c) d, signed
  double tunnel_coupling = 0.0; // V_t > 0
  double b_field = 0.0;         // B > 0
  PhysicalConstants constants{};

  static QubitBias from_field_offset(double ez_v_per_cm, double tunnel_coupling,
                                     double b_field, PhysicalConstants pc = {});

  void validate() const;
  double omega0() const;                 // sqrt(eps^2 + V_t^2)
  double omega_b() const;                // flip-flop Zeeman splitting
  double delta_omega_b() const;          // dot-donor Zeeman difference
  double field_offset() const;           // E_z - E_c in V/cm
};

/// Donor-dot charge qubit derived from a bias point.
struct ChargeQubit {
  double omega0;  // rad/s
  double eta;     // mixing angle in (0, pi), tan(eta) = V_t/eps
};

ChargeQubit charge_qubit(const QubitBias& bias);

enum class SpectrumSource { exact, perturbative };

/// Four eigenenergies and eigenvectors of the single-qubit Hamiltonian in
/// the product basis {g-down, g-up, e-down, e-up}.
struct FlipFlopSpectrum {
  std::array<double, 4> energies{};  // ascending
  Matrix states;                     // 4x4, columns are eigenvectors
  SpectrumSource source = SpectrumSource::exact;

  double omega10() const { return energies[1] - energies[0]; }
  double splitting_delta() const { return energies[2] - energies[1]; }
};

/// Total donor-dot single-electron Hamiltonian, 4x4 real symmetric.
Matrix build_hamiltonian(const QubitBias& bias);

/// Numeric diagonalization (Jacobi); rejects non-symmetric input.
FlipFlopSpectrum exact_spectrum(const Matrix& h);

/// Second-order energies and first-order states of the nondegenerate
/// expansion; throws outside the validity regime |omega0 - omegaB| > A/4.
FlipFlopSpectrum perturbative_spectrum(const QubitBias& bias);

enum class ZSource { formula, numeric };

/// Expansion coefficients of the electron position operator Z in the
/// dressed basis, Z = sum z_jk sigma'_j tau'_k.
struct ZCoefficients {
  double z03 = 0, z10 = 0, z30 = 0, z31 = 0, z33 = 0;
  double z11 = 0, z22 = 0, z01 = 0, z13 = 0;
  ZSource source = ZSource::formula;

  double sum_squares() const {
    return z03 * z03 + z10 * z10 + z30 * z30 + z31 * z31 + z33 * z33 +
           z11 * z11 + z22 * z22 + z01 * z01 + z13 * z13;
  }
};

/// Closed forms for the nine coefficients; same validity regime as the
/// perturbative spectrum.
ZCoefficients z_coefficients_formula(const QubitBias& bias);

/// z_jk = tr[(sigma'_j tau'_k) Z_dressed]/4 with Z_dressed rotated by the
/// exact eigenvectors.
ZCoefficients z_coefficients_numeric(const QubitBias& bias,
                                     const FlipFlopSpectrum& spectrum);

/// Position operator in the product basis (charge part cos(eta) sigma_z +
/// sin(eta) sigma_x, identity on the spin factor).
Matrix position_operator(const QubitBias& bias);

/// omega10 = E_1 - E_0 from the exact spectrum at the given detuning.
double omega10_exact(double detuning, double tunnel_coupling, double b_field,
                     const PhysicalConstants& pc = {});

/// All first-order sweet spots (d omega10/d eps = 0) on the bracket
/// |eps| <= 20 V_t, by grid scan plus bisection on the centered
/// finite-difference derivative of the exact spectrum.
std::vector<double> sweet_spot_detunings(double tunnel_coupling, double b_field,
                                         const PhysicalConstants& pc = {});

/// The sweet spot closest to zero detuning, when any exists.
std::optional<double> sweet_spot_detuning(double tunnel_coupling, double b_field,
                                          const PhysicalConstants& pc = {});

struct SecondOrderSweetSpot {
  double b_field;   // tesla
  double detuning;  // rad/s
};

/// Bias where the first and second detuning derivatives of omega10 vanish
/// together (the fold where the two first-order spots merge); empty when no
/// such field exists in the search range.
std::optional<SecondOrderSweetSpot> second_order_sweet_spot(
    double tunnel_coupling, const PhysicalConstants& pc = {});

}  // namespace ffq
