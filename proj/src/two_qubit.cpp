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

#include "ffq/two_qubit.hpp"

#include <cmath>
#include <stdexcept>

#include "ffq/units.hpp"

namespace ffq {

namespace {

// CODATA: e = 1.602176634e-19 C, eps_0 = 8.8541878128e-12 F/m.
constexpr double kElementaryCharge = 1.602176634e-19;
constexpr double kVacuumPermittivity = 8.8541878128e-12;

Matrix pauli_product(int j, int k) {
  // sigma'_j tau'_k on the dressed basis ordered like {g-dn, g-up, e-dn, e-up};
  // j, k in {0: id, 1: x, 2: y (paired as sigma_y tau_y only), 3: z}
  Matrix sz = Matrix::Zero(4, 4), sx = Matrix::Zero(4, 4);
  sz.diagonal() << 1, 1, -1, -1;
  sx(0, 2) = sx(2, 0) = sx(1, 3) = sx(3, 1) = 1;
  Matrix tz = Matrix::Zero(4, 4), tx = Matrix::Zero(4, 4);
  tz.diagonal() << 1, -1, 1, -1;
  tx(0, 1) = tx(1, 0) = tx(2, 3) = tx(3, 2) = 1;
  Matrix syty = Matrix::Zero(4, 4);
  syty(0, 3) = syty(3, 0) = -1;
  syty(1, 2) = syty(2, 1) = 1;

  auto part = [&](int idx, bool charge) -> Matrix {
    switch (idx) {
      case 0: return Matrix::Identity(4, 4);
      case 1: return charge ? sx : tx;
      case 3: return charge ? sz : tz;
      default: throw std::logic_error("pauli_product: y handled separately");
    }
  };
  if (j == 2 && k == 2) return syty;
  return part(j, true) * part(k, false);
}

}  // namespace

double dipole_strength(const DipoleGeometry& g) {
  if (!(g.d1 > 0) || !(g.d2 > 0) || !(g.r > 0))
    throw std::invalid_argument("dipole_strength: lengths must be positive");
  if (!(g.eps_r >= 1.0))
    throw std::invalid_argument("dipole_strength: eps_r must be >= 1");
  const double joules = kElementaryCharge * kElementaryCharge * g.d1 * g.d2 /
                        (16.0 * units::pi * g.eps_r * kVacuumPermittivity *
                         g.r * g.r * g.r);
  const double uev = joules / kElementaryCharge * 1e6;  // volts -> ueV of charge e
  return uev * units::microelectronvolt;
}

CouplingRates coupling_rates(const ZCoefficients& z, double v_dd,
                             const FlipFlopSpectrum& spectrum, double omega_n) {
  if (!(v_dd > 0)) throw std::invalid_argument("coupling_rates: v_dd must be positive");
  CouplingRates r;
  r.g_f = v_dd * z.z31 * z.z31;
  r.g_c = v_dd * z.z10 * z.z10;
  r.g_l_signed = v_dd * z.z31 * z.z10;
  r.g_l = std::abs(r.g_l_signed);
  r.gamma1 = omega_n * (z.z30 - z.z03) / 2.0;
  r.gamma2 = omega_n * (z.z11 + z.z22) / 2.0;
  r.delta = spectrum.splitting_delta();
  return r;
}

Matrix z_operator_from_coefficients(const ZCoefficients& z) {
  return z.z03 * pauli_product(0, 3) + z.z10 * pauli_product(1, 0) +
         z.z30 * pauli_product(3, 0) + z.z31 * pauli_product(3, 1) +
         z.z33 * pauli_product(3, 3) + z.z11 * pauli_product(1, 1) +
         z.z22 * pauli_product(2, 2) + z.z01 * pauli_product(0, 1) +
         z.z13 * pauli_product(1, 3);
}

TwoQubitSystem build_two_qubit(const FlipFlopSpectrum& spectrum,
                               const ZCoefficients& z, double v_dd,
                               TwoQubitMode mode) {
  TwoQubitSystem sys;
  sys.mode = mode;
  sys.basis_labels.reserve(16);
  Matrix h = Matrix::Zero(16, 16);
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) {
      sys.basis_labels.emplace_back(j, k);
      h(j * 4 + k, j * 4 + k) = spectrum.energies[j] + spectrum.energies[k];
    }

  if (mode == TwoQubitMode::full_z) {
    const Matrix zop = z_operator_from_coefficients(z);
    h += v_dd * kron(zop, zop);
  } else {
    const Matrix sx = pauli_product(1, 0);
    const Matrix sztx = pauli_product(3, 1);
    h += v_dd * (z.z31 * z.z31 * kron(sztx, sztx) +
                 z.z10 * z.z31 * (kron(sx, sztx) + kron(sztx, sx)) +
                 z.z10 * z.z10 * kron(sx, sx));
  }
  sys.hamiltonian = 0.5 * (h + h.transpose());
  return sys;
}

GateAnalytics gate_analytics(const CouplingRates& r) {
  const double denom = r.g_c * r.g_c - r.delta * r.delta;
  if (std::abs(denom) < 1e-12 * r.g_c * r.g_c)
    throw std::domain_error(
        "gate_analytics: delta = +-g_c makes (g_c^2 - delta^2) divergent");

  const double g1 = std::abs(r.gamma1), g2 = std::abs(r.gamma2);
  GateAnalytics out{};
  out.omega_slow = 2.0 * r.g_f * r.delta * r.delta / denom;
  out.omega_fast = r.g_c - r.delta;
  out.gamma_slow =
      2.0 * (r.delta * r.g_f / (r.g_c * r.g_c)) * (2.0 * g1 - (r.g_l / r.g_f) * g2);
  out.gamma_fast = g1;
  out.omega_c = 2.0 * r.g_f * r.delta * r.delta / (r.delta * r.delta - r.g_c * r.g_c);
  out.gamma_c = 2.0 * r.g_l * g2 / r.delta -
                4.0 * g1 * r.g_c * r.g_l * r.g_l / std::pow(r.delta, 3);
  out.q_a = 3.0 * r.g_f / g1;
  out.q_b = 2.0 * r.g_f * r.delta * r.delta / (g1 * denom);
  const double qc_denom = r.delta * r.delta * g2 - 2.0 * r.g_c * r.g_l * g1;
  out.q_c = std::pow(r.delta, 5) * r.g_f /
            (r.g_l * (r.delta * r.delta - r.g_c * r.g_c) * qc_denom);
  return out;
}

double equilibrium_leakage(const CouplingRates& r) {
  const double phi_p = std::atan2(2.0 * r.g_l_signed, -r.delta - (r.g_c - r.g_f));
  const double phi_m = std::atan2(-2.0 * r.g_l_signed, -r.delta + (r.g_c - r.g_f));
  return 0.25 * (std::pow(std::sin(phi_p), 2) + std::pow(std::sin(phi_m), 2));
}

double long_time_t1_rate(const ZCoefficients& z, double omega_n, double omega0,
                         double omega_b) {
  return omega_n * omega_n *
         (z.z10 * z.z10 / omega0 + z.z31 * z.z31 / omega_b);
}

}  // namespace ffq
