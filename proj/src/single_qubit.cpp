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

#include "ffq/single_qubit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ffq {

namespace {

// Pauli products on the product basis {g-down, g-up, e-down, e-up};
// sigma acts on the charge factor, tau on the bare flip-flop factor.
Matrix sigma_z_op() {
  Matrix m = Matrix::Zero(4, 4);
  m.diagonal() << 1, 1, -1, -1;
  return m;
}
Matrix sigma_x_op() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 2) = m(2, 0) = m(1, 3) = m(3, 1) = 1;
  return m;
}
Matrix tau_z_op() {
  Matrix m = Matrix::Zero(4, 4);
  m.diagonal() << 1, -1, 1, -1;
  return m;
}
Matrix tau_x_op() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 1) = m(1, 0) = m(2, 3) = m(3, 2) = 1;
  return m;
}

void require_validity_regime(const QubitBias& bias) {
  const double gap = std::abs(bias.omega0() - bias.omega_b());
  if (gap <= bias.constants.hyperfine_a / 4.0)
    throw std::domain_error(
        "perturbation theory breaks down: |omega0 - omegaB| <= A/4");
}

}  // namespace

QubitBias QubitBias::from_field_offset(double ez_v_per_cm, double tunnel_coupling,
                                       double b_field, PhysicalConstants pc) {
  QubitBias bias;
  bias.detuning = pc.detuning_from_field(ez_v_per_cm);
  bias.tunnel_coupling = tunnel_coupling;
  bias.b_field = b_field;
  bias.constants = pc;
  bias.validate();
  return bias;
}

void QubitBias::validate() const {
  constants.validate();
  if (!(tunnel_coupling > 0))
    throw std::invalid_argument("QubitBias: tunnel_coupling must be positive");
  if (!(b_field > 0))
    throw std::invalid_argument("QubitBias: b_field must be positive");
}

double QubitBias::omega0() const { return std::hypot(detuning, tunnel_coupling); }
double QubitBias::omega_b() const { return constants.zeeman_splitting(b_field); }
double QubitBias::delta_omega_b() const { return constants.zeeman_mismatch(b_field); }
double QubitBias::field_offset() const { return constants.field_from_detuning(detuning); }

ChargeQubit charge_qubit(const QubitBias& bias) {
  bias.validate();
  return {bias.omega0(), std::atan2(bias.tunnel_coupling, bias.detuning)};
}

Matrix build_hamiltonian(const QubitBias& bias) {
  bias.validate();
  const ChargeQubit cq = charge_qubit(bias);
  const double ce = std::cos(cq.eta), se = std::sin(cq.eta);
  const double omega_b = bias.omega_b();
  const double domega_b = bias.delta_omega_b();
  const double a = bias.constants.hyperfine_a;

  const Matrix sz = sigma_z_op(), sx = sigma_x_op();
  const Matrix tz = tau_z_op(), tx = tau_x_op();
  const Matrix id = Matrix::Identity(4, 4);

  Matrix h = -0.5 * cq.omega0 * sz - 0.5 * omega_b * tz;
  h += -0.25 * domega_b * (id + ce * sz + se * sx) * tz;
  h += -0.125 * a * (id - ce * sz - se * sx) * (id - 2.0 * tx);
  return 0.5 * (h + h.transpose());  // exact symmetry at machine precision
}

FlipFlopSpectrum exact_spectrum(const Matrix& h) {
  if (h.rows() != 4 || h.cols() != 4)
    throw std::invalid_argument("exact_spectrum: expected a 4x4 matrix");
  if (symmetry_defect(h) > 1e-12 * std::max(1.0, h.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("exact_spectrum: matrix is not symmetric");

  const EigenDecomposition eig = jacobi_eigensolve(h);
  FlipFlopSpectrum out;
  for (int i = 0; i < 4; ++i) out.energies[i] = eig.values(i);
  out.states = eig.vectors;
  out.source = SpectrumSource::exact;
  return out;
}

FlipFlopSpectrum perturbative_spectrum(const QubitBias& bias) {
  bias.validate();
  require_validity_regime(bias);

  const ChargeQubit cq = charge_qubit(bias);
  const double ce = std::cos(cq.eta), se = std::sin(cq.eta);
  const double w0 = cq.omega0;
  const double wb = bias.omega_b();
  const double dwb = bias.delta_omega_b();
  const double a = bias.constants.hyperfine_a;

  const double cm = 1.0 - ce, cp = 1.0 + ce;
  const double s2 = se * se;
  const double a2_16wb = a * a / (16.0 * wb);

  FlipFlopSpectrum out;
  out.source = SpectrumSource::perturbative;
  out.energies[0] = 0.5 * (-w0 - wb) - a / 8.0 * cm - dwb / 4.0 * cp -
                    a2_16wb * (cm * cm + s2 * (wb / (4.0 * w0) + wb / (w0 + wb) -
                                               wb * dwb / (a * w0) +
                                               wb * dwb * dwb / (a * a * w0)));
  out.energies[1] = 0.5 * (-w0 + wb) - a / 8.0 * cm + dwb / 4.0 * cp -
                    a2_16wb * (-cm * cm + s2 * (wb / (4.0 * w0) + wb / (w0 - wb) +
                                                wb * dwb / (a * w0) +
                                                wb * dwb * dwb / (a * a * w0)));
  out.energies[2] = 0.5 * (w0 - wb) - a / 8.0 * cp - dwb / 4.0 * cm -
                    a2_16wb * (cp * cp + s2 * (-wb / (4.0 * w0) - wb / (w0 - wb) +
                                               wb * dwb / (a * w0) -
                                               wb * dwb * dwb / (a * a * w0)));
  out.energies[3] = 0.5 * (w0 + wb) - a / 8.0 * cp + dwb / 4.0 * cm -
                    a2_16wb * (-cp * cp + s2 * (-wb / (4.0 * w0) - wb / (w0 + wb) -
                                                wb * dwb / (a * w0) -
                                                wb * dwb * dwb / (a * a * w0)));

  // First-order states in {g-down, g-up, e-down, e-up}; the combinations
  // (A -+ 2 dwb) keep the A -> 0 limit finite.
  Matrix v(4, 4);
  v.col(0) << 1.0, -a / (4.0 * wb) * cm, -(a - 2.0 * dwb) * se / (8.0 * w0),
      a * se / (4.0 * (w0 + wb));
  v.col(1) << a / (4.0 * wb) * cm, 1.0, a * se / (4.0 * (w0 - wb)),
      -(a + 2.0 * dwb) * se / (8.0 * w0);
  v.col(2) << (a - 2.0 * dwb) * se / (8.0 * w0), -a * se / (4.0 * (w0 - wb)), 1.0,
      -a / (4.0 * wb) * cp;
  v.col(3) << -a * se / (4.0 * (w0 + wb)), (a + 2.0 * dwb) * se / (8.0 * w0),
      a / (4.0 * wb) * cp, 1.0;

  // Modified Gram-Schmidt, then the common sign convention.
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < j; ++k) v.col(j) -= v.col(k).dot(v.col(j)) * v.col(k);
    v.col(j).normalize();
    int imax = 0;
    v.col(j).cwiseAbs().maxCoeff(&imax);
    if (v(imax, j) < 0) v.col(j) *= -1.0;
  }

  // Levels are labeled by energy, not by character; beyond the Zeeman-charge
  // crossing the formula order is no longer ascending.
  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return out.energies[i] < out.energies[j]; });
  FlipFlopSpectrum sorted;
  sorted.source = out.source;
  sorted.states.resize(4, 4);
  for (int j = 0; j < 4; ++j) {
    sorted.energies[j] = out.energies[order[j]];
    sorted.states.col(j) = v.col(order[j]);
  }
  return sorted;
}

ZCoefficients z_coefficients_formula(const QubitBias& bias) {
  bias.validate();
  require_validity_regime(bias);

  const ChargeQubit cq = charge_qubit(bias);
  const double ce = std::cos(cq.eta), se = std::sin(cq.eta);
  const double w0 = cq.omega0;
  const double wb = bias.omega_b();
  const double dwb = bias.delta_omega_b();
  const double a = bias.constants.hyperfine_a;
  const double gap2 = w0 * w0 - wb * wb;

  ZCoefficients z;
  z.source = ZSource::formula;
  z.z03 = a * a * w0 * w0 * w0 * ce * se * se / (4.0 * wb * gap2 * gap2);
  z.z10 = se + a * ce * se / (4.0 * w0);
  z.z30 = ce - a * se * se / (4.0 * w0);
  z.z31 = a * w0 * se * se / (2.0 * gap2);
  z.z33 = dwb * se * se / (2.0 * w0);
  z.z11 = -a * w0 * ce * se / (2.0 * gap2);
  z.z22 = z.z11 * w0 / wb;
  z.z01 = -a * w0 * dwb * ce * se * se / (4.0 * wb * gap2);
  z.z13 = -dwb * ce * se / (2.0 * w0);
  return z;
}

Matrix position_operator(const QubitBias& bias) {
  const ChargeQubit cq = charge_qubit(bias);
  return std::cos(cq.eta) * sigma_z_op() + std::sin(cq.eta) * sigma_x_op();
}

ZCoefficients z_coefficients_numeric(const QubitBias& bias,
                                     const FlipFlopSpectrum& spectrum) {
  const Matrix zd = spectrum.states.transpose() * position_operator(bias) *
                    spectrum.states;

  const Matrix sz = sigma_z_op(), sx = sigma_x_op();
  const Matrix tz = tau_z_op(), tx = tau_x_op();
  // sigma'_y tau'_y is real in this basis: -|0><3| - |3><0| + |1><2| + |2><1|
  Matrix syty = Matrix::Zero(4, 4);
  syty(0, 3) = syty(3, 0) = -1;
  syty(1, 2) = syty(2, 1) = 1;

  auto coeff = [&](const Matrix& op) { return (op * zd).trace() / 4.0; };

  ZCoefficients z;
  z.source = ZSource::numeric;
  z.z03 = coeff(tz);
  z.z10 = coeff(sx);
  z.z30 = coeff(sz);
  z.z31 = coeff(sz * tx);
  z.z33 = coeff(sz * tz);
  z.z11 = coeff(sx * tx);
  z.z22 = coeff(syty);
  z.z01 = coeff(tx);
  z.z13 = coeff(sx * tz);
  return z;
}

double omega10_exact(double detuning, double tunnel_coupling, double b_field,
                     const PhysicalConstants& pc) {
  QubitBias bias{detuning, tunnel_coupling, b_field, pc};
  return exact_spectrum(build_hamiltonian(bias)).omega10();
}

namespace {

double omega10_slope(double eps, double vt, double b, const PhysicalConstants& pc,
                     double h) {
  return (omega10_exact(eps + h, vt, b, pc) - omega10_exact(eps - h, vt, b, pc)) /
         (2.0 * h);
}

double omega10_curvature(double eps, double vt, double b,
                         const PhysicalConstants& pc, double h) {
  return (omega10_exact(eps + h, vt, b, pc) - 2.0 * omega10_exact(eps, vt, b, pc) +
          omega10_exact(eps - h, vt, b, pc)) /
         (h * h);
}

}  // namespace

std::vector<double> sweet_spot_detunings(double tunnel_coupling, double b_field,
                                         const PhysicalConstants& pc) {
  if (!(tunnel_coupling > 0) || !(b_field > 0))
    throw std::invalid_argument("sweet_spot_detunings: V_t and B must be positive");

  const double vt = tunnel_coupling;
  const double h = 1e-4 * vt;
  const int n = 401;
  const double lo = -20.0 * vt, hi = 20.0 * vt;

  std::vector<double> grid(n), slope(n);
  for (int i = 0; i < n; ++i) {
    grid[i] = lo + (hi - lo) * i / (n - 1);
    slope[i] = omega10_slope(grid[i], vt, b_field, pc, h);
  }

  std::vector<double> roots;
  for (int i = 0; i + 1 < n; ++i) {
    if (slope[i] == 0.0) {
      roots.push_back(grid[i]);
      continue;
    }
    if (slope[i] * slope[i + 1] >= 0.0) continue;
    double a = grid[i], b = grid[i + 1], fa = slope[i];
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      const double fm = omega10_slope(mid, vt, b_field, pc, h);
      if (fa * fm <= 0.0)
        b = mid;
      else {
        a = mid;
        fa = fm;
      }
      if ((b - a) <= 1e-10 * std::max(std::abs(a) + std::abs(b), vt)) break;
    }
    roots.push_back(0.5 * (a + b));
  }

  // Keep genuine stationary points: the derivative must be small at the
  // root and must change sign robustly above the finite-difference noise
  // floor (eigenvalues carry ~1e-15 |H| of rounding).
  std::vector<double> verified;
  for (double eps : roots) {
    const double w10 = omega10_exact(eps, vt, b_field, pc);
    if (std::abs(omega10_slope(eps, vt, b_field, pc, h)) >= 1e-6 * w10 / vt)
      continue;
    const double scale = std::abs(eps) + QubitBias{eps, vt, b_field, pc}.omega0();
    const double noise_floor = 1e-14 * scale / h;
    const double left = omega10_slope(eps - 20.0 * h, vt, b_field, pc, h);
    const double right = omega10_slope(eps + 20.0 * h, vt, b_field, pc, h);
    if (left * right >= 0.0) continue;
    if (std::abs(left) < 5.0 * noise_floor || std::abs(right) < 5.0 * noise_floor)
      continue;
    if (!verified.empty() && std::abs(eps - verified.back()) < 40.0 * h) continue;
    verified.push_back(eps);
  }
  return verified;
}

std::optional<double> sweet_spot_detuning(double tunnel_coupling, double b_field,
                                          const PhysicalConstants& pc) {
  const auto roots = sweet_spot_detunings(tunnel_coupling, b_field, pc);
  if (roots.empty()) return std::nullopt;
  return *std::min_element(roots.begin(), roots.end(),
                           [](double a, double b) { return std::abs(a) < std::abs(b); });
}

std::optional<SecondOrderSweetSpot> second_order_sweet_spot(
    double tunnel_coupling, const PhysicalConstants& pc) {
  if (!(tunnel_coupling > 0))
    throw std::invalid_argument("second_order_sweet_spot: V_t must be positive");

  const double vt = tunnel_coupling;
  const double h = 1e-4 * vt;
  const double kappa = 0.5 * (pc.gamma_e + pc.gamma_n);
  const double b_res = vt / kappa;  // field where omega_B crosses V_t

  // Largest slope of omega10 over eps > 0.  The pair of first-order spots
  // (a minimum and a maximum of omega10) exists exactly when this is
  // positive; at the fold it touches zero.
  auto max_slope = [&](double b, double* argmax) {
    const int n = 1200;
    double best = -1e300, best_eps = 0.0;
    for (int i = 1; i <= n; ++i) {
      const double eps = 20.0 * vt * i / n;
      const double s = omega10_slope(eps, vt, b, pc, h);
      if (s > best) {
        best = s;
        best_eps = eps;
      }
    }
    // golden-section refinement around the grid maximum
    double a = std::max(1e-6 * vt, best_eps - 20.0 * vt / n);
    double c = best_eps + 20.0 * vt / n;
    const double phi = 0.6180339887498949;
    double x1 = c - phi * (c - a), x2 = a + phi * (c - a);
    double f1 = omega10_slope(x1, vt, b, pc, h), f2 = omega10_slope(x2, vt, b, pc, h);
    for (int it = 0; it < 80 && (c - a) > 1e-9 * vt; ++it) {
      if (f1 > f2) {
        c = x2;
        x2 = x1;
        f2 = f1;
        x1 = c - phi * (c - a);
        f1 = omega10_slope(x1, vt, b, pc, h);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + phi * (c - a);
        f2 = omega10_slope(x2, vt, b, pc, h);
      }
    }
    if (argmax) *argmax = 0.5 * (a + c);
    return std::max(f1, f2);
  };

  double b_lo = 0.55 * b_res, b_hi = 1.02 * b_res;
  if (max_slope(b_lo, nullptr) >= 0.0) return std::nullopt;  // pair never vanishes
  if (max_slope(b_hi, nullptr) <= 0.0) return std::nullopt;  // pair never appears
  double eps_ss = 0.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (b_lo + b_hi);
    if (max_slope(mid, &eps_ss) > 0.0)
      b_hi = mid;
    else
      b_lo = mid;
    if ((b_hi - b_lo) < 1e-7 * b_res) break;
  }
  const double b_ss = b_hi;  // side where the stationary pair still exists
  max_slope(b_ss, &eps_ss);

  // Verify both derivatives at the reported point (relative 1e-4).
  const double w10 = omega10_exact(eps_ss, vt, b_ss, pc);
  const double d1 = omega10_slope(eps_ss, vt, b_ss, pc, h);
  const double d2 = omega10_curvature(eps_ss, vt, b_ss, pc, 10.0 * h);
  const double d2_scale = w10 / (vt * vt);
  if (std::abs(d1) > 1e-4 * w10 / vt || std::abs(d2) > 1e-3 * d2_scale)
    return std::nullopt;

  return SecondOrderSweetSpot{b_ss, eps_ss};
}

}  // namespace ffq
