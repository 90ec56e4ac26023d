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

#include "ffq/fourlevel.hpp"

#include <cmath>
#include <stdexcept>

#include "ffq/units.hpp"

namespace ffq {

namespace {
using C = Complex;
constexpr C kI{0.0, 1.0};
}  // namespace

FourLevelParams FourLevelParams::from_flip_flop(const ZCoefficients& z, double v_dd,
                                                double delta, double omega_n,
                                                bool keep_g1) {
  FourLevelParams p;
  p.delta = delta;
  p.g_s = v_dd * z.z31 * z.z31;
  p.g_c = v_dd * z.z10 * z.z10;
  p.g_2 = v_dd * z.z31 * z.z10;
  p.g_1 = keep_g1 ? v_dd * (z.z11 + z.z22) * (z.z03 + z.z30 + z.z33) : 0.0;
  p.gamma1 = omega_n * (z.z11 + z.z22) / 2.0;
  p.gamma2 = omega_n * (z.z30 - z.z03) / 2.0;
  return p;
}

Matrix FourLevelParams::hamiltonian() const {
  Matrix h(4, 4);
  h << 0.0, g_s, g_1, g_2,
       g_s, 0.0, g_2, g_1,
       g_1, g_2, delta, g_c,
       g_2, g_1, g_c, delta;
  return h;
}

std::array<Matrix, 2> FourLevelParams::noise_operators() const {
  Matrix hl = Matrix::Zero(4, 4), hr = Matrix::Zero(4, 4);
  hl(0, 2) = hl(2, 0) = gamma1;
  hl(2, 2) = -2.0 * gamma2;
  hr(1, 3) = hr(3, 1) = gamma1;
  hr(3, 3) = -2.0 * gamma2;
  return {hl, hr};
}

std::pair<double, double> mixing_angles(const FourLevelParams& p) {
  const double phi_p = std::atan2(-2.0 * (p.g_1 + p.g_2), -p.delta - (p.g_c - p.g_s));
  const double phi_m = std::atan2(-2.0 * (p.g_1 - p.g_2), -p.delta + (p.g_c - p.g_s));
  return {phi_p, phi_m};
}

ModeSet mode_set(const FourLevelParams& p) {
  ModeSet m;
  auto [pp, pm] = mixing_angles(p);
  m.phi_plus = pp;
  m.phi_minus = pm;

  const double cp2 = std::cos(pp / 2), sp2 = std::sin(pp / 2);
  const double cm2 = std::cos(pm / 2), sm2 = std::sin(pm / 2);
  Matrix r(4, 4);
  r << cp2, cm2, sp2, sm2,
       cp2, -cm2, sp2, -sm2,
       -sp2, -sm2, cp2, cm2,
       -sp2, sm2, cp2, -cm2;
  r /= std::sqrt(2.0);
  m.rotation = r;
  m.eigenvalues = (r.transpose() * p.hamiltonian() * r).diagonal();

  const double cP = std::cos(pp), sP = std::sin(pp);
  const double cM = std::cos(pm), sM = std::sin(pm);
  const double d = p.delta, gc = p.g_c, gs = p.g_s, g1 = p.g_1, g2 = p.g_2;

  m.frequencies[0] = 0.5 * d * (cP - cM) - 0.5 * gc * (2 - cP - cM) +
                     g2 * (sP + sM) - 0.5 * gs * (2 + cP + cM) + g1 * (sP - sM);
  m.frequencies[1] = 0.5 * d * (cP + cM) - 0.5 * gc * (2 - cP + cM) +
                     g2 * (sP - sM) - 0.5 * gs * (2 + cP - cM) + g1 * (sP + sM);
  m.frequencies[2] = 0.5 * d * (cP + cM) + 0.5 * gc * (2 + cP - cM) +
                     g2 * (sP - sM) + 0.5 * gs * (2 - cP + cM) + g1 * (sP + sM);
  m.frequencies[3] = 0.5 * d * (cP - cM) + 0.5 * gc * (2 + cP + cM) +
                     g2 * (sP + sM) + 0.5 * gs * (2 - cP - cM) + g1 * (sP - sM);
  m.frequencies[4] = d * cP + gc * cP + 2 * g2 * sP - gs * cP + 2 * g1 * sP;
  m.frequencies[5] = d * cM - gc * cM - 2 * g2 * sM + gs * cM + 2 * g1 * sM;

  // Decay rates of the six modes.  The gamma1 sign of the a/d pair follows
  // the explicit channel operators h_L, h_R (the rates below reproduce
  // Gamma_L^2 + Gamma_R^2 = 2 Gamma_x^2 exactly for every mode).
  const double g1t = p.gamma1, g2t = p.gamma2;
  m.rates[0] = g2t * (cP - cM) / 2 - g1t * (sP - sM) / 2;
  m.rates[1] = g2t * (cP + cM) / 2 - g1t * (sP + sM) / 2;
  m.rates[2] = g2t * (cP + cM) / 2 - g1t * (sP + sM) / 2;
  m.rates[3] = g2t * (cP - cM) / 2 - g1t * (sP - sM) / 2;
  m.rates[4] = g2t * cP - g1t * sP;
  m.rates[5] = g2t * cM - g1t * sM;
  return m;
}

AmplitudeTable amplitudes(const FourLevelParams& p, const ComplexMatrix& rho0,
                          int a, int b) {
  if (a < 0 || a > 3 || b < 0 || b > 3)
    throw std::invalid_argument("amplitudes: element index out of range");
  if ((rho0 - rho0.adjoint()).cwiseAbs().maxCoeff() > 1e-10 ||
      std::abs(rho0.trace() - C(1.0, 0.0)) > 1e-10)
    throw std::invalid_argument("amplitudes: rho0 must be Hermitian with trace one");

  const ModeSet m = mode_set(p);
  const ComplexMatrix rho_eig = m.rotation.transpose() * rho0 * m.rotation;

  AmplitudeTable out;
  for (int x = 0; x < 6; ++x) {
    const auto [j, k] = ModeSet::mode_pairs[x];
    out.forward[x] = m.rotation(a, j) * rho_eig(j, k) * m.rotation(b, k);
    out.backward[x] = m.rotation(a, k) * rho_eig(k, j) * m.rotation(b, j);
  }
  for (int j = 0; j < 4; ++j)
    out.equilibrium += m.rotation(a, j) * rho_eig(j, j) * m.rotation(b, j);
  return out;
}

FourLevelTrajectory::FourLevelTrajectory(const FourLevelParams& p,
                                         const ComplexMatrix& rho0,
                                         std::function<double(double)> j00)
    : modes_(mode_set(p)), j00_(std::move(j00)) {
  if ((rho0 - rho0.adjoint()).cwiseAbs().maxCoeff() > 1e-10 ||
      std::abs(rho0.trace() - C(1.0, 0.0)) > 1e-10)
    throw std::invalid_argument("FourLevelTrajectory: rho0 invalid");
  rho_eig_ = modes_.rotation.transpose() * rho0 * modes_.rotation;
}

Complex FourLevelTrajectory::element(int a, int b, double t) const {
  const Matrix& r = modes_.rotation;
  const double j = j00_ ? j00_(t) : 0.0;
  C acc = 0.0;
  for (int x = 0; x < 6; ++x) {
    const auto [p, q] = ModeSet::mode_pairs[x];
    const double w = modes_.eigenvalues(p) - modes_.eigenvalues(q);
    const double env = std::exp(-2.0 * j * modes_.rates[x] * modes_.rates[x]);
    acc += r(a, p) * rho_eig_(p, q) * r(b, q) * std::exp(-kI * (w * t)) * env;
    acc += r(a, q) * rho_eig_(q, p) * r(b, p) * std::exp(kI * (w * t)) * env;
  }
  for (int p = 0; p < 4; ++p) acc += r(a, p) * rho_eig_(p, p) * r(b, p);
  return acc;
}

ComplexMatrix FourLevelTrajectory::matrix(double t) const {
  ComplexMatrix out(4, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) out(a, b) = element(a, b, t);
  return out;
}

ComplexMatrix FourLevelTrajectory::equilibrium() const {
  const Matrix& r = modes_.rotation;
  ComplexMatrix eq = ComplexMatrix::Zero(4, 4);
  eq.diagonal() = rho_eig_.diagonal();
  return r * eq * r.transpose();
}

double equilibrium_leakage_4lv(const FourLevelParams& p, double alpha, double beta) {
  if (std::abs(alpha * alpha + beta * beta - 1.0) > 1e-10)
    throw std::invalid_argument("equilibrium_leakage_4lv: alpha^2 + beta^2 must be 1");
  auto [pp, pm] = mixing_angles(p);
  return 0.25 * (alpha * beta * (std::cos(2 * pm) - std::cos(2 * pp)) +
                 std::pow(std::sin(pp), 2) + std::pow(std::sin(pm), 2));
}

CaseReport case_report(const FourLevelParams& p) {
  const double split = p.g_c - p.g_s;
  if (!(split > std::abs(p.g_2)))
    throw std::domain_error(
        "case_report: hierarchy (g_c - g_s) > |g_2| violated");
  if (!(p.g_s > 0)) throw std::domain_error("case_report: requires g_s > 0");

  const double ratio = p.delta / split;
  CaseReport out{};
  out.gate_time = units::pi / (2.0 * p.g_s);
  if (ratio >= 3.0) {
    out.regime = CouplingRegime::weak;
    out.quality_factor = std::pow(p.delta, 3) * p.g_s /
                         (2.0 * units::pi * p.gamma2 * split * p.g_2 * p.g_2);
  } else if (ratio >= 1.0 / 3.0) {
    out.regime = CouplingRegime::resonant;
    out.quality_factor = 3.0 * p.g_s / (units::pi * p.gamma2);
  } else {
    out.regime = CouplingRegime::strong;
    out.quality_factor =
        std::pow(4.0 * p.g_2 * p.g_2 + split * split, 1.5) * p.g_s /
        (2.0 * units::pi * p.gamma2 * p.delta);
  }
  return out;
}

}  // namespace ffq
