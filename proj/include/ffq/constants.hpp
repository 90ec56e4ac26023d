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

#include <stdexcept>

#include "ffq/units.hpp"

namespace ffq {

/// Material and device constants of the donor-dot system.
///
/// The Zeeman scale of the model is kappa = (gamma_e + gamma_n)/2 per tesla;
/// this convention, together with the defaults below, reproduces the
/// reference operating points (second-order sweet spot at B = 0.796 T and
/// E_z - E_c = 3.13 V/cm for V_t = 47.15 ueV).  The dot g-factor sits below
/// the donor one, so the mismatch term enters with a negative sign.
struct PhysicalConstants {
  double hyperfine_a = units::megahertz * 117.0;      // A, rad/s
  double gamma_e = units::gigahertz * 27.97;          // rad/s per tesla
  double gamma_n = units::megahertz * 17.23;          // rad/s per tesla
  double delta_gamma = 0.0017;                        // |dot-donor| g mismatch
  double donor_dot_distance = 20.1 * units::nanometre;

  void validate() const {
    if (hyperfine_a <= 0 || gamma_e <= 0 || gamma_n <= 0)
      throw std::invalid_argument("PhysicalConstants: couplings must be positive");
    if (delta_gamma < 0 || delta_gamma > 0.007)
      throw std::invalid_argument("PhysicalConstants: delta_gamma outside [0, 0.007]");
    if (donor_dot_distance <= 0)
      throw std::invalid_argument("PhysicalConstants: donor_dot_distance must be positive");
  }

  // Flip-flop Zeeman splitting omega_B at field b (tesla).
  double zeeman_splitting(double b) const { return 0.5 * (gamma_e + gamma_n) * b; }

  // Dot-donor electron Zeeman difference Delta omega_B (negative).
  double zeeman_mismatch(double b) const { return -0.5 * delta_gamma * gamma_e * b; }

  // Detuning eps = e (E_z - E_c) d for a field offset in V/cm.
  double detuning_from_field(double ez_v_per_cm) const {
    // 1 V/cm * d = d[m] * 100 volts -> eV; express as rad/s.
    return ez_v_per_cm * donor_dot_distance * 100.0 * 1e6 * units::microelectronvolt;
  }

  double field_from_detuning(double eps) const {
    return eps / (donor_dot_distance * 100.0 * 1e6 * units::microelectronvolt);
  }
};

}  // namespace ffq
