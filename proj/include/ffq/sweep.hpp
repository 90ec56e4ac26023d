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
#include <functional>
#include <string>
#include <vector>

#include "ffq/constants.hpp"
#include "ffq/fourlevel.hpp"
#include "ffq/noise.hpp"
#include "ffq/single_qubit.hpp"
#include "ffq/two_qubit.hpp"

namespace ffq {

/// Axes of a (E_z - E_c, B) map plus the fixed parameters of the run.
struct SweepGrid {
  std::vector<double> e_field_axis;  // V/cm, strictly increasing
  std::vector<double> b_axis;        // tesla, strictly increasing
  double tunnel_coupling = 47.15 * units::microelectronvolt;
  double omega_n = 1.0 * units::microelectronvolt;
  NoiseSpectrum spectrum{};
  double v_dd = 0.0;  // used by two-qubit maps
  PhysicalConstants constants{};

  void validate() const;
};

/// Matrix of coherence times in seconds; infinity marks cells whose
/// envelope never decays inside the noise window ("exceeds window").
struct MapResult {
  SweepGrid grid;
  std::vector<std::vector<double>> values;  // [b][e]
  std::size_t sentinel_count = 0;
};

/// Number of worker threads: explicit request, else FFQ_THREADS, else the
/// hardware concurrency.
int resolve_threads(int requested);

/// Evaluate cell(ib, ie) over the grid with a bounded worker pool; results
/// are merged by index so the output is independent of scheduling.
MapResult run_map(const SweepGrid& grid,
                  const std::function<double(double, double)>& cell,
                  int threads);

/// Single-qubit dephasing time at one bias: Gaussian decay of rho_01 with
/// Gamma_01 = (omega_n/2)(Z_00 - Z_11) in the dressed basis.
double dephasing_time_fast(const QubitBias& bias, double omega_n,
                           const NoiseSpectrum& spectrum,
                           double threshold = 0.36787944117144233);

/// T2(E_z, B) map using the fast single-qubit path.
MapResult dephase_map(const SweepGrid& grid, int threads);

/// Two-qubit T1(E_z, B) map from the four-level secular envelope of the
/// |01> population with initial state |01>.
MapResult relax_map(const SweepGrid& grid, int threads);

/// Four-level model at a named operating point of the two-qubit maps.
struct OperatingPoint {
  char label;        // 'a', 'b' or 'c'
  double b_field;    // tesla
  double e_field;    // V/cm
};

OperatingPoint named_point(char label);

/// Flip-flop four-level parameters at a bias point (numeric z route).
FourLevelParams flip_flop_four_level(const QubitBias& bias, double v_dd,
                                     double omega_n, bool keep_g1 = false);

/// Time of the first local maximum of the |10> population above 90% of the
/// scan maximum, for the noiseless four-level model; the iSWAP duration.
double swap_time(const FourLevelParams& p);

/// Bisect V_dd until the noiseless swap time at the bias matches the
/// target within 1 percent.
double calibrate_v_dd(const QubitBias& bias, double omega_n, double target_time);

/// Radix-2 FFT magnitude spectrum of a real trace: Hann window, zero-padded
/// to the next power of two.  Returns (frequency in Hz, |amplitude|) pairs
/// for the positive-frequency half.
struct DftResult {
  std::vector<double> frequency;  // Hz
  std::vector<double> amplitude;
};

DftResult dft_trace(const std::vector<double>& samples, double dt);

}  // namespace ffq
