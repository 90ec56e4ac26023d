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

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "ffq/linalg.hpp"
#include "ffq/noise.hpp"

namespace ffq {

/// One independent classical noise source: a Hermitian coupling operator
/// (strength folded in, e.g. (omega_n/2) Z) and its spectrum.
struct NoiseChannel {
  Matrix op;              // N x N real symmetric
  NoiseSpectrum spectrum;

  void validate() const;
};

enum class PropagatorMode { secular, full_k };

/// Diagonalized noiseless system plus its noise channels.
struct EvolutionSetup {
  Matrix rotation;               // R, columns are eigenvectors of H0
  Vector energies;               // ascending
  std::vector<NoiseChannel> channels;
  PropagatorMode mode = PropagatorMode::secular;

  int dim() const { return static_cast<int>(energies.size()); }
  void validate() const;
};

/// Diagonalize a real symmetric H0 and bundle it with noise channels.
EvolutionSetup make_setup(const Matrix& h0, std::vector<NoiseChannel> channels,
                          PropagatorMode mode = PropagatorMode::secular);

struct EvolutionResult {
  std::vector<double> times;
  std::vector<ComplexMatrix> rho;
  ComplexMatrix equilibrium;      // analytic t -> infinity limit (j = k terms)
  double min_eigenvalue = 0.0;    // most negative eigenvalue seen on the run
  std::vector<std::string> warnings;
};

/// Dephasing rate Gamma_ijk = (R^T h R)_jj - (R^T h R)_kk.
double dephasing_rate(const NoiseChannel& channel, const Matrix& rotation,
                      int j, int k);

/// Second-order cumulant propagator with only the zero-frequency terms of
/// K(t): per-pair phases times Gaussian envelopes exp(-sum_i J_i(t,0,0)
/// Gamma_ijk^2).
EvolutionResult evolve_secular(const EvolutionSetup& setup,
                               const ComplexMatrix& rho0,
                               const std::vector<double>& times);

/// Full-K propagator: builds K_i(t) in Liouville space retaining the
/// (0,0) and (w,-w) decay-profile terms and exponentiates -sum K_i(t) at
/// each output time.  With keep_resonant = false only the (0,0) terms are
/// retained, which must reproduce evolve_secular.
EvolutionResult evolve_full(const EvolutionSetup& setup, const ComplexMatrix& rho0,
                            const std::vector<double>& times,
                            bool keep_resonant = true);

/// Monte-Carlo oracle: samples random-phase 1/f trajectories on a
/// log-spaced mode grid and integrates the von Neumann equation with RK4.
/// Deterministic for a fixed seed; trajectories run in parallel and merge
/// by index.
EvolutionResult evolve_monte_carlo(const Matrix& h0,
                                   const std::vector<NoiseChannel>& channels,
                                   const ComplexMatrix& rho0,
                                   const std::vector<double>& times, int n_traj,
                                   std::uint64_t seed, int n_modes = 256,
                                   double dt = 0.0, int threads = 0);

/// Sentinel returned when the envelope never crosses the threshold inside
/// the search window [1/omega_h, 1/omega_l].
inline constexpr double kExceedsWindow = std::numeric_limits<double>::infinity();

/// Smallest T with envelope F_ab(T) = threshold, from the analytic
/// equilibrium and the per-mode Gaussian envelopes of the secular solution.
double coherence_time(const EvolutionSetup& setup, const ComplexMatrix& rho0,
                      int a, int b, double threshold = 0.36787944117144233);

}  // namespace ffq
