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

#include "ffq/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "ffq/evolution.hpp"

namespace ffq {

void SweepGrid::validate() const {
  constants.validate();
  spectrum.validate();
  if (e_field_axis.empty() || b_axis.empty())
    throw std::invalid_argument("SweepGrid: axes must be nonempty");
  if (!std::is_sorted(e_field_axis.begin(), e_field_axis.end(),
                      std::less_equal<double>()))
    throw std::invalid_argument("SweepGrid: e_field_axis must be strictly increasing");
  if (!std::is_sorted(b_axis.begin(), b_axis.end(), std::less_equal<double>()))
    throw std::invalid_argument("SweepGrid: b_axis must be strictly increasing");
  if (!(tunnel_coupling > 0))
    throw std::invalid_argument("SweepGrid: tunnel_coupling must be positive");
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("FFQ_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  return hw > 0 ? hw : 1;
}

MapResult run_map(const SweepGrid& grid,
                  const std::function<double(double, double)>& cell,
                  int threads) {
  grid.validate();
  MapResult out;
  out.grid = grid;
  const std::size_t nb = grid.b_axis.size(), ne = grid.e_field_axis.size();
  out.values.assign(nb, std::vector<double>(ne, 0.0));

  const int n_threads = std::min<int>(resolve_threads(threads),
                                      static_cast<int>(nb * ne));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx = next.fetch_add(1); idx < nb * ne;
         idx = next.fetch_add(1)) {
      const std::size_t ib = idx / ne, ie = idx % ne;
      out.values[ib][ie] = cell(grid.b_axis[ib], grid.e_field_axis[ie]);
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < n_threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const auto& row : out.values)
    for (double v : row)
      if (std::isinf(v)) ++out.sentinel_count;
  return out;
}

double dephasing_time_fast(const QubitBias& bias, double omega_n,
                           const NoiseSpectrum& spectrum, double threshold) {
  const FlipFlopSpectrum spec = exact_spectrum(build_hamiltonian(bias));
  const Matrix zd =
      spec.states.transpose() * position_operator(bias) * spec.states;
  const double gamma = 0.5 * omega_n * (zd(0, 0) - zd(1, 1));
  const double target = -std::log(threshold) / (gamma * gamma);

  const double t_lo = 1.0 / spectrum.omega_h, t_hi = 1.0 / spectrum.omega_l;
  if (gamma == 0.0 || spectrum.decay_j00(t_hi) < target) return kExceedsWindow;
  if (spectrum.decay_j00(t_lo) >= target) return t_lo;
  double lo = t_lo, hi = t_hi;
  while ((hi - lo) > 1e-4 * hi) {
    const double mid = std::sqrt(lo * hi);
    if (spectrum.decay_j00(mid) >= target)
      hi = mid;
    else
      lo = mid;
  }
  return std::sqrt(lo * hi);
}

MapResult dephase_map(const SweepGrid& grid, int threads) {
  return run_map(
      grid,
      [&](double b, double ez) {
        const QubitBias bias = QubitBias::from_field_offset(
            ez, grid.tunnel_coupling, b, grid.constants);
        return dephasing_time_fast(bias, grid.omega_n, grid.spectrum);
      },
      threads);
}

FourLevelParams flip_flop_four_level(const QubitBias& bias, double v_dd,
                                     double omega_n, bool keep_g1) {
  const FlipFlopSpectrum spec = exact_spectrum(build_hamiltonian(bias));
  const ZCoefficients z = z_coefficients_numeric(bias, spec);
  return FourLevelParams::from_flip_flop(z, v_dd, spec.splitting_delta(),
                                         omega_n, keep_g1);
}

MapResult relax_map(const SweepGrid& grid, int threads) {
  if (!(grid.v_dd > 0))
    throw std::invalid_argument("relax_map: grid.v_dd must be positive");
  return run_map(
      grid,
      [&](double b, double ez) {
        const QubitBias bias = QubitBias::from_field_offset(
            ez, grid.tunnel_coupling, b, grid.constants);
        const FourLevelParams p = flip_flop_four_level(bias, grid.v_dd, grid.omega_n);
        auto hops = p.noise_operators();
        EvolutionSetup setup = make_setup(
            p.hamiltonian(),
            {NoiseChannel{hops[0], grid.spectrum}, NoiseChannel{hops[1], grid.spectrum}});
        ComplexMatrix rho0 = ComplexMatrix::Zero(4, 4);
        rho0(0, 0) = 1.0;  // |01> in the (s_L, s_R, c_L, c_R) ordering
        return coherence_time(setup, rho0, 0, 0);
      },
      threads);
}

OperatingPoint named_point(char label) {
  switch (label) {
    case 'a': return {'a', 0.796, 3.13};
    case 'b': return {'b', 0.806, 0.95};
    case 'c': return {'c', 0.771, 0.0};
    default: throw std::invalid_argument("named_point: unknown label");
  }
}

double swap_time(const FourLevelParams& p) {
  if (!(p.g_s > 0)) throw std::invalid_argument("swap_time: g_s must be positive");
  const Matrix h = p.hamiltonian();
  const EigenDecomposition eig = jacobi_eigensolve(h);
  const Vector start = Vector::Unit(4, 0);  // |s_L>
  const Vector c0 = eig.vectors.transpose() * start;

  auto p10 = [&](double t) {
    Complex amp = 0.0;
    for (int j = 0; j < 4; ++j)
      amp += eig.vectors(1, j) * c0(j) * std::exp(Complex(0.0, -eig.values(j) * t));
    return std::norm(amp);
  };

  double t_scan = 3.0 * units::pi / p.g_s;
  for (int attempt = 0; attempt < 8; ++attempt) {
    const int n = 65536;
    const double dt = t_scan / n;
    double best = 0.0;
    for (int i = 0; i <= n; ++i) best = std::max(best, p10(i * dt));
    double prev = p10(0.0), cur = p10(dt);
    for (int i = 1; i < n; ++i) {
      const double nxt = p10((i + 1) * dt);
      if (cur >= prev && cur >= nxt && cur >= 0.9 * best && cur > 0.25) {
        // parabolic refinement
        const double d = 0.5 * (prev - nxt) / (prev - 2.0 * cur + nxt);
        return (i + d) * dt;
      }
      prev = cur;
      cur = nxt;
    }
    t_scan *= 2.0;
  }
  throw std::runtime_error("swap_time: no population maximum found");
}

double calibrate_v_dd(const QubitBias& bias, double omega_n, double target_time) {
  if (!(target_time > 0))
    throw std::invalid_argument("calibrate_v_dd: target must be positive");
  auto time_at = [&](double v_dd) {
    return swap_time(flip_flop_four_level(bias, v_dd, omega_n));
  };
  // The swap slows down again once g_c passes the spin-charge detuning, so
  // walk up from weak coupling and bisect on the first descending bracket.
  double lo = 1e-4 * units::microelectronvolt;
  if (time_at(lo) < target_time)
    throw std::runtime_error("calibrate_v_dd: target shorter than the weak-coupling gate");
  double hi = lo;
  bool bracketed = false;
  for (int step = 0; step < 24; ++step) {
    hi *= 2.0;
    if (time_at(hi) < target_time) {
      lo = hi / 2.0;
      bracketed = true;
      break;
    }
  }
  if (!bracketed)
    throw std::runtime_error("calibrate_v_dd: target gate time not bracketed");
  for (int it = 0; it < 80; ++it) {
    const double mid = std::sqrt(lo * hi);
    const double t = time_at(mid);
    if (std::abs(t - target_time) <= 0.01 * target_time) return mid;
    if (t > target_time)
      lo = mid;
    else
      hi = mid;
  }
  return std::sqrt(lo * hi);
}

DftResult dft_trace(const std::vector<double>& samples, double dt) {
  if (samples.size() < 2 || !(dt > 0))
    throw std::invalid_argument("dft_trace: need at least two samples and dt > 0");
  const std::size_t n = samples.size();
  std::size_t padded = 1;
  while (padded < n) padded <<= 1;

  double mean = 0.0;
  for (double s : samples) mean += s;
  mean /= static_cast<double>(n);

  // remove the mean so spectral lines are not buried under the DC lobe
  std::vector<Complex> x(padded, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    const double hann =
        0.5 * (1.0 - std::cos(units::two_pi * static_cast<double>(i) / (n - 1)));
    x[i] = (samples[i] - mean) * hann;
  }

  // iterative radix-2 Cooley-Tukey
  for (std::size_t i = 1, j = 0; i < padded; ++i) {
    std::size_t bit = padded >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
  for (std::size_t len = 2; len <= padded; len <<= 1) {
    const double ang = -units::two_pi / static_cast<double>(len);
    const Complex wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < padded; i += len) {
      Complex w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const Complex u = x[i + k];
        const Complex v = x[i + k + len / 2] * w;
        x[i + k] = u + v;
        x[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }

  DftResult out;
  out.frequency.reserve(padded / 2);
  out.amplitude.reserve(padded / 2);
  for (std::size_t k = 0; k < padded / 2; ++k) {
    out.frequency.push_back(static_cast<double>(k) / (padded * dt));
    out.amplitude.push_back(std::abs(x[k]) / static_cast<double>(n));
  }
  return out;
}

}  // namespace ffq
