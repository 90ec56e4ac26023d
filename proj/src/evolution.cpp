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

#include "ffq/evolution.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "ffq/linalg.hpp"
#include "ffq/units.hpp"

namespace ffq {

namespace {

using C = std::complex<double>;
constexpr C kI{0.0, 1.0};

void validate_rho0(const ComplexMatrix& rho0, int n) {
  if (rho0.rows() != n || rho0.cols() != n)
    throw std::invalid_argument("rho0: wrong dimension");
  if ((rho0 - rho0.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("rho0: not Hermitian");
  if (std::abs(rho0.trace() - C(1.0, 0.0)) > 1e-10)
    throw std::invalid_argument("rho0: trace must be one");
}

double min_hermitian_eigenvalue(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

void track_positivity(EvolutionResult& out, const ComplexMatrix& rho, double t) {
  const double mn = min_hermitian_eigenvalue(rho);
  if (mn < out.min_eigenvalue) out.min_eigenvalue = mn;
  if (mn < -1e-3 && out.warnings.size() < 16)
    out.warnings.push_back("rho eigenvalue " + std::to_string(mn) + " at t = " +
                           std::to_string(t) + " s");
}

}  // namespace

void NoiseChannel::validate() const {
  if (op.rows() != op.cols()) throw std::invalid_argument("NoiseChannel: op not square");
  if (symmetry_defect(op) > 1e-10 * std::max(1.0, op.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("NoiseChannel: op not symmetric");
  spectrum.validate();
}

void EvolutionSetup::validate() const {
  const int n = dim();
  if (rotation.rows() != n || rotation.cols() != n)
    throw std::invalid_argument("EvolutionSetup: rotation dimension mismatch");
  if ((rotation.transpose() * rotation - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() >
      1e-12)
    throw std::invalid_argument("EvolutionSetup: rotation not orthogonal");
  for (const auto& ch : channels) {
    ch.validate();
    if (ch.op.rows() != n)
      throw std::invalid_argument("EvolutionSetup: channel dimension mismatch");
  }
}

EvolutionSetup make_setup(const Matrix& h0, std::vector<NoiseChannel> channels,
                          PropagatorMode mode) {
  if (symmetry_defect(h0) > 1e-10 * std::max(1.0, h0.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("make_setup: H0 not symmetric");
  const EigenDecomposition eig = jacobi_eigensolve(h0);
  EvolutionSetup s;
  s.rotation = eig.vectors;
  s.energies = eig.values;
  s.channels = std::move(channels);
  s.mode = mode;
  s.validate();
  return s;
}

double dephasing_rate(const NoiseChannel& channel, const Matrix& rotation,
                      int j, int k) {
  const int n = static_cast<int>(rotation.rows());
  if (j < 0 || k < 0 || j >= n || k >= n)
    throw std::invalid_argument("dephasing_rate: index out of range");
  const Matrix hp = rotation.transpose() * channel.op * rotation;
  return hp(j, j) - hp(k, k);
}

EvolutionResult evolve_secular(const EvolutionSetup& setup,
                               const ComplexMatrix& rho0,
                               const std::vector<double>& times) {
  setup.validate();
  const int n = setup.dim();
  validate_rho0(rho0, n);

  const Matrix& r = setup.rotation;
  const ComplexMatrix rho_eig = r.transpose() * rho0 * r;

  // Gamma_ijk^2 for every channel, plus the channel's J(t,0,0).
  std::vector<Matrix> gamma2(setup.channels.size());
  std::vector<Vector> hdiag(setup.channels.size());
  for (std::size_t i = 0; i < setup.channels.size(); ++i) {
    const Matrix hp = r.transpose() * setup.channels[i].op * r;
    hdiag[i] = hp.diagonal();
    gamma2[i].resize(n, n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double g = hdiag[i](j) - hdiag[i](k);
        gamma2[i](j, k) = g * g;
      }
  }

  EvolutionResult out;
  out.times = times;
  out.rho.reserve(times.size());

  ComplexMatrix eq = ComplexMatrix::Zero(n, n);
  eq.diagonal() = rho_eig.diagonal();
  out.equilibrium = r * eq * r.transpose();

  for (double t : times) {
    std::vector<double> j00(setup.channels.size());
    for (std::size_t i = 0; i < setup.channels.size(); ++i)
      j00[i] = setup.channels[i].spectrum.decay_j00(t);

    ComplexMatrix mixed(n, n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double damp = 0.0;
        for (std::size_t i = 0; i < setup.channels.size(); ++i)
          damp += j00[i] * gamma2[i](j, k);
        const double phase = -(setup.energies(j) - setup.energies(k)) * t;
        mixed(j, k) = rho_eig(j, k) * std::exp(C(-damp, phase));
      }
    ComplexMatrix rho_t = r * mixed * r.transpose();
    track_positivity(out, rho_t, t);
    out.rho.push_back(std::move(rho_t));
  }
  return out;
}

namespace {

struct KTerm {
  int row;     // flattened (a,b) index
  int col;     // flattened (c,d) index
  double coeff;
  int cls;     // index into the class frequency table
};

struct ChannelKTerms {
  std::vector<KTerm> terms;
  std::vector<double> class_freq;  // signed omega for J(t, w, -w); 0 -> J00
};

// Enumerate the kept terms of K_i(t) for one channel.  J arguments are
// classified as (0,0), resonant (w1 = -w2) or dropped.
//
// With h~(tau)_ab = h_ab e^{i w_ab tau} and the ordered double integral of
// S(t1-t2) L~(t1) L~(t2), the expansion of [h~1, [h~2, rho]] gives
//   K[(a,x),(e,x)] += h_ab h_be J(t, w_ab, w_be)            (h1 h2 rho)
//   K[(a,c),(a,e)] += h_eb h_bc J(t, w_bc, w_eb)            (rho h2 h1)
//   K[(a,c),(e,d)] -= h_ae h_dc [J(t, w_ae, w_dc) + J(t, w_dc, w_ae)]
// with w_xy = E_x - E_y.  The identity sum_y K[(y,y),(.)] = 0 holds term by
// term in b, so any filter keyed on the J arguments conserves the trace.
ChannelKTerms build_k_terms(const Matrix& hp, const Vector& energies,
                            bool keep_resonant) {
  const int n = static_cast<int>(energies.size());
  const double scale = std::max(
      1e-300, energies.maxCoeff() - energies.minCoeff());
  const double tol = 1e-9 * scale;

  ChannelKTerms out;
  std::map<long long, int> class_of;  // rounded frequency -> class index
  auto classify = [&](double w1, double w2) -> int {
    if (std::abs(w1) <= tol && std::abs(w2) <= tol) {
      auto [it, inserted] = class_of.try_emplace(0, static_cast<int>(out.class_freq.size()));
      if (inserted) out.class_freq.push_back(0.0);
      return it->second;
    }
    if (!keep_resonant || std::abs(w1 + w2) > tol) return -1;
    const long long key = std::llround(w1 / tol);
    auto [it, inserted] = class_of.try_emplace(key, static_cast<int>(out.class_freq.size()));
    if (inserted) out.class_freq.push_back(w1);
    return it->second;
  };
  auto gap = [&](int j, int k) { return energies(j) - energies(k); };
  auto flat = [n](int a, int b) { return a * n + b; };
  auto push = [&](int row, int col, double coeff, double w1, double w2) {
    if (coeff == 0.0) return;
    const int cls = classify(w1, w2);
    if (cls >= 0) out.terms.push_back({row, col, coeff, cls});
  };

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int e = 0; e < n; ++e) {
        for (int x = 0; x < n; ++x)
          push(flat(a, x), flat(e, x), hp(a, b) * hp(b, e), gap(a, b), gap(b, e));
        for (int x = 0; x < n; ++x)
          push(flat(x, b), flat(x, e), hp(e, a) * hp(a, b), gap(a, b), gap(e, a));
        for (int d = 0; d < n; ++d) {
          const double coeff = hp(a, e) * hp(d, b);
          push(flat(a, b), flat(e, d), -coeff, gap(a, e), gap(d, b));
          push(flat(a, b), flat(e, d), -coeff, gap(d, b), gap(a, e));
        }
      }
  return out;
}

}  // namespace

EvolutionResult evolve_full(const EvolutionSetup& setup, const ComplexMatrix& rho0,
                            const std::vector<double>& times, bool keep_resonant) {
  setup.validate();
  const int n = setup.dim();
  validate_rho0(rho0, n);
  const int nn = n * n;

  const Matrix& r = setup.rotation;
  const ComplexMatrix rho_eig = r.transpose() * rho0 * r;
  ComplexVector v0(nn);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) v0(a * n + b) = rho_eig(a, b);

  std::vector<ChannelKTerms> kterms;
  kterms.reserve(setup.channels.size());
  for (const auto& ch : setup.channels)
    kterms.push_back(build_k_terms(r.transpose() * ch.op * r, setup.energies,
                                   keep_resonant));

  EvolutionResult out;
  out.times = times;
  out.rho.reserve(times.size());
  ComplexMatrix eq = ComplexMatrix::Zero(n, n);
  eq.diagonal() = rho_eig.diagonal();
  out.equilibrium = r * eq * r.transpose();

  for (double t : times) {
    ComplexMatrix k = ComplexMatrix::Zero(nn, nn);
    for (std::size_t i = 0; i < setup.channels.size(); ++i) {
      const auto& spec = setup.channels[i].spectrum;
      std::vector<C> jval(kterms[i].class_freq.size());
      for (std::size_t c = 0; c < jval.size(); ++c)
        jval[c] = (kterms[i].class_freq[c] == 0.0)
                      ? C(spec.decay_j00(t), 0.0)
                      : spec.decay_j_resonant(t, kterms[i].class_freq[c]);
      for (const auto& term : kterms[i].terms)
        k(term.row, term.col) += term.coeff * jval[term.cls];
    }

    ComplexVector y = expm(-k) * v0;
    ComplexMatrix rho_t(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        rho_t(a, b) = y(a * n + b) *
                      std::exp(-kI * ((setup.energies(a) - setup.energies(b)) * t));
    rho_t = r * rho_t * r.transpose();
    track_positivity(out, rho_t, t);
    out.rho.push_back(std::move(rho_t));
  }
  return out;
}

namespace {

struct ModeGrid {
  std::vector<double> omega;
  std::vector<double> amplitude;
};

// Log-spaced random-phase cosine modes; sum of amplitude^2 / 2 equals the
// total spectral weight, so var f(0) = S(0) = 1.
ModeGrid make_mode_grid(const NoiseSpectrum& spec, int n_modes) {
  ModeGrid g;
  g.omega.resize(n_modes);
  g.amplitude.resize(n_modes);
  const double ratio = std::pow(spec.omega_h / spec.omega_l, 1.0 / n_modes);
  for (int m = 0; m < n_modes; ++m) {
    const double lo = spec.omega_l * std::pow(ratio, m);
    const double hi = lo * ratio;
    g.omega[m] = std::sqrt(lo * hi);
    // bin carries the two-sided weight int 2 S0/omega = 2 S0 ln(hi/lo);
    // cos amplitude a with a^2/2 equal to that weight
    g.amplitude[m] = std::sqrt(4.0 * spec.s0() * std::log(hi / lo));
  }
  return g;
}

}  // namespace

EvolutionResult evolve_monte_carlo(const Matrix& h0,
                                   const std::vector<NoiseChannel>& channels,
                                   const ComplexMatrix& rho0,
                                   const std::vector<double>& times, int n_traj,
                                   std::uint64_t seed, int n_modes, double dt,
                                   int threads) {
  const int n = static_cast<int>(h0.rows());
  validate_rho0(rho0, n);
  if (n_traj < 1) throw std::invalid_argument("evolve_monte_carlo: n_traj >= 1");
  for (const auto& ch : channels) ch.validate();

  if (dt <= 0.0) {
    // Gershgorin-style bound on the total Hamiltonian scale.
    double scale = h0.cwiseAbs().rowwise().sum().maxCoeff();
    for (const auto& ch : channels)
      scale += 5.0 * ch.op.cwiseAbs().rowwise().sum().maxCoeff();
    dt = 0.1 / std::max(scale, 1e-300);
  }

  std::vector<ModeGrid> grids;
  grids.reserve(channels.size());
  for (const auto& ch : channels) grids.push_back(make_mode_grid(ch.spectrum, n_modes));

  const std::size_t nt = times.size();
  std::vector<std::vector<ComplexMatrix>> per_traj(n_traj);

  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex failure_mutex;

  auto run_one = [&](int traj) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * (traj + 1));
    std::uniform_real_distribution<double> uni(0.0, units::two_pi);
    std::vector<std::vector<double>> phases(channels.size());
    for (std::size_t i = 0; i < channels.size(); ++i) {
      phases[i].resize(grids[i].omega.size());
      for (auto& p : phases[i]) p = uni(rng);
    }

    auto noise_at = [&](std::size_t i, double t) {
      const auto& g = grids[i];
      double f = 0.0;
      for (std::size_t m = 0; m < g.omega.size(); ++m)
        f += g.amplitude[m] * std::cos(g.omega[m] * t + phases[i][m]);
      return f;
    };
    auto deriv = [&](double t, const ComplexMatrix& rho) -> ComplexMatrix {
      Matrix h = h0;
      for (std::size_t i = 0; i < channels.size(); ++i)
        h += noise_at(i, t) * channels[i].op;
      return -kI * (h * rho - rho * h);
    };

    std::vector<ComplexMatrix> snapshots;
    snapshots.reserve(nt);
    ComplexMatrix rho = rho0;
    double t = 0.0;
    for (std::size_t k = 0; k < nt; ++k) {
      const double target = times[k];
      while (t < target && !failed.load(std::memory_order_relaxed)) {
        const double step = std::min(dt, target - t);
        const ComplexMatrix k1 = deriv(t, rho);
        const ComplexMatrix k2 = deriv(t + 0.5 * step, rho + 0.5 * step * k1);
        const ComplexMatrix k3 = deriv(t + 0.5 * step, rho + 0.5 * step * k2);
        const ComplexMatrix k4 = deriv(t + step, rho + step * k3);
        rho += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t += step;
      }
      if (std::abs(rho.trace() - C(1.0, 0.0)) > 1e-6) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        failed = true;
        failure = "trace drift exceeded 1e-6; reduce the RK4 step";
        return;
      }
      snapshots.push_back(rho);
    }
    per_traj[traj] = std::move(snapshots);
  };

  int n_threads = threads;
  if (n_threads <= 0) {
    n_threads = static_cast<int>(std::thread::hardware_concurrency());
    if (n_threads <= 0) n_threads = 1;
  }
  n_threads = std::min(n_threads, n_traj);

  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (int w = 0; w < n_threads; ++w)
    pool.emplace_back([&] {
      for (int traj = next.fetch_add(1); traj < n_traj && !failed;
           traj = next.fetch_add(1))
        run_one(traj);
    });
  for (auto& th : pool) th.join();
  if (failed) throw std::runtime_error("evolve_monte_carlo: " + failure);

  EvolutionResult out;
  out.times = times;
  out.rho.assign(nt, ComplexMatrix::Zero(n, n));
  for (int traj = 0; traj < n_traj; ++traj)
    for (std::size_t k = 0; k < nt; ++k) out.rho[k] += per_traj[traj][k];
  for (std::size_t k = 0; k < nt; ++k) {
    out.rho[k] /= static_cast<double>(n_traj);
    track_positivity(out, out.rho[k], times[k]);
  }
  out.equilibrium = out.rho.empty() ? ComplexMatrix::Zero(n, n) : out.rho.back();
  return out;
}

double coherence_time(const EvolutionSetup& setup, const ComplexMatrix& rho0,
                      int a, int b, double threshold) {
  setup.validate();
  const int n = setup.dim();
  validate_rho0(rho0, n);
  if (a < 0 || b < 0 || a >= n || b >= n)
    throw std::invalid_argument("coherence_time: index out of range");
  if (!(threshold > 0.0 && threshold < 1.0))
    throw std::invalid_argument("coherence_time: threshold must be in (0, 1)");
  if (setup.channels.empty())
    throw std::invalid_argument("coherence_time: no noise channels");

  const Matrix& r = setup.rotation;
  const ComplexMatrix rho_eig = r.transpose() * rho0 * r;

  // Per-mode weights w_jk = R_aj rho~_jk R_bk; equilibrium is the j = k sum.
  C delta0 = 0.0;
  std::vector<double> weight;
  std::vector<Vector> gammas(setup.channels.size(), Vector(0));
  for (std::size_t i = 0; i < setup.channels.size(); ++i)
    gammas[i] = (r.transpose() * setup.channels[i].op * r).diagonal();

  struct Mode {
    double w;
    std::vector<double> gamma2;  // per channel
  };
  std::vector<Mode> modes;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      if (j == k) continue;
      const C wjk = r(a, j) * rho_eig(j, k) * r(b, k);
      if (std::abs(wjk) == 0.0) continue;
      delta0 += wjk;
      Mode m;
      m.w = std::abs(wjk);
      m.gamma2.resize(setup.channels.size());
      for (std::size_t i = 0; i < setup.channels.size(); ++i) {
        const double g = gammas[i](j) - gammas[i](k);
        m.gamma2[i] = g * g;
      }
      modes.push_back(std::move(m));
    }

  if (std::abs(delta0) < 1e-14)
    throw std::invalid_argument(
        "coherence_time: rho_ab(0) equals its equilibrium value");

  double wsum = 0.0;
  for (const auto& m : modes) wsum += m.w;

  auto envelope = [&](double t) {
    std::vector<double> j00(setup.channels.size());
    for (std::size_t i = 0; i < setup.channels.size(); ++i)
      j00[i] = setup.channels[i].spectrum.decay_j00(t);
    double acc = 0.0;
    for (const auto& m : modes) {
      double damp = 0.0;
      for (std::size_t i = 0; i < setup.channels.size(); ++i)
        damp += j00[i] * m.gamma2[i];
      acc += m.w * std::exp(-damp);
    }
    return acc / wsum;
  };

  double t_lo = 1.0 / setup.channels.front().spectrum.omega_h;
  double t_hi = 1.0 / setup.channels.front().spectrum.omega_l;
  for (const auto& ch : setup.channels) {
    t_lo = std::min(t_lo, 1.0 / ch.spectrum.omega_h);
    t_hi = std::max(t_hi, 1.0 / ch.spectrum.omega_l);
  }

  if (envelope(t_hi) > threshold) return kExceedsWindow;
  if (envelope(t_lo) <= threshold) return t_lo;

  // log-grid scan for the first bracket, then bisection to relative 1e-4
  const int per_decade = 16;
  const int steps = static_cast<int>(std::ceil(std::log10(t_hi / t_lo) * per_decade));
  double lo = t_lo, hi = t_hi;
  for (int i = 1; i <= steps; ++i) {
    const double t = t_lo * std::pow(t_hi / t_lo, static_cast<double>(i) / steps);
    if (envelope(t) <= threshold) {
      hi = t;
      break;
    }
    lo = t;
  }
  while ((hi - lo) > 1e-4 * hi) {
    const double mid = std::sqrt(lo * hi);
    if (envelope(mid) <= threshold)
      hi = mid;
    else
      lo = mid;
  }
  return std::sqrt(lo * hi);
}

}  // namespace ffq
