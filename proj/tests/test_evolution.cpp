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

#include <doctest.h>

#include <cmath>
#include <random>

#include "ffq/evolution.hpp"
#include "ffq/single_qubit.hpp"
#include "ffq/units.hpp"

using namespace ffq;
using units::microelectronvolt;

namespace {

ComplexMatrix plus_state_rho(int n, int a, int b) {
  ComplexVector psi = ComplexVector::Zero(n);
  psi(a) = 1.0 / std::sqrt(2.0);
  psi(b) = 1.0 / std::sqrt(2.0);
  return psi * psi.adjoint();
}

Matrix random_symmetric(int n, std::uint64_t seed, double scale) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = scale * g(rng);
  return Matrix(0.5 * (a + a.transpose()));
}

NoiseSpectrum test_spectrum() { return {units::kilohertz, units::hertz * 1e12}; }

}  // namespace

TEST_CASE("noiseless evolution is unitary") {
  const Matrix h0 = random_symmetric(4, 5, 1e9);
  EvolutionSetup setup = make_setup(h0, {});
  const ComplexMatrix rho0 = plus_state_rho(4, 0, 2);
  std::vector<double> times{0.0, 1e-9, 2e-8, 5e-7};
  auto res = evolve_secular(setup, rho0, times);
  for (std::size_t i = 0; i < times.size(); ++i) {
    const ComplexMatrix u = expm(Complex(0.0, -times[i]) * h0.cast<Complex>());
    const ComplexMatrix expected = u * rho0 * u.adjoint();
    CHECK((res.rho[i] - expected).cwiseAbs().maxCoeff() < 5e-12);
    CHECK(std::abs(res.rho[i].trace() - Complex(1.0)) < 1e-12);
  }
}

TEST_CASE("single qubit dephasing follows the Gaussian-log law") {
  const QubitBias bias =
      QubitBias::from_field_offset(1.0, 47.15 * microelectronvolt, 0.78);
  const auto spec = exact_spectrum(build_hamiltonian(bias));
  const double omega_n = 1.0 * microelectronvolt;

  Matrix h0 = Matrix::Zero(4, 4);
  h0.diagonal() << spec.energies[0], spec.energies[1], spec.energies[2],
      spec.energies[3];
  const Matrix zd = spec.states.transpose() * position_operator(bias) * spec.states;
  NoiseChannel channel{0.5 * omega_n * zd, test_spectrum()};

  EvolutionSetup setup = make_setup(h0, {channel});
  const ComplexMatrix rho0 = plus_state_rho(4, 0, 1);
  std::vector<double> times{1e-8, 1e-7, 1e-6, 5e-6};
  auto res = evolve_secular(setup, rho0, times);

  const double gamma = dephasing_rate(channel, setup.rotation, 0, 1);
  CHECK(std::abs(dephasing_rate(channel, setup.rotation, 1, 0) + gamma) < 1e-12);
  CHECK(dephasing_rate(channel, setup.rotation, 2, 2) == 0.0);

  for (std::size_t i = 0; i < times.size(); ++i) {
    const double expected =
        0.5 * std::exp(-channel.spectrum.decay_j00(times[i]) * gamma * gamma);
    CHECK(std::abs(res.rho[i](0, 1)) == doctest::Approx(expected).epsilon(1e-9));
    CHECK(std::abs(res.rho[i].trace() - Complex(1.0)) < 1e-10);
    CHECK((res.rho[i] - res.rho[i].adjoint()).cwiseAbs().maxCoeff() < 1e-10);
  }

  SUBCASE("at a sweet spot the coherence is flat") {
    // zero out the 0-1 dephasing by hand: channel diagonal equalized
    Matrix op = zd;
    op(1, 1) = op(0, 0);
    NoiseChannel flat{0.5 * omega_n * Matrix(0.5 * (op + op.transpose())),
                      test_spectrum()};
    EvolutionSetup s2 = make_setup(h0, {flat});
    auto r2 = evolve_secular(s2, rho0, times);
    for (std::size_t i = 0; i < times.size(); ++i)
      CHECK(std::abs(r2.rho[i](0, 1)) == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("term-filtered full propagator reproduces the secular one") {
  const Matrix h0 = random_symmetric(4, 17, 5e9);
  std::vector<NoiseChannel> channels{
      {0.3 * random_symmetric(4, 18, 1e9), test_spectrum()},
      {0.2 * random_symmetric(4, 19, 1e9), test_spectrum()}};
  EvolutionSetup setup = make_setup(h0, channels, PropagatorMode::full_k);

  const ComplexMatrix rho0 = plus_state_rho(4, 0, 1);
  std::vector<double> times{1e-8, 3e-7, 2e-6};
  auto fil = evolve_full(setup, rho0, times, /*keep_resonant=*/false);
  auto sec = evolve_secular(setup, rho0, times);
  for (std::size_t i = 0; i < times.size(); ++i)
    CHECK((fil.rho[i] - sec.rho[i]).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("full propagator conserves trace and hermiticity") {
  const QubitBias bias =
      QubitBias::from_field_offset(0.0, 47.15 * microelectronvolt, 0.771);
  const auto spec = exact_spectrum(build_hamiltonian(bias));
  Matrix h0 = Matrix::Zero(4, 4);
  h0.diagonal() << spec.energies[0], spec.energies[1], spec.energies[2],
      spec.energies[3];
  const Matrix zd = spec.states.transpose() * position_operator(bias) * spec.states;
  const double omega_n = 1.0 * microelectronvolt;
  EvolutionSetup setup = make_setup(h0, {{0.5 * omega_n * zd, test_spectrum()}},
                                    PropagatorMode::full_k);
  const ComplexMatrix rho0 = plus_state_rho(4, 0, 1);
  std::vector<double> times{1e-8, 1e-7, 1e-6, 1e-5};
  auto res = evolve_full(setup, rho0, times, true);
  for (std::size_t i = 0; i < times.size(); ++i) {
    CHECK(std::abs(res.rho[i].trace() - Complex(1.0)) < 1e-10);
    CHECK((res.rho[i] - res.rho[i].adjoint()).cwiseAbs().maxCoeff() < 1e-10);
  }
  // channels off -> identical to secular
  EvolutionSetup clean = make_setup(h0, {}, PropagatorMode::full_k);
  auto uf = evolve_full(clean, rho0, times, true);
  auto us = evolve_secular(clean, rho0, times);
  for (std::size_t i = 0; i < times.size(); ++i)
    CHECK((uf.rho[i] - us.rho[i]).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("monte carlo oracle, noiseless limit") {
  const Matrix h0 = random_symmetric(4, 23, 2e9);
  const ComplexMatrix rho0 = plus_state_rho(4, 1, 3);
  std::vector<double> times{0.0, 2e-9, 6e-9};
  auto res = evolve_monte_carlo(h0, {}, rho0, times, 3, 99u, 256, 2e-12);
  for (std::size_t i = 0; i < times.size(); ++i) {
    const ComplexMatrix u = expm(Complex(0.0, -times[i]) * h0.cast<Complex>());
    const ComplexMatrix expected = u * rho0 * u.adjoint();
    CHECK((res.rho[i] - expected).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("monte carlo determinism and envelope agreement") {
  // strongly noisy two-level system; envelope must match exp(-J Gamma^2)
  Matrix h0 = Matrix::Zero(2, 2);
  h0.diagonal() << -3e9, 3e9;
  Matrix z = Matrix::Zero(2, 2);
  z.diagonal() << 1.0, -1.0;
  const double omega_n = 40.0 * microelectronvolt;
  NoiseChannel ch{0.5 * omega_n * z, test_spectrum()};

  ComplexMatrix rho0 = plus_state_rho(2, 0, 1);
  std::vector<double> times;
  for (int i = 1; i <= 8; ++i) times.push_back(4e-9 * i);

  auto a = evolve_monte_carlo(h0, {ch}, rho0, times, 48, 7u, 128);
  auto b = evolve_monte_carlo(h0, {ch}, rho0, times, 48, 7u, 128, 0.0, 2);
  for (std::size_t i = 0; i < times.size(); ++i)
    CHECK((a.rho[i] - b.rho[i]).cwiseAbs().maxCoeff() == 0.0);  // deterministic

  const double gamma = omega_n;  // Gamma_01 for this channel
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double envelope =
        std::exp(-ch.spectrum.decay_j00(times[i]) * gamma * gamma);
    CHECK(std::abs(a.rho[i](0, 1)) ==
          doctest::Approx(0.5 * envelope).epsilon(0.2));
  }
}

TEST_CASE("coherence time extraction") {
  Matrix h0 = Matrix::Zero(2, 2);
  h0.diagonal() << -5e9, 5e9;
  Matrix z = Matrix::Zero(2, 2);
  z.diagonal() << 1.0, -1.0;
  const ComplexMatrix rho0 = plus_state_rho(2, 0, 1);

  SUBCASE("single known mode inverts the envelope") {
    const double omega_n = 1.0 * microelectronvolt;
    EvolutionSetup setup = make_setup(h0, {{0.5 * omega_n * z, test_spectrum()}});
    const double t2 = coherence_time(setup, rho0, 0, 1);
    REQUIRE(std::isfinite(t2));
    const double gamma = omega_n;
    const double val = std::exp(-test_spectrum().decay_j00(t2) * gamma * gamma);
    CHECK(val == doctest::Approx(std::exp(-1.0)).epsilon(1e-3));
  }

  SUBCASE("zero dephasing never crosses") {
    Matrix x(2, 2);
    x << 0, 1, 1, 0;  // purely off-diagonal channel has Gamma = 0
    EvolutionSetup setup = make_setup(h0, {{1e6 * x, test_spectrum()}});
    CHECK(coherence_time(setup, rho0, 0, 1) == kExceedsWindow);
  }

  SUBCASE("rejects an element already at equilibrium") {
    EvolutionSetup setup = make_setup(h0, {{1e6 * z, test_spectrum()}});
    ComplexMatrix diag = ComplexMatrix::Zero(2, 2);
    diag(0, 0) = 0.4;
    diag(1, 1) = 0.6;
    CHECK_THROWS_AS(coherence_time(setup, diag, 0, 1), std::invalid_argument);
  }

  SUBCASE("threshold validation") {
    EvolutionSetup setup = make_setup(h0, {{1e6 * z, test_spectrum()}});
    CHECK_THROWS_AS(coherence_time(setup, rho0, 0, 1, 1.5), std::invalid_argument);
  }
}

TEST_CASE("rho0 validation") {
  const Matrix h0 = random_symmetric(4, 31, 1e9);
  EvolutionSetup setup = make_setup(h0, {});
  ComplexMatrix bad = ComplexMatrix::Zero(4, 4);
  bad(0, 0) = 2.0;  // trace 2
  std::vector<double> times{1e-9};
  CHECK_THROWS_AS(evolve_secular(setup, bad, times), std::invalid_argument);
  bad = ComplexMatrix::Zero(4, 4);
  bad(0, 0) = 1.0;
  bad(0, 1) = Complex(0.0, 0.3);
  bad(1, 0) = Complex(0.0, 0.3);  // not Hermitian
  CHECK_THROWS_AS(evolve_full(setup, bad, times), std::invalid_argument);
}
