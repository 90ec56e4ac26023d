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

#include "ffq/cosint.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace ffq {

namespace {

constexpr double kPiHalf = 1.57079632679489661923;
constexpr double kEps = 1e-17;
constexpr int kMaxIter = 200;

struct CiSi {
  double ci;
  double si;
};

// Lentz continued fraction for E1(ix) e^{ix}; valid for x >~ 1.
CiSi cisi_fraction(double x) {
  using C = std::complex<double>;
  const C one(1.0, 0.0);
  C b(1.0, x);
  C c(1.0 / std::numeric_limits<double>::min(), 0.0);
  C d = one / b;
  C h = d;
  for (int i = 2; i <= kMaxIter; ++i) {
    const double a = -static_cast<double>(i - 1) * (i - 1);
    b += C(2.0, 0.0);
    d = one / (a * d + b);
    c = b + C(a, 0.0) / c;
    const C del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < kEps) break;
  }
  h *= C(std::cos(x), -std::sin(x));
  return {-h.real(), kPiHalf + h.imag()};
}

CiSi cisi_series(double x) {
  // Si term k: (-1)^{k-1} x^{2k-1} / ((2k-1)(2k-1)!)
  // Ci term k: (-1)^k     x^{2k}   / ((2k)(2k)!)
  double sumc = 0.0, sums = 0.0;
  double xk = x;    // x^(2k-1)
  double f = 1.0;   // (2k-1)!
  for (int k = 1; k <= kMaxIter; ++k) {
    if (k > 1) f *= (2.0 * k - 2.0) * (2.0 * k - 1.0);
    const double si_term = ((k % 2) ? 1.0 : -1.0) * xk / ((2 * k - 1) * f);
    const double ci_term = ((k % 2) ? -1.0 : 1.0) * xk * x / (2.0 * k * (f * 2.0 * k));
    sums += si_term;
    sumc += ci_term;
    if (std::abs(si_term) + std::abs(ci_term) <
        1e-18 * (std::abs(sums) + std::abs(sumc) + 1e-30))
      break;
    xk *= x * x;
  }
  return {euler_gamma + std::log(x) + sumc, sums};
}

CiSi cisi(double x) {
  if (x < 0) throw std::invalid_argument("cosine_integral: x must be positive");
  if (x == 0.0) return {-std::numeric_limits<double>::infinity(), 0.0};
  return (x > 2.0) ? cisi_fraction(x) : cisi_series(x);
}

}  // namespace

double cosine_integral(double x) { return cisi(x).ci; }

double sine_integral(double x) {
  if (x < 0) return -sine_integral(-x);
  return cisi(x).si;
}

}  // namespace ffq
