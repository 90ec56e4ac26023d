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

namespace ffq {

inline constexpr double euler_gamma = 0.57721566490153286061;

/// Cosine integral Ci(x) = gamma + ln x + int_0^x (cos t - 1)/t dt, x > 0.
///
/// Power series below x = 2, Lentz continued fraction for E1(ix) above.
/// Absolute accuracy ~1e-14 over the full range.
double cosine_integral(double x);

/// Sine integral Si(x) = int_0^x sin(t)/t dt, x >= 0.
double sine_integral(double x);

}  // namespace ffq
