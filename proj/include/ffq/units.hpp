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

namespace ffq::units {

// Internal convention: hbar = 1, every energy is stored as an angular
// frequency in rad/s, every time in seconds.

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

// e/h = 2.417989242e14 Hz/eV, so 1 ueV <-> 2*pi * 241.798924 MHz.
inline constexpr double microelectronvolt = two_pi * 2.417989242e8;

// Ordinary-frequency helpers (input values quoted in Hz-like units).
inline constexpr double hertz = two_pi;
inline constexpr double kilohertz = two_pi * 1e3;
inline constexpr double megahertz = two_pi * 1e6;
inline constexpr double gigahertz = two_pi * 1e9;

inline constexpr double nanometre = 1e-9;
inline constexpr double nanosecond = 1e-9;
inline constexpr double microsecond = 1e-6;

inline constexpr double to_uev(double w) { return w / microelectronvolt; }
inline constexpr double to_ghz(double w) { return w / gigahertz; }

}  // namespace ffq::units
