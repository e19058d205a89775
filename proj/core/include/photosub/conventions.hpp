// Copyright 2026 The photosub Authors
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

// Units: hbar = 1, x = (a + a†)/sqrt(2), p = (a - a†)/(i sqrt(2)).
// Vacuum quadrature variance is 1/2 and the vacuum Wigner peak is 1/pi.
// Squeezing in dB is -10 log10(Var / Var_vac); a pure squeezed vacuum with
// parameter r sits at (20 log10 e) r dB.

#include <numbers>

namespace photosub {

inline constexpr double kVacuumVariance = 0.5;

/// dB per unit of squeezing parameter, 20 log10(e).
inline constexpr double kDbPerNeper = 20.0 * std::numbers::log10e;

double db_to_r(double db);
double r_to_db(double r);

/// Quadrature variance expressed in dB relative to vacuum (positive = squeezed).
double to_db(double variance);

}  // namespace photosub
