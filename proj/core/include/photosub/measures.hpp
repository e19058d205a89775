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

#include "photosub/fock.hpp"

namespace photosub {

/// Tr rho^2.
double purity(const DensityMatrix& state);
double purity(const TwoModeState& state);

/// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2; reduces to
/// |<psi|phi>|^2 for pure states. Dimensions must match.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);
double fidelity(const TwoModeState& rho, const TwoModeState& sigma);

/// Fidelity of rho with the pure state |psi>, <psi|rho|psi> / <psi|psi>.
double fidelity_with_ket(const DensityMatrix& rho, const CVector& ket);

/// (1/2) || rho - sigma ||_1.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);
double trace_distance(const TwoModeState& rho, const TwoModeState& sigma);

/// Trace norm of the partial transpose.
double negativity_trace_norm(const TwoModeState& state);

/// log2 || rho^{T_B} ||_1, so a maximally entangled qubit pair gives 1.
double log_negativity(const TwoModeState& state);

double quadrature_mean(const DensityMatrix& state, double theta);

/// Variance of x cos(theta) + p sin(theta). theta = pi/2 is the p quadrature,
/// the squeezed axis for real r > 0.
double quadrature_variance(const DensityMatrix& state, double theta);

/// Variance of (x_theta,A + sign * x_theta,B) / sqrt(2) evaluated on the joint
/// state; sign = -1 gives the '-' combination mode.
double joint_quadrature_variance(const TwoModeState& state, double theta, int sign);

}  // namespace photosub
