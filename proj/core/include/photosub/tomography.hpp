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

#include <optional>
#include <vector>

#include "photosub/fock.hpp"
#include "photosub/homodyne.hpp"

namespace photosub {

struct MaxLikConfig {
  int dim = 10;
  int max_iterations = 2000;
  /// Stop once max |rho_{k+1} - rho_k| elementwise falls below this.
  double tolerance = 1e-7;
};

struct MaxLikResult {
  DensityMatrix state{CMatrix::Identity(1, 1)};
  int iterations = 0;
  double final_delta = 0.0;
  double log_likelihood = 0.0;
  bool converged = false;
  /// Fewer than two distinct LO phases: only the measured marginal is constrained.
  bool under_determined = false;
  /// Steps where plain R rho R would have lowered the likelihood and a
  /// diluted step was taken instead.
  int diluted_steps = 0;
  /// Log-likelihood of the start point followed by every accepted iterate.
  std::vector<double> log_likelihood_history;
};

/// sum_j log <x_j, theta_j| rho |x_j, theta_j>.
double log_likelihood(const DensityMatrix& state, const QuadratureDataset& data);

/// Iterative maximum-likelihood reconstruction with rank-one quadrature
/// projectors, one per sample:
///   rho <- N[R rho R],  R = sum_j Pi_j / Tr(Pi_j rho),
/// starting from the maximally mixed state. When a plain step would lower the
/// likelihood the step is diluted, rho <- N[(I + eps R') rho (I + eps R')]
/// with R' = R / #samples and eps halved until the likelihood does not drop.
/// No efficiency correction is applied.
MaxLikResult maxlik_reconstruct(const QuadratureDataset& data, const MaxLikConfig& cfg);

struct TwoModeMaxLikConfig {
  int dim_a = 4;
  int dim_b = 4;
  int max_iterations = 2000;
  double tolerance = 1e-7;
};

struct TwoModeMaxLikResult {
  TwoModeState state{1, 1, CMatrix::Identity(1, 1)};
  int iterations = 0;
  double final_delta = 0.0;
  double log_likelihood = 0.0;
  bool converged = false;
  int diluted_steps = 0;
  std::vector<double> log_likelihood_history;
};

/// Full two-mode reconstruction from joint samples at arbitrary phase pairs.
/// Cost per iteration is #samples * (dim_a dim_b)^2, so intended for small dims.
TwoModeMaxLikResult maxlik_reconstruct_two_mode(const JointQuadratureDataset& data, const TwoModeMaxLikConfig& cfg);

struct InphaseReconstruction {
  TwoModeState state{1, 1, CMatrix::Identity(1, 1)};
  MaxLikResult minus_mode;
  double plus_variance = 0.0;
  double plus_sigma = 0.0;
};

/// Two-mode reconstruction from in-phase joint data assuming the '+' mode is
/// vacuum. Rotates samples to x_-/+ = (x_a -/+ x_b)/sqrt 2, checks the '+'
/// variance against 0.5 at 3 sigma (throws PlusModeNotVacuum otherwise),
/// reconstructs '-' with maxlik_reconstruct and maps ('-' (x) vacuum) back
/// through minus_plus_inverse. Output dims are cfg.dim x cfg.dim.
InphaseReconstruction two_mode_inphase_reconstruct(const JointQuadratureDataset& data, const MaxLikConfig& cfg);

/// S†(r) rho S(r): the state expressed in the squeezed Fock basis S(r)|k>.
DensityMatrix squeezed_basis(const DensityMatrix& state, double r);

/// Population of span{S(r)|0>, S(r)|1>}.
double squeezed_subspace_weight(const DensityMatrix& state, double r);

/// Golden-section search on [lo, hi] for the r maximizing the subspace weight.
double fit_squeezed_basis(const DensityMatrix& state, double lo = 0.0, double hi = 1.0);

/// State read as cos(theta/2) S(r)|0> + e^{i phi} sin(theta/2) S(r)|1>.
struct QubitParams {
  double theta = 0.0;  ///< [0, pi]
  double phi = 0.0;    ///< [0, 2 pi), phase of the |1><0| coherence
  double r = 0.0;
  double purity = 0.0;  ///< of the full state
  double subspace_weight = 0.0;
  /// theta and phi are only extracted when subspace_weight > 0.5.
  bool has_angles = false;
};

QubitParams qubit_params(const DensityMatrix& state, std::optional<double> r = std::nullopt);

}  // namespace photosub
