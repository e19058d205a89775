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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "photosub/fock.hpp"

namespace photosub {

struct QuadratureSample {
  double phase;  ///< LO phase in [0, pi)
  double value;
};

/// Single-mode homodyne record. Samples are grouped by phase in the order of
/// `phases`, `n_per_phase` each.
struct QuadratureDataset {
  std::vector<QuadratureSample> samples;
  std::vector<double> phases;
  int n_per_phase = 0;
  double efficiency = 1.0;
  std::uint64_t seed = 0;
  std::string state_label;

  /// Number of samples at each entry of `phases` (exact phase match).
  std::vector<std::size_t> counts_per_phase() const;
};

/// Tabulation used for inverse-CDF sampling.
struct SamplingGrid {
  double lo = -8.0;
  double hi = 8.0;
  int points = 4096;
};

/// count evenly spaced LO phases k pi / count, k = 0..count-1.
std::vector<double> phase_grid(int count);

/// Sub-seed for the phase at `index`, so phases can be drawn independently
/// and still reproduce the same dataset.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Draws from a density tabulated on a uniform grid by inverting the
/// piecewise-linear CDF (trapezoid rule). Negative density values from
/// roundoff are clipped to zero.
class InverseCdfSampler {
 public:
  InverseCdfSampler(std::vector<double> xs, std::span<const double> density);

  /// u in [0, 1).
  double quantile(double u) const;
  /// CDF at x (linear interpolation between nodes).
  double cdf(double x) const;

 private:
  std::vector<double> xs_;
  std::vector<double> cdf_;
};

/// Applies pure loss eta, then draws n_per_phase i.i.d. quadrature values per
/// phase from the homodyne marginal. Deterministic in (state, phases, n, eta, seed).
QuadratureDataset sample_quadratures(const DensityMatrix& state, std::span<const double> phases, int n_per_phase,
                                     double eta, std::uint64_t seed, const SamplingGrid& grid = {});

struct JointQuadratureSample {
  double phase_a;
  double phase_b;
  double x_a;
  double x_b;
};

struct JointQuadratureDataset {
  std::vector<JointQuadratureSample> samples;
  std::vector<std::pair<double, double>> phase_pairs;
  int n_per_pair = 0;
  double efficiency = 1.0;
  std::uint64_t seed = 0;
  std::string state_label;
};

/// LO settings with both detectors at the same phase (k pi / count).
std::vector<std::pair<double, double>> inphase_pairs(int count);
/// All count x count combinations of the phase grid.
std::vector<std::pair<double, double>> all_phase_pairs(int count);

/// Joint two-mode homodyne sampling. Equal loss eta on both modes, then the
/// joint marginal p(x_a, x_b) is tabulated at cell centres of a
/// grid_points^2 grid on [lo, hi]^2; a cell is drawn from the discrete
/// distribution and the sample placed uniformly within it.
JointQuadratureDataset sample_joint_quadratures(const TwoModeState& state,
                                                std::span<const std::pair<double, double>> phase_pairs,
                                                int n_per_pair, double eta, std::uint64_t seed,
                                                int grid_points = 1024, double lo = -8.0, double hi = 8.0);

/// Temporal mode f(t) = norm (kappa e^{-gamma |t - t0|} - gamma e^{-kappa |t - t0|}).
class ModeFunction {
 public:
  /// Throws kDegenerateParameters when kappa == gamma, kInvalidArgument for
  /// non-positive rates.
  ModeFunction(double gamma, double kappa, double t0, double norm = 1.0);

  /// Mode with norm chosen so that the integral of f^2 over t is one.
  static ModeFunction normalized(double gamma, double kappa, double t0);

  /// Integral of (kappa e^{-gamma|s|} - gamma e^{-kappa|s|})^2 over the real line:
  /// kappa^2/gamma - 4 gamma kappa / (gamma + kappa) + gamma^2/kappa.
  static double unnormalized_norm_squared(double gamma, double kappa);

  double operator()(double t) const;

  double gamma() const { return gamma_; }
  double kappa() const { return kappa_; }
  double t0() const { return t0_; }
  double norm() const { return norm_; }

 private:
  double gamma_;
  double kappa_;
  double t0_;
  double norm_;
};

double mode_function_eval(const ModeFunction& mf, double t);

struct WeightedQuadrature {
  double value = 0.0;
  /// Set when the record covers less than 3 / min(gamma, kappa) on either side of t0.
  bool span_too_short = false;
};

/// sum_i f(t_i) trace(t_i) dt over a uniformly sampled trace.
WeightedQuadrature weighted_quadrature(std::span<const double> trace, std::span<const double> timestamps,
                                       const ModeFunction& mf);

}  // namespace photosub
