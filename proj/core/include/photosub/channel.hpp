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

#include <span>
#include <vector>

#include "photosub/fock.hpp"

namespace photosub {

/// Linear map acting on one mode, stored as a dim^2 x dim^2 superoperator on
/// the row-major vectorization: out(a, a') = sum S(a*dim + a', x*dim + x') rho(x, x').
/// Trace-decreasing maps (conditioning on a detector outcome) are allowed;
/// their output trace is the outcome probability.
class LocalMap {
 public:
  LocalMap(int dim, CMatrix superoperator);

  static LocalMap identity(int dim);

  /// Phi(rho) = sum_{k,l} weights(l, k) K_k rho K_l†. With weights = I this is
  /// the Kraus form; with weights(l, k) = <l|E|k> it is the signal-side map of
  /// a measurement with effect E on an ancilla that received the Kraus index.
  static LocalMap from_kraus(std::span<const CMatrix> kraus, const CMatrix& weights);

  int dim() const { return dim_; }
  const CMatrix& superoperator() const { return superop_; }

  DensityMatrix apply(const DensityMatrix& state) const;
  TwoModeState apply(const TwoModeState& state, Mode mode) const;

  LocalMap operator-(const LocalMap& other) const;

 private:
  int dim_;
  CMatrix superop_;
};

/// Kraus operators of the beamsplitter coupling to a vacuum ancilla with
/// transmissivity eta. K_k removes k photons into the ancilla:
/// K_k = sum_n (-1)^k sqrt(C(n,k) eta^{n-k} (1-eta)^k) |n-k><n|.
/// The (-1)^k follows the beamsplitter() sign convention.
std::vector<CMatrix> beamsplitter_kraus(double transmissivity, int dim);

/// Bosonic pure-loss channel (ancilla traced out).
LocalMap pure_loss_map(double eta, int dim);

}  // namespace photosub
