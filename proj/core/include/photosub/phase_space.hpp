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

/// Wigner function sampled on a rectangular grid. values(ip, ix) holds W(xs[ix], ps[ip]).
struct WignerGrid {
  std::vector<double> xs;
  std::vector<double> ps;
  RMatrix values;

  /// Riemann sum of W dx dp assuming uniform spacing.
  double integral() const;
  double min_value() const { return values.minCoeff(); }
};

/// Harmonic-oscillator eigenfunctions psi_0(x) .. psi_{dim-1}(x) in the
/// x = (a + a†)/sqrt(2) convention.
RVector oscillator_wavefunctions(double x, int dim);

/// W(x, p) = (1/pi) Tr[rho D(alpha) Parity D†(alpha)], alpha = (x + i p)/sqrt(2).
/// Displaced Fock states are built on an enlarged working space so the value
/// carries no truncation error beyond that of rho itself.
double wigner(const DensityMatrix& state, double x, double p);

WignerGrid wigner_grid(const DensityMatrix& state, std::span<const double> xs, std::span<const double> ps);

/// `count` evenly spaced points spanning [lo, hi] inclusive.
std::vector<double> linspace(double lo, double hi, int count);

/// Homodyne marginal p_theta(x) = sum rho_mn e^{i(n-m) theta} psi_m(x) psi_n(x).
double quadrature_pdf(const DensityMatrix& state, double theta, double x);

/// The same marginal over many x values at one phase.
RVector quadrature_pdf(const DensityMatrix& state, double theta, std::span<const double> xs);

}  // namespace photosub
