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

#include "photosub/phase_space.hpp"

#include <cmath>
#include <numbers>

#include "photosub/error.hpp"

namespace photosub {

double WignerGrid::integral() const {
  if (xs.size() < 2 || ps.size() < 2) return 0.0;
  const double dx = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
  const double dp = (ps.back() - ps.front()) / static_cast<double>(ps.size() - 1);
  return values.sum() * dx * dp;
}

RVector oscillator_wavefunctions(double x, int dim) {
  RVector psi(dim);
  psi(0) = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  if (dim > 1) psi(1) = std::sqrt(2.0) * x * psi(0);
  for (int n = 2; n < dim; ++n) {
    psi(n) = std::sqrt(2.0 / n) * x * psi(n - 1) - std::sqrt((n - 1.0) / n) * psi(n - 2);
  }
  return psi;
}

double wigner(const DensityMatrix& state, double x, double p) {
  const int dim = state.dim();
  const Complex alpha(x / std::sqrt(2.0), p / std::sqrt(2.0));
  const int working = displaced_working_dim(alpha, dim);
  // Row k of `cols` holds conj(<m|D(alpha)|k>) for m < dim.
  const CMatrix cols = displaced_fock_columns(-alpha, dim, working);
  const CMatrix projected = cols * state.matrix();
  double sum = 0.0;
  for (int k = 0; k < working; ++k) {
    const double diag = projected.row(k).dot(cols.row(k)).real();
    sum += (k % 2 == 0) ? diag : -diag;
  }
  return sum / std::numbers::pi;
}

WignerGrid wigner_grid(const DensityMatrix& state, std::span<const double> xs, std::span<const double> ps) {
  WignerGrid grid;
  grid.xs.assign(xs.begin(), xs.end());
  grid.ps.assign(ps.begin(), ps.end());
  grid.values.resize(static_cast<Eigen::Index>(ps.size()), static_cast<Eigen::Index>(xs.size()));
  for (std::size_t ip = 0; ip < ps.size(); ++ip) {
    for (std::size_t ix = 0; ix < xs.size(); ++ix) {
      grid.values(static_cast<Eigen::Index>(ip), static_cast<Eigen::Index>(ix)) = wigner(state, xs[ix], ps[ip]);
    }
  }
  return grid;
}

std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 2) throw Error(ErrorKind::kInvalidArgument, "linspace needs at least two points");
  std::vector<double> out(static_cast<std::size_t>(count));
  const double step = (hi - lo) / (count - 1);
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = lo + step * i;
  out.back() = hi;
  return out;
}

double quadrature_pdf(const DensityMatrix& state, double theta, double x) {
  const int dim = state.dim();
  const RVector psi = oscillator_wavefunctions(x, dim);
  CVector v(dim);
  for (int n = 0; n < dim; ++n) v(n) = std::polar(psi(n), theta * n);
  return (v.adjoint() * state.matrix() * v).value().real();
}

RVector quadrature_pdf(const DensityMatrix& state, double theta, std::span<const double> xs) {
  RVector out(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) out(static_cast<Eigen::Index>(i)) = quadrature_pdf(state, theta, xs[i]);
  return out;
}

}  // namespace photosub
