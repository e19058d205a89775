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

#include "photosub/measures.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include "photosub/error.hpp"

namespace photosub {

namespace {

CMatrix psd_sqrt(const CMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (rho + rho.adjoint()));
  const RVector roots = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return solver.eigenvectors() * roots.cast<Complex>().asDiagonal() * solver.eigenvectors().adjoint();
}

double uhlmann(const CMatrix& rho, const CMatrix& sigma) {
  const CMatrix root = psd_sqrt(rho);
  const CMatrix inner = root * sigma * root;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (inner + inner.adjoint()), Eigen::EigenvaluesOnly);
  const double sum = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return std::clamp(sum * sum, 0.0, 1.0);
}

double hermitian_trace_norm(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().sum();
}

// <m|x_theta^2|n> for m, n < dim, exact (the product is formed one level higher).
CMatrix quadrature_square(double theta, int dim) {
  const CMatrix q = quadrature_operator(theta, dim + 1);
  return (q * q).topLeftCorner(dim, dim);
}

void require_same(int d1, int d2) {
  if (d1 != d2) throw Error(ErrorKind::kDimensionMismatch, "states have different dimensions");
}

}  // namespace

double purity(const DensityMatrix& state) { return (state.matrix() * state.matrix()).trace().real(); }

double purity(const TwoModeState& state) { return (state.matrix() * state.matrix()).trace().real(); }

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same(rho.dim(), sigma.dim());
  return uhlmann(rho.matrix(), sigma.matrix());
}

double fidelity(const TwoModeState& rho, const TwoModeState& sigma) {
  require_same(rho.dim_a(), sigma.dim_a());
  require_same(rho.dim_b(), sigma.dim_b());
  return uhlmann(rho.matrix(), sigma.matrix());
}

double fidelity_with_ket(const DensityMatrix& rho, const CVector& ket) {
  require_same(rho.dim(), static_cast<int>(ket.size()));
  return (ket.adjoint() * rho.matrix() * ket).value().real() / ket.squaredNorm();
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same(rho.dim(), sigma.dim());
  return 0.5 * hermitian_trace_norm(rho.matrix() - sigma.matrix());
}

double trace_distance(const TwoModeState& rho, const TwoModeState& sigma) {
  require_same(rho.dim_a(), sigma.dim_a());
  require_same(rho.dim_b(), sigma.dim_b());
  return 0.5 * hermitian_trace_norm(rho.matrix() - sigma.matrix());
}

double negativity_trace_norm(const TwoModeState& state) { return hermitian_trace_norm(partial_transpose(state)); }

double log_negativity(const TwoModeState& state) {
  // Clamp tiny negative values from roundoff on separable states.
  return std::max(0.0, std::log2(negativity_trace_norm(state)));
}

double quadrature_mean(const DensityMatrix& state, double theta) {
  return expectation(state, quadrature_operator(theta, state.dim())).real();
}

double quadrature_variance(const DensityMatrix& state, double theta) {
  const double mean = quadrature_mean(state, theta);
  return expectation(state, quadrature_square(theta, state.dim())).real() - mean * mean;
}

double joint_quadrature_variance(const TwoModeState& state, double theta, int sign) {
  const int da = state.dim_a();
  const int db = state.dim_b();
  const CMatrix ia = CMatrix::Identity(da, da);
  const CMatrix ib = CMatrix::Identity(db, db);
  const CMatrix qa = Eigen::kroneckerProduct(quadrature_operator(theta, da), ib).eval();
  const CMatrix qb = Eigen::kroneckerProduct(ia, quadrature_operator(theta, db)).eval();
  const CMatrix qa2 = Eigen::kroneckerProduct(quadrature_square(theta, da), ib).eval();
  const CMatrix qb2 = Eigen::kroneckerProduct(ia, quadrature_square(theta, db)).eval();
  const double s = static_cast<double>(sign);
  // ((qa + s qb)/sqrt2)^2 = (qa^2 + qb^2 + 2 s qa qb) / 2; qa and qb commute.
  const CMatrix q = (qa + s * qb) / std::sqrt(2.0);
  const CMatrix q2 = 0.5 * (qa2 + qb2 + 2.0 * s * qa * qb);
  const double mean = (state.matrix() * q).trace().real();
  return (state.matrix() * q2).trace().real() - mean * mean;
}

}  // namespace photosub
