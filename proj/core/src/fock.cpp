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

#include "photosub/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "photosub/error.hpp"

namespace photosub {

namespace {

void require_square(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorKind::kInvalidDimension,
                std::string(what) + " must be a non-empty square matrix, got " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()));
  }
}

void require_dim(int dim, int min_dim, const char* what) {
  if (dim < min_dim) {
    throw Error(ErrorKind::kInvalidDimension,
                std::string(what) + ": dimension " + std::to_string(dim) + " < " + std::to_string(min_dim));
  }
}

ValidationReport validate_matrix(const CMatrix& rho) {
  ValidationReport report;
  report.hermiticity_error = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  report.trace_error = std::abs(rho.trace() - Complex(1.0, 0.0));
  const CMatrix herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm, Eigen::EigenvaluesOnly);
  report.min_eigenvalue = solver.eigenvalues().minCoeff();
  return report;
}

CMatrix normalize_matrix(const CMatrix& rho) {
  const double tr = rho.trace().real();
  if (!(tr > 0.0)) {
    throw Error(ErrorKind::kNotPositive, "cannot normalize a state with trace " + std::to_string(tr));
  }
  return rho / tr;
}

CMatrix repair_matrix(const CMatrix& rho) {
  const CMatrix herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm);
  RVector evals = solver.eigenvalues();
  const double min_eval = evals.minCoeff();
  const double scale = std::max(1.0, std::abs(herm.trace().real()));
  if (min_eval < -StateTolerance::kNegativeEigenvalue * scale) {
    throw Error(ErrorKind::kNotPositive, "eigenvalue " + std::to_string(min_eval) + " below PSD repair threshold");
  }
  evals = evals.cwiseMax(0.0);
  const CMatrix& vecs = solver.eigenvectors();
  CMatrix repaired = vecs * evals.cast<Complex>().asDiagonal() * vecs.adjoint();
  return normalize_matrix(repaired);
}

}  // namespace

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(CMatrix elements) : rho_(std::move(elements)) {
  require_square(rho_, "density matrix");
}

DensityMatrix DensityMatrix::from_ket(const CVector& ket) {
  const double norm2 = ket.squaredNorm();
  if (ket.size() == 0 || !(norm2 > 0.0)) {
    throw Error(ErrorKind::kInvalidDimension, "ket must be non-empty with non-zero norm");
  }
  return DensityMatrix(ket * ket.adjoint() / norm2);
}

DensityMatrix DensityMatrix::normalized() const { return DensityMatrix(normalize_matrix(rho_)); }

DensityMatrix DensityMatrix::repair_psd() const { return DensityMatrix(repair_matrix(rho_)); }

DensityMatrix DensityMatrix::resized(int dim) const {
  require_dim(dim, 1, "resized");
  CMatrix out = CMatrix::Zero(dim, dim);
  const int keep = std::min(dim, this->dim());
  out.topLeftCorner(keep, keep) = rho_.topLeftCorner(keep, keep);
  return DensityMatrix(std::move(out));
}

ValidationReport DensityMatrix::validate() const { return validate_matrix(rho_); }

// ---------------------------------------------------------------------------
// TwoModeState

TwoModeState::TwoModeState(int dim_a, int dim_b, CMatrix elements)
    : dim_a_(dim_a), dim_b_(dim_b), rho_(std::move(elements)) {
  require_dim(dim_a, 1, "two-mode state (mode A)");
  require_dim(dim_b, 1, "two-mode state (mode B)");
  require_square(rho_, "two-mode density matrix");
  if (rho_.rows() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    throw Error(ErrorKind::kDimensionMismatch, "two-mode matrix size " + std::to_string(rho_.rows()) +
                                                   " != " + std::to_string(dim_a) + "*" + std::to_string(dim_b));
  }
}

TwoModeState TwoModeState::from_ket(int dim_a, int dim_b, const CVector& ket) {
  const double norm2 = ket.squaredNorm();
  if (!(norm2 > 0.0)) {
    throw Error(ErrorKind::kInvalidDimension, "ket must have non-zero norm");
  }
  return TwoModeState(dim_a, dim_b, ket * ket.adjoint() / norm2);
}

TwoModeState TwoModeState::normalized() const { return TwoModeState(dim_a_, dim_b_, normalize_matrix(rho_)); }

TwoModeState TwoModeState::repair_psd() const { return TwoModeState(dim_a_, dim_b_, repair_matrix(rho_)); }

TwoModeState TwoModeState::cropped(int dim_a, int dim_b) const {
  require_dim(dim_a, 1, "cropped (mode A)");
  require_dim(dim_b, 1, "cropped (mode B)");
  if (dim_a > dim_a_ || dim_b > dim_b_) {
    throw Error(ErrorKind::kDimensionMismatch, "cropped dimensions must not exceed the current ones");
  }
  CMatrix out(dim_a * dim_b, dim_a * dim_b);
  for (int a = 0; a < dim_a; ++a) {
    for (int b = 0; b < dim_b; ++b) {
      for (int a2 = 0; a2 < dim_a; ++a2) {
        for (int b2 = 0; b2 < dim_b; ++b2) {
          out(index(a, b, dim_b), index(a2, b2, dim_b)) = rho_(index(a, b, dim_b_), index(a2, b2, dim_b_));
        }
      }
    }
  }
  return TwoModeState(dim_a, dim_b, normalize_matrix(out));
}

ValidationReport TwoModeState::validate() const { return validate_matrix(rho_); }

// ---------------------------------------------------------------------------
// States and operators

DensityMatrix vacuum(int dim) { return fock(0, dim); }

DensityMatrix fock(int n, int dim) {
  require_dim(dim, 1, "fock");
  if (n < 0 || n >= dim) {
    throw Error(ErrorKind::kTruncationViolation,
                "Fock level " + std::to_string(n) + " outside truncation dim " + std::to_string(dim));
  }
  CMatrix rho = CMatrix::Zero(dim, dim);
  rho(n, n) = 1.0;
  return DensityMatrix(std::move(rho));
}

CMatrix annihilation(int dim) {
  require_dim(dim, 1, "annihilation");
  CMatrix a = CMatrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

CMatrix creation(int dim) { return annihilation(dim).adjoint(); }

CMatrix number_operator(int dim) {
  require_dim(dim, 1, "number_operator");
  CMatrix n = CMatrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) n(k, k) = static_cast<double>(k);
  return n;
}

CMatrix quadrature_operator(double theta, int dim) {
  const CMatrix a = annihilation(dim);
  const Complex phase = std::polar(1.0, theta);
  return (a * std::conj(phase) + a.adjoint() * phase) / std::sqrt(2.0);
}

CMatrix squeeze_operator(double r, int dim) {
  require_dim(dim, 1, "squeeze_operator");
  if (r == 0.0) return CMatrix::Identity(dim, dim);
  const CMatrix a = annihilation(dim);
  const CMatrix ad = a.adjoint();
  const CMatrix generator = (0.5 * r) * (ad * ad - a * a);
  return generator.exp();
}

CMatrix displacement_operator(Complex beta, int dim) {
  require_dim(dim, 1, "displacement_operator");
  if (beta == Complex(0.0, 0.0)) return CMatrix::Identity(dim, dim);
  const CMatrix a = annihilation(dim);
  const CMatrix generator = beta * a.adjoint() - std::conj(beta) * a;
  return generator.exp();
}

CMatrix beamsplitter(double transmissivity, int dim_a, int dim_b) {
  require_dim(dim_a, 1, "beamsplitter (mode A)");
  require_dim(dim_b, 1, "beamsplitter (mode B)");
  if (!(transmissivity >= 0.0 && transmissivity <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "beamsplitter transmissivity must lie in [0, 1]");
  }
  const int dim = dim_a * dim_b;
  if (transmissivity == 1.0) return CMatrix::Identity(dim, dim);
  const double theta = std::acos(std::sqrt(transmissivity));
  const CMatrix a = Eigen::kroneckerProduct(annihilation(dim_a), CMatrix::Identity(dim_b, dim_b)).eval();
  const CMatrix b = Eigen::kroneckerProduct(CMatrix::Identity(dim_a, dim_a), annihilation(dim_b)).eval();
  const CMatrix generator = theta * (a.adjoint() * b - a * b.adjoint());
  return generator.exp();
}

CVector coherent_ket(Complex alpha, int dim) {
  require_dim(dim, 1, "coherent_ket");
  CVector ket(dim);
  ket(0) = std::exp(-0.5 * std::norm(alpha));
  for (int n = 1; n < dim; ++n) ket(n) = ket(n - 1) * alpha / std::sqrt(static_cast<double>(n));
  return ket;
}

int displaced_working_dim(Complex alpha, int count) {
  const double amp = std::abs(alpha);
  return count + static_cast<int>(std::ceil(amp * amp + 10.0 * amp)) + 30;
}

CMatrix displaced_fock_columns(Complex alpha, int count, int working_dim) {
  require_dim(count, 1, "displaced_fock_columns");
  if (working_dim < count) {
    throw Error(ErrorKind::kInvalidDimension, "working dimension smaller than column count");
  }
  CMatrix cols(working_dim, count);
  cols.col(0) = coherent_ket(alpha, working_dim);
  const Complex shift = std::conj(alpha);
  for (int n = 1; n < count; ++n) {
    const auto prev = cols.col(n - 1);
    auto next = cols.col(n);
    // (a† - conj(alpha)) prev; the top component of a† prev falls off the truncation.
    next(0) = -shift * prev(0);
    for (int k = 1; k < working_dim; ++k) {
      next(k) = std::sqrt(static_cast<double>(k)) * prev(k - 1) - shift * prev(k);
    }
    next /= std::sqrt(static_cast<double>(n));
  }
  return cols;
}

TwoModeState tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return TwoModeState(a.dim(), b.dim(), Eigen::kroneckerProduct(a.matrix(), b.matrix()).eval());
}

DensityMatrix partial_trace(const TwoModeState& state, Mode keep) {
  const int da = state.dim_a();
  const int db = state.dim_b();
  const CMatrix& rho = state.matrix();
  if (keep == Mode::kA) {
    CMatrix out = CMatrix::Zero(da, da);
    for (int a = 0; a < da; ++a)
      for (int a2 = 0; a2 < da; ++a2)
        for (int b = 0; b < db; ++b) out(a, a2) += rho(a * db + b, a2 * db + b);
    return DensityMatrix(std::move(out));
  }
  CMatrix out = CMatrix::Zero(db, db);
  for (int b = 0; b < db; ++b)
    for (int b2 = 0; b2 < db; ++b2)
      for (int a = 0; a < da; ++a) out(b, b2) += rho(a * db + b, a * db + b2);
  return DensityMatrix(std::move(out));
}

CMatrix partial_transpose(const TwoModeState& state) {
  const int da = state.dim_a();
  const int db = state.dim_b();
  const CMatrix& rho = state.matrix();
  CMatrix out(rho.rows(), rho.cols());
  for (int a = 0; a < da; ++a)
    for (int b = 0; b < db; ++b)
      for (int a2 = 0; a2 < da; ++a2)
        for (int b2 = 0; b2 < db; ++b2) out(a * db + b, a2 * db + b2) = rho(a * db + b2, a2 * db + b);
  return out;
}

DensityMatrix apply_unitary(const DensityMatrix& state, const CMatrix& unitary) {
  if (unitary.rows() != state.dim() || unitary.cols() != state.dim()) {
    throw Error(ErrorKind::kDimensionMismatch, "unitary does not match state dimension");
  }
  return DensityMatrix(unitary * state.matrix() * unitary.adjoint());
}

TwoModeState apply_unitary(const TwoModeState& state, const CMatrix& unitary) {
  if (unitary.rows() != state.dim() || unitary.cols() != state.dim()) {
    throw Error(ErrorKind::kDimensionMismatch, "unitary does not match two-mode state dimension");
  }
  return TwoModeState(state.dim_a(), state.dim_b(), unitary * state.matrix() * unitary.adjoint());
}

Complex expectation(const DensityMatrix& state, const CMatrix& op) {
  if (op.rows() != state.dim() || op.cols() != state.dim()) {
    throw Error(ErrorKind::kDimensionMismatch, "operator does not match state dimension");
  }
  return (state.matrix() * op).trace();
}

}  // namespace photosub
