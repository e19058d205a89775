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

// Truncated Fock-space states and operators.
//
// A single mode is represented on the basis |0>, ..., |dim-1>. Two-mode
// operators and states use the mode-A-major product basis: the row/column
// index of |a>_A |b>_B is a * dimB + b. Truncation is always an explicit
// caller choice; nothing here grows a dimension on its own.

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace photosub {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

enum class Mode { kA, kB };

/// Numerical tolerances shared by the state invariants.
struct StateTolerance {
  static constexpr double kHermitian = 1e-10;
  static constexpr double kTrace = 1e-9;
  static constexpr double kNegativeEigenvalue = 1e-9;
};

struct ValidationReport {
  double hermiticity_error = 0.0;  ///< max |rho - rho†| elementwise
  double trace_error = 0.0;        ///< |Tr rho - 1|
  double min_eigenvalue = 0.0;

  bool ok() const {
    return hermiticity_error <= StateTolerance::kHermitian && trace_error <= StateTolerance::kTrace &&
           min_eigenvalue >= -StateTolerance::kNegativeEigenvalue;
  }
};

/// Single-mode density matrix over a truncated Fock basis.
///
/// The constructor only checks shape; `normalized()` and `repair_psd()` are
/// where the trace and positivity invariants are established. States coming
/// out of conditioning channels are unnormalized until the caller normalizes.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix elements);

  /// |psi><psi| / <psi|psi>.
  static DensityMatrix from_ket(const CVector& ket);

  int dim() const { return static_cast<int>(rho_.rows()); }
  const CMatrix& matrix() const { return rho_; }
  Complex operator()(int row, int col) const { return rho_(row, col); }

  double trace() const { return rho_.trace().real(); }

  /// Divides by the trace. Throws kNotPositive for a non-positive trace.
  DensityMatrix normalized() const;

  /// Clamps eigenvalues in [-1e-9, 0) to zero and renormalizes. Throws
  /// kNotPositive when an eigenvalue is more negative than that.
  DensityMatrix repair_psd() const;

  /// Pads with zeros (dim larger) or keeps the top-left block (dim smaller).
  /// Cropping does not renormalize.
  DensityMatrix resized(int dim) const;

  ValidationReport validate() const;

 private:
  CMatrix rho_;
};

/// Density matrix over H_A (x) H_B, index a * dimB + b.
class TwoModeState {
 public:
  TwoModeState(int dim_a, int dim_b, CMatrix elements);

  static TwoModeState from_ket(int dim_a, int dim_b, const CVector& ket);

  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  int dim() const { return dim_a_ * dim_b_; }
  const CMatrix& matrix() const { return rho_; }

  static int index(int a, int b, int dim_b) { return a * dim_b + b; }

  double trace() const { return rho_.trace().real(); }
  TwoModeState normalized() const;
  TwoModeState repair_psd() const;

  /// Keeps the amplitudes with a < dim_a and b < dim_b and renormalizes.
  TwoModeState cropped(int dim_a, int dim_b) const;

  ValidationReport validate() const;

 private:
  int dim_a_;
  int dim_b_;
  CMatrix rho_;
};

DensityMatrix vacuum(int dim);
DensityMatrix fock(int n, int dim);

/// Lowering operator, (a)_{n-1,n} = sqrt(n).
CMatrix annihilation(int dim);
CMatrix creation(int dim);
CMatrix number_operator(int dim);

/// Quadrature x_theta = x cos(theta) + p sin(theta) = (a e^{-i theta} + a† e^{i theta}) / sqrt(2).
CMatrix quadrature_operator(double theta, int dim);

/// exp((r/2)(a†^2 - a^2)) on the truncated space. Real r > 0 squeezes p:
/// Var_p of S(r)|0> is e^{-2r}/2. Exactly unitary (anti-Hermitian generator);
/// matrix elements near the cutoff are only accurate when
/// dim >= 10 sinh^2(r) + 10.
CMatrix squeeze_operator(double r, int dim);

/// exp(beta a† - conj(beta) a) on the truncated space.
CMatrix displacement_operator(Complex beta, int dim);

/// exp(theta (a†b - a b†)) with cos(theta) = sqrt(T), on the mode-A-major basis.
/// With this sign |1,0> -> sqrt(T)|1,0> - sqrt(1-T)|0,1>.
CMatrix beamsplitter(double transmissivity, int dim_a, int dim_b);

/// Columns D(alpha)|n> for n < count, evaluated on a working space of
/// `working_dim` Fock levels by the recursion D|n> = (a† - conj(alpha)) D|n-1> / sqrt(n)
/// from the analytic coherent state. Rows are accurate as long as
/// working_dim comfortably exceeds count + |alpha|^2.
CMatrix displaced_fock_columns(Complex alpha, int count, int working_dim);

/// Working dimension used for `displaced_fock_columns` to keep the tail negligible.
int displaced_working_dim(Complex alpha, int count);

CVector coherent_ket(Complex alpha, int dim);

TwoModeState tensor(const DensityMatrix& a, const DensityMatrix& b);
DensityMatrix partial_trace(const TwoModeState& state, Mode keep);

/// Transpose on the mode-B indices.
CMatrix partial_transpose(const TwoModeState& state);

DensityMatrix apply_unitary(const DensityMatrix& state, const CMatrix& unitary);
TwoModeState apply_unitary(const TwoModeState& state, const CMatrix& unitary);

Complex expectation(const DensityMatrix& state, const CMatrix& op);

}  // namespace photosub
