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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "photosub/conventions.hpp"
#include "photosub/engineering.hpp"
#include "photosub/error.hpp"
#include "photosub/measures.hpp"
#include "support/oracles.hpp"

namespace photosub {
namespace {

namespace ps = photosub::testing;

TEST(Fidelity, BasicValues) {
  const DensityMatrix rho(ps::random_density(6, 3, 4));
  EXPECT_NEAR(fidelity(rho, rho), 1.0, 1e-10);
  EXPECT_NEAR(fidelity(vacuum(4), fock(1, 4)), 0.0, 1e-14);
  EXPECT_THROW(fidelity(vacuum(4), vacuum(5)), Error);
}

TEST(Fidelity, PureStatesReduceToOverlap) {
  const CVector a = ps::random_ket(5, 1);
  const CVector b = ps::random_ket(5, 2);
  const double overlap = std::norm(a.dot(b));
  EXPECT_NEAR(fidelity(DensityMatrix::from_ket(a), DensityMatrix::from_ket(b)), overlap, 1e-9);
  EXPECT_NEAR(fidelity_with_ket(DensityMatrix::from_ket(a), b), overlap, 1e-12);
}

TEST(Fidelity, Symmetric) {
  const DensityMatrix a(ps::random_density(5, 2, 8));
  const DensityMatrix b(ps::random_density(5, 4, 9));
  EXPECT_NEAR(fidelity(a, b), fidelity(b, a), 1e-7);
}

TEST(Purity, MixedQubit) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = 0.5;
  m(1, 1) = 0.5;
  EXPECT_DOUBLE_EQ(purity(DensityMatrix(m)), 0.5);
}

TEST(TraceDistance, OrthogonalAndIdentical) {
  EXPECT_NEAR(trace_distance(vacuum(3), fock(2, 3)), 1.0, 1e-12);
  const DensityMatrix a(ps::random_density(4, 2, 3));
  EXPECT_NEAR(trace_distance(a, a), 0.0, 1e-12);
}

TEST(LogNegativity, ProductStatesAreZero) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const TwoModeState prod =
        tensor(DensityMatrix(ps::random_density(4, 2, seed)), DensityMatrix(ps::random_density(3, 3, seed + 100)));
    EXPECT_NEAR(log_negativity(prod), 0.0, 1e-9);
  }
}

TEST(LogNegativity, TwoModeSqueezedAnalytic) {
  const double r = 0.3454;
  EXPECT_NEAR(log_negativity(two_mode_squeezed_vacuum(r, 12, 12)), 2.0 * r / std::numbers::ln2, 5e-3);
}

TEST(LogNegativity, TruncatedTwoModeSqueezedExact) {
  // Schmidt form: ||rho^TB||_1 = (sum_n c_n)^2 for the kept amplitudes c_n.
  const double r = 0.5;
  const int d = 8;
  double sum = 0.0;
  double norm = 0.0;
  for (int n = 0; n < d; ++n) {
    const double c = std::pow(std::tanh(r), n);
    sum += c;
    norm += c * c;
  }
  EXPECT_NEAR(log_negativity(two_mode_squeezed_vacuum(r, 30, 30).cropped(d, d)), std::log2(sum * sum / norm), 1e-10);
}

TEST(QuadratureVariance, DecibelConventions) {
  EXPECT_NEAR(to_db(quadrature_variance(vacuum(5), 0.3)), 0.0, 1e-12);
  const double r = db_to_r(3.0);
  const DensityMatrix sv = squeezed_vacuum(r, 30);
  EXPECT_NEAR(to_db(quadrature_variance(sv, std::numbers::pi / 2.0)), 3.0, 1e-6);
  EXPECT_NEAR(to_db(quadrature_variance(sv, 0.0)), -3.0, 1e-6);
  EXPECT_THROW(to_db(0.0), Error);
}

TEST(QuadratureVariance, MeanOfCoherentState) {
  const Complex alpha(0.7, -0.2);
  const DensityMatrix coh = DensityMatrix::from_ket(coherent_ket(alpha, 25));
  EXPECT_NEAR(quadrature_mean(coh, 0.0), std::sqrt(2.0) * alpha.real(), 1e-8);
  EXPECT_NEAR(quadrature_mean(coh, std::numbers::pi / 2.0), std::sqrt(2.0) * alpha.imag(), 1e-8);
  EXPECT_NEAR(quadrature_variance(coh, 1.1), 0.5, 1e-8);
}

TEST(JointQuadratureVariance, SplitSqueezedVacuumMinusMode) {
  const double r = 0.4;
  const TwoModeState split = split_half(squeezed_vacuum(r, 30), 30);
  EXPECT_NEAR(joint_quadrature_variance(split, std::numbers::pi / 2.0, -1), 0.5 * std::exp(-2.0 * r), 1e-9);
  EXPECT_NEAR(joint_quadrature_variance(split, std::numbers::pi / 2.0, +1), 0.5, 1e-9);
}

}  // namespace
}  // namespace photosub
