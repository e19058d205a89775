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
#include "photosub/homodyne.hpp"
#include "photosub/io.hpp"
#include "support/oracles.hpp"

namespace photosub {
namespace {

namespace ps = photosub::testing;
constexpr double kHalfPi = std::numbers::pi / 2.0;

std::vector<double> values_at(const QuadratureDataset& d, double phase) {
  std::vector<double> xs;
  for (const auto& s : d.samples)
    if (s.phase == phase) xs.push_back(s.value);
  return xs;
}

double sample_variance(const std::vector<double>& xs) {
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  return var / static_cast<double>(xs.size() - 1);
}

TEST(PhaseGrid, EvenlySpacedFromZero) {
  const auto g = phase_grid(12);
  ASSERT_EQ(g.size(), 12u);
  EXPECT_EQ(g[0], 0.0);
  EXPECT_NEAR(g[6], kHalfPi, 1e-15);
  EXPECT_LT(g.back(), std::numbers::pi);
  EXPECT_THROW(phase_grid(0), Error);
}

TEST(DeriveSeed, DistinctPerIndex) {
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  EXPECT_EQ(derive_seed(42, 3), derive_seed(42, 3));
}

TEST(InverseCdfSampler, UniformDensityIsLinear) {
  const std::vector<double> xs{0.0, 1.0, 2.0};
  const std::vector<double> dens{1.0, 1.0, 1.0};
  const InverseCdfSampler s(xs, dens);
  EXPECT_NEAR(s.quantile(0.25), 0.5, 1e-15);
  EXPECT_NEAR(s.quantile(0.75), 1.5, 1e-15);
  EXPECT_NEAR(s.cdf(1.0), 0.5, 1e-15);
  EXPECT_EQ(s.cdf(-1.0), 0.0);
  EXPECT_EQ(s.cdf(3.0), 1.0);
}

TEST(InverseCdfSampler, RejectsDegenerateInput) {
  const std::vector<double> xs{0.0, 1.0};
  const std::vector<double> zero{0.0, 0.0};
  EXPECT_THROW(InverseCdfSampler(xs, zero), Error);
  const std::vector<double> short_density{1.0};
  EXPECT_THROW(InverseCdfSampler(xs, short_density), Error);
}

TEST(SampleQuadratures, CountsAndPhases) {
  const auto phases = phase_grid(6);
  const QuadratureDataset d = sample_quadratures(vacuum(4), phases, 100, 1.0, 5);
  EXPECT_EQ(d.samples.size(), 600u);
  for (std::size_t c : d.counts_per_phase()) EXPECT_EQ(c, 100u);
  for (const auto& s : d.samples) EXPECT_NE(std::find(phases.begin(), phases.end(), s.phase), phases.end());
}

TEST(SampleQuadratures, DeterministicForSeed) {
  const auto phases = phase_grid(6);
  const DensityMatrix rho(ps::random_density(6, 2, 3));
  const auto a = io::quadrature_csv(sample_quadratures(rho, phases, 500, 0.8, 99));
  const auto b = io::quadrature_csv(sample_quadratures(rho, phases, 500, 0.8, 99));
  const auto c = io::quadrature_csv(sample_quadratures(rho, phases, 500, 0.8, 100));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

TEST(SampleQuadratures, VacuumVarianceIndependentOfEfficiency) {
  const std::vector<double> phases{0.0};
  for (double eta : {1.0, 0.6, 0.2}) {
    const auto d = sample_quadratures(vacuum(6), phases, 100000, eta, 17);
    EXPECT_NEAR(sample_variance(values_at(d, 0.0)), 0.5, 0.01) << "eta=" << eta;
  }
}

TEST(SampleQuadratures, SqueezedVarianceAtSqueezedPhase) {
  const double r = 0.3454;
  const std::vector<double> phases{kHalfPi};
  const auto d = sample_quadratures(squeezed_vacuum(r, 24), phases, 100000, 1.0, 23);
  EXPECT_NEAR(sample_variance(values_at(d, kHalfPi)), 0.5 * std::exp(-2.0 * r), 0.005);
}

TEST(SampleQuadratures, SqueezedVarianceUnderLoss) {
  const double r = 0.4;
  const std::vector<double> phases{kHalfPi};
  const DensityMatrix sv = squeezed_vacuum(r, 24);
  const double v1 = 0.5 * std::exp(-2.0 * r);
  for (double eta : {0.8, 0.5}) {
    const auto d = sample_quadratures(sv, phases, 100000, eta, 29);
    EXPECT_NEAR(sample_variance(values_at(d, kHalfPi)), eta * v1 + (1.0 - eta) * 0.5, 0.006) << "eta=" << eta;
  }
}

TEST(SampleQuadratures, KolmogorovSmirnovAgainstAnalyticCdfs) {
  const std::vector<double> phases{0.0};
  auto xs = [&](const DensityMatrix& rho, std::uint64_t seed) {
    return values_at(sample_quadratures(rho, phases, 100000, 1.0, seed), 0.0);
  };
  const double r = 0.3454;
  EXPECT_LT(ps::ks_distance(xs(vacuum(10), 1), [](double x) { return ps::normal_cdf(x, 0.5); }), 0.01);
  EXPECT_LT(ps::ks_distance(xs(squeezed_vacuum(r, 24), 2),
                            [&](double x) { return ps::normal_cdf(x, 0.5 * std::exp(2.0 * r)); }),
            0.01);
  EXPECT_LT(ps::ks_distance(xs(fock(1, 10), 3), ps::fock1_cdf), 0.01);
}

TEST(SampleQuadratures, KittenHistogramHasCentralDip) {
  const DensityMatrix kitten = tap_and_click(squeezed_vacuum(db_to_r(3.0), 20), TapChannel{0.05, 1.0, {}}).state;
  const std::vector<double> phases{kHalfPi};
  const auto xs = values_at(sample_quadratures(kitten, phases, 100000, 1.0, 31), kHalfPi);
  std::vector<int> bins(41, 0);
  for (double x : xs) {
    const int b = static_cast<int>(std::floor((x + 2.05) / 0.1));
    if (b >= 0 && b < 41) ++bins[static_cast<std::size_t>(b)];
  }
  const int centre = bins[20];
  const int left_max = *std::max_element(bins.begin(), bins.begin() + 20);
  const int right_max = *std::max_element(bins.begin() + 21, bins.end());
  EXPECT_LT(centre, left_max);
  EXPECT_LT(centre, right_max);
}

TEST(SampleQuadratures, RejectsBadRequests) {
  const std::vector<double> phases{0.0};
  EXPECT_THROW(sample_quadratures(vacuum(3), phases, 0, 1.0, 1), Error);
  EXPECT_THROW(sample_quadratures(vacuum(3), phases, 10, 0.0, 1), Error);
  EXPECT_THROW(sample_quadratures(vacuum(3), {}, 10, 1.0, 1), Error);
}

TEST(SampleJointQuadratures, SplitSqueezedVacuumStatistics) {
  const double r = 0.4;
  const TwoModeState split = split_half(squeezed_vacuum(r, 24), 12, 12);
  const auto pairs = inphase_pairs(2);  // phases 0 and pi/2
  const auto d = sample_joint_quadratures(split, pairs, 40000, 1.0, 7, 512);
  ASSERT_EQ(d.samples.size(), 80000u);
  std::vector<double> minus;
  std::vector<double> plus;
  std::vector<double> a_only;
  for (const auto& s : d.samples) {
    if (s.phase_a != kHalfPi) continue;
    minus.push_back((s.x_a - s.x_b) / std::sqrt(2.0));
    plus.push_back((s.x_a + s.x_b) / std::sqrt(2.0));
    a_only.push_back(s.x_a);
  }
  EXPECT_NEAR(sample_variance(minus), 0.5 * std::exp(-2.0 * r), 0.006);
  EXPECT_NEAR(sample_variance(plus), 0.5, 0.01);
  EXPECT_NEAR(sample_variance(a_only), 0.25 * std::exp(-2.0 * r) + 0.25, 0.008);
}

TEST(SampleJointQuadratures, PhasePairsAndDeterminism) {
  EXPECT_EQ(all_phase_pairs(6).size(), 36u);
  EXPECT_EQ(inphase_pairs(6).size(), 6u);
  const TwoModeState s = tensor(vacuum(3), fock(1, 3));
  const auto pairs = inphase_pairs(3);
  const auto a = sample_joint_quadratures(s, pairs, 50, 1.0, 3, 128);
  const auto b = sample_joint_quadratures(s, pairs, 50, 1.0, 3, 128);
  EXPECT_EQ(io::joint_quadrature_csv(a), io::joint_quadrature_csv(b));
}

}  // namespace
}  // namespace photosub
