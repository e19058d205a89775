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

#include "photosub/homodyne.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "photosub/engineering.hpp"
#include "photosub/error.hpp"
#include "photosub/phase_space.hpp"

namespace photosub {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_request(int n, double eta) {
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "samples per phase must be positive");
  if (!(eta > 0.0 && eta <= 1.0)) throw Error(ErrorKind::kInvalidArgument, "homodyne efficiency must lie in (0, 1]");
}

}  // namespace

std::vector<std::size_t> QuadratureDataset::counts_per_phase() const {
  std::vector<std::size_t> counts(phases.size(), 0);
  for (const QuadratureSample& s : samples) {
    const auto it = std::find(phases.begin(), phases.end(), s.phase);
    if (it != phases.end()) ++counts[static_cast<std::size_t>(it - phases.begin())];
  }
  return counts;
}

std::vector<double> phase_grid(int count) {
  if (count < 1) throw Error(ErrorKind::kInvalidArgument, "phase count must be positive");
  std::vector<double> phases(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) phases[static_cast<std::size_t>(k)] = std::numbers::pi * k / count;
  return phases;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (index + 1) * 0xd1b54a32d192ed03ULL);
}

InverseCdfSampler::InverseCdfSampler(std::vector<double> xs, std::span<const double> density)
    : xs_(std::move(xs)), cdf_(xs_.size(), 0.0) {
  if (xs_.size() < 2 || density.size() != xs_.size()) {
    throw Error(ErrorKind::kInvalidArgument, "sampler grid and density must match with >= 2 points");
  }
  for (std::size_t i = 1; i < xs_.size(); ++i) {
    const double left = std::max(0.0, density[i - 1]);
    const double right = std::max(0.0, density[i]);
    cdf_[i] = cdf_[i - 1] + 0.5 * (left + right) * (xs_[i] - xs_[i - 1]);
  }
  const double total = cdf_.back();
  if (!(total > 0.0)) throw Error(ErrorKind::kNotPositive, "density integrates to zero on the sampling grid");
  for (double& c : cdf_) c /= total;
}

double InverseCdfSampler::quantile(double u) const {
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.begin()) return xs_.front();
  if (it == cdf_.end()) return xs_.back();
  const std::size_t i = static_cast<std::size_t>(it - cdf_.begin()) - 1;
  const double span = cdf_[i + 1] - cdf_[i];
  const double frac = span > 0.0 ? (u - cdf_[i]) / span : 0.0;
  return xs_[i] + frac * (xs_[i + 1] - xs_[i]);
}

double InverseCdfSampler::cdf(double x) const {
  if (x <= xs_.front()) return 0.0;
  if (x >= xs_.back()) return 1.0;
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - xs_.begin()) - 1;
  const double frac = (x - xs_[i]) / (xs_[i + 1] - xs_[i]);
  return cdf_[i] + frac * (cdf_[i + 1] - cdf_[i]);
}

QuadratureDataset sample_quadratures(const DensityMatrix& state, std::span<const double> phases, int n_per_phase,
                                     double eta, std::uint64_t seed, const SamplingGrid& grid) {
  check_request(n_per_phase, eta);
  if (phases.empty()) throw Error(ErrorKind::kInvalidArgument, "at least one LO phase required");
  const DensityMatrix detected = loss_channel(state, eta);
  const std::vector<double> xs = linspace(grid.lo, grid.hi, grid.points);

  QuadratureDataset data;
  data.phases.assign(phases.begin(), phases.end());
  data.n_per_phase = n_per_phase;
  data.efficiency = eta;
  data.seed = seed;
  data.samples.reserve(phases.size() * static_cast<std::size_t>(n_per_phase));

  for (std::size_t k = 0; k < phases.size(); ++k) {
    const RVector pdf = quadrature_pdf(detected, phases[k], xs);
    const InverseCdfSampler sampler(xs, std::span<const double>(pdf.data(), static_cast<std::size_t>(pdf.size())));
    std::mt19937_64 rng(derive_seed(seed, k));
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (int i = 0; i < n_per_phase; ++i) data.samples.push_back({phases[k], sampler.quantile(uniform(rng))});
  }
  return data;
}

std::vector<std::pair<double, double>> inphase_pairs(int count) {
  std::vector<std::pair<double, double>> pairs;
  for (double phase : phase_grid(count)) pairs.emplace_back(phase, phase);
  return pairs;
}

std::vector<std::pair<double, double>> all_phase_pairs(int count) {
  std::vector<std::pair<double, double>> pairs;
  const auto grid = phase_grid(count);
  for (double pa : grid)
    for (double pb : grid) pairs.emplace_back(pa, pb);
  return pairs;
}

JointQuadratureDataset sample_joint_quadratures(const TwoModeState& state,
                                                std::span<const std::pair<double, double>> phase_pairs,
                                                int n_per_pair, double eta, std::uint64_t seed, int grid_points,
                                                double lo, double hi) {
  check_request(n_per_pair, eta);
  if (phase_pairs.empty()) throw Error(ErrorKind::kInvalidArgument, "at least one LO phase pair required");
  if (grid_points < 2) throw Error(ErrorKind::kInvalidArgument, "joint sampling grid needs >= 2 points");
  const TwoModeState detected = loss_channel(state, eta);
  const int da = detected.dim_a();
  const int db = detected.dim_b();
  const CMatrix& rho = detected.matrix();
  const double cell = (hi - lo) / grid_points;

  auto projector_vectors = [&](double theta, int dim) {
    CMatrix v(dim, grid_points);
    for (int i = 0; i < grid_points; ++i) {
      const RVector psi = oscillator_wavefunctions(lo + (i + 0.5) * cell, dim);
      for (int n = 0; n < dim; ++n) v(n, i) = std::polar(psi(n), theta * n);
    }
    return v;
  };

  JointQuadratureDataset data;
  data.phase_pairs.assign(phase_pairs.begin(), phase_pairs.end());
  data.n_per_pair = n_per_pair;
  data.efficiency = eta;
  data.seed = seed;
  data.samples.reserve(phase_pairs.size() * static_cast<std::size_t>(n_per_pair));

  for (std::size_t k = 0; k < phase_pairs.size(); ++k) {
    const auto [theta_a, theta_b] = phase_pairs[k];
    const CMatrix va = projector_vectors(theta_a, da);
    const CMatrix vb = projector_vectors(theta_b, db);

    // table(i, j) = p(x_a = centre i, x_b = centre j)
    RMatrix table(grid_points, grid_points);
    for (int i = 0; i < grid_points; ++i) {
      CMatrix contracted_right = CMatrix::Zero(da * db, db);
      for (int a2 = 0; a2 < da; ++a2) contracted_right += rho.middleCols(a2 * db, db) * va(a2, i);
      CMatrix conditional = CMatrix::Zero(db, db);
      for (int a = 0; a < da; ++a) conditional += std::conj(va(a, i)) * contracted_right.middleRows(a * db, db);
      const CMatrix z = conditional * vb;
      table.row(i) = (vb.conjugate().cwiseProduct(z)).colwise().sum().real().cwiseMax(0.0);
    }

    RVector row_mass = table.rowwise().sum();
    std::vector<double> row_cdf(static_cast<std::size_t>(grid_points));
    std::partial_sum(row_mass.data(), row_mass.data() + grid_points, row_cdf.begin());
    const double total = row_cdf.back();
    if (!(total > 0.0)) throw Error(ErrorKind::kNotPositive, "joint density vanishes on the sampling grid");

    std::mt19937_64 rng(derive_seed(seed, k));
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (int s = 0; s < n_per_pair; ++s) {
      const double u_row = uniform(rng) * total;
      const auto row_it = std::upper_bound(row_cdf.begin(), row_cdf.end(), u_row);
      const int i = std::min(grid_points - 1, static_cast<int>(row_it - row_cdf.begin()));
      const double u_col = uniform(rng) * row_mass(i);
      double acc = 0.0;
      int j = grid_points - 1;
      for (int c = 0; c < grid_points; ++c) {
        acc += table(i, c);
        if (acc > u_col) {
          j = c;
          break;
        }
      }
      const double x_a = lo + (i + uniform(rng)) * cell;
      const double x_b = lo + (j + uniform(rng)) * cell;
      data.samples.push_back({theta_a, theta_b, x_a, x_b});
    }
  }
  return data;
}

}  // namespace photosub
