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

#include "photosub/channel.hpp"

#include <cmath>
#include <string>

#include "photosub/error.hpp"

namespace photosub {

namespace {

struct Entry {
  int row;
  int col;
  Complex value;
};

std::vector<Entry> nonzeros(const CMatrix& m) {
  std::vector<Entry> out;
  for (int c = 0; c < m.cols(); ++c)
    for (int r = 0; r < m.rows(); ++r)
      if (m(r, c) != Complex(0.0, 0.0)) out.push_back({r, c, m(r, c)});
  return out;
}

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

LocalMap::LocalMap(int dim, CMatrix superoperator) : dim_(dim), superop_(std::move(superoperator)) {
  if (dim < 1 || superop_.rows() != dim * dim || superop_.cols() != dim * dim) {
    throw Error(ErrorKind::kDimensionMismatch, "superoperator must be dim^2 x dim^2");
  }
}

LocalMap LocalMap::identity(int dim) { return LocalMap(dim, CMatrix::Identity(dim * dim, dim * dim)); }

LocalMap LocalMap::from_kraus(std::span<const CMatrix> kraus, const CMatrix& weights) {
  if (kraus.empty()) throw Error(ErrorKind::kInvalidArgument, "at least one Kraus operator required");
  const int dim = static_cast<int>(kraus.front().rows());
  const auto count = static_cast<Eigen::Index>(kraus.size());
  if (weights.rows() != count || weights.cols() != count) {
    throw Error(ErrorKind::kDimensionMismatch, "weight matrix must be (#kraus x #kraus)");
  }
  std::vector<std::vector<Entry>> sparse;
  sparse.reserve(kraus.size());
  for (const CMatrix& k : kraus) {
    if (k.rows() != dim || k.cols() != dim) {
      throw Error(ErrorKind::kDimensionMismatch, "Kraus operators must share one square dimension");
    }
    sparse.push_back(nonzeros(k));
  }
  CMatrix superop = CMatrix::Zero(dim * dim, dim * dim);
  for (Eigen::Index k = 0; k < count; ++k) {
    for (Eigen::Index l = 0; l < count; ++l) {
      const Complex w = weights(l, k);
      if (w == Complex(0.0, 0.0)) continue;
      for (const Entry& ek : sparse[static_cast<std::size_t>(k)]) {
        for (const Entry& el : sparse[static_cast<std::size_t>(l)]) {
          superop(ek.row * dim + el.row, ek.col * dim + el.col) += w * ek.value * std::conj(el.value);
        }
      }
    }
  }
  return LocalMap(dim, std::move(superop));
}

DensityMatrix LocalMap::apply(const DensityMatrix& state) const {
  if (state.dim() != dim_) {
    throw Error(ErrorKind::kDimensionMismatch,
                "map dim " + std::to_string(dim_) + " != state dim " + std::to_string(state.dim()));
  }
  CVector vec(dim_ * dim_);
  for (int a = 0; a < dim_; ++a)
    for (int a2 = 0; a2 < dim_; ++a2) vec(a * dim_ + a2) = state(a, a2);
  const CVector out = superop_ * vec;
  CMatrix rho(dim_, dim_);
  for (int a = 0; a < dim_; ++a)
    for (int a2 = 0; a2 < dim_; ++a2) rho(a, a2) = out(a * dim_ + a2);
  return DensityMatrix(std::move(rho));
}

TwoModeState LocalMap::apply(const TwoModeState& state, Mode mode) const {
  const int da = state.dim_a();
  const int db = state.dim_b();
  const int acted = mode == Mode::kA ? da : db;
  const int spectator = mode == Mode::kA ? db : da;
  if (acted != dim_) {
    throw Error(ErrorKind::kDimensionMismatch,
                "map dim " + std::to_string(dim_) + " != mode dim " + std::to_string(acted));
  }
  const CMatrix& rho = state.matrix();
  auto flat = [&](int acted_index, int spectator_index) {
    return mode == Mode::kA ? acted_index * db + spectator_index : spectator_index * db + acted_index;
  };
  // Reshape to (acted pair) x (spectator pair), apply the superoperator, reshape back.
  CMatrix gathered(acted * acted, spectator * spectator);
  for (int x = 0; x < acted; ++x)
    for (int x2 = 0; x2 < acted; ++x2)
      for (int s = 0; s < spectator; ++s)
        for (int s2 = 0; s2 < spectator; ++s2) gathered(x * acted + x2, s * spectator + s2) = rho(flat(x, s), flat(x2, s2));
  const CMatrix mapped = superop_ * gathered;
  CMatrix out(rho.rows(), rho.cols());
  for (int x = 0; x < acted; ++x)
    for (int x2 = 0; x2 < acted; ++x2)
      for (int s = 0; s < spectator; ++s)
        for (int s2 = 0; s2 < spectator; ++s2) out(flat(x, s), flat(x2, s2)) = mapped(x * acted + x2, s * spectator + s2);
  return TwoModeState(da, db, std::move(out));
}

LocalMap LocalMap::operator-(const LocalMap& other) const {
  if (other.dim_ != dim_) throw Error(ErrorKind::kDimensionMismatch, "maps act on different dimensions");
  return LocalMap(dim_, superop_ - other.superop_);
}

std::vector<CMatrix> beamsplitter_kraus(double transmissivity, int dim) {
  if (!(transmissivity >= 0.0 && transmissivity <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "transmissivity must lie in [0, 1]");
  }
  if (dim < 1) throw Error(ErrorKind::kInvalidDimension, "beamsplitter_kraus: dim < 1");
  std::vector<CMatrix> kraus;
  kraus.reserve(static_cast<std::size_t>(dim));
  const double t = transmissivity;
  const double r = 1.0 - transmissivity;
  for (int k = 0; k < dim; ++k) {
    CMatrix op = CMatrix::Zero(dim, dim);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    for (int n = k; n < dim; ++n) {
      double weight = 0.0;
      if (k == 0 && n == 0) {
        weight = 1.0;
      } else if ((t > 0.0 || n == k) && (r > 0.0 || k == 0)) {
        const double log_t = (n - k) > 0 ? (n - k) * std::log(t) : 0.0;
        const double log_r = k > 0 ? k * std::log(r) : 0.0;
        weight = std::exp(0.5 * (log_binomial(n, k) + log_t + log_r));
      }
      op(n - k, n) = sign * weight;
    }
    kraus.push_back(std::move(op));
  }
  return kraus;
}

LocalMap pure_loss_map(double eta, int dim) {
  const auto kraus = beamsplitter_kraus(eta, dim);
  return LocalMap::from_kraus(kraus, CMatrix::Identity(dim, dim));
}

}  // namespace photosub
