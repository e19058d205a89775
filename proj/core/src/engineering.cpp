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

#include "photosub/engineering.hpp"

#include <cmath>
#include <string>

#include "photosub/error.hpp"

namespace photosub {

namespace {

constexpr double kLeakTolerance = 1e-6;
constexpr double kMinClickProbability = 1e-15;

double leaked_population(const CVector& ket) { return std::max(0.0, 1.0 - ket.squaredNorm()); }

void check_leak(double leaked, const char* what, int dim) {
  if (leaked > kLeakTolerance) {
    throw Error(ErrorKind::kTruncationViolation, std::string(what) + ": population " + std::to_string(leaked) +
                                                     " beyond truncation dim " + std::to_string(dim));
  }
}

void check_eta(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw Error(ErrorKind::kInvalidArgument, "efficiency must lie in [0, 1]");
}

template <typename State>
ConditionalResult<State> conditioned(State unnormalized) {
  const double probability = unnormalized.trace();
  if (!(probability >= kMinClickProbability)) {
    throw Error(ErrorKind::kNoClickSupport, "click probability " + std::to_string(probability) + " is zero");
  }
  return {unnormalized.normalized(), probability};
}

}  // namespace

void TapChannel::validate() const {
  if (!(reflectivity >= 0.0 && reflectivity < 0.5)) {
    throw Error(ErrorKind::kInvalidArgument, "tap reflectivity must lie in [0, 0.5)");
  }
  if (!(trigger_efficiency > 0.0 && trigger_efficiency <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "trigger efficiency must lie in (0, 1]");
  }
}

CVector squeezed_vacuum_ket(double r, int dim) {
  if (dim < 1) throw Error(ErrorKind::kInvalidDimension, "squeezed_vacuum: dim < 1");
  CVector ket = CVector::Zero(dim);
  const double t = std::tanh(r);
  double amp = 1.0 / std::sqrt(std::cosh(r));
  ket(0) = amp;
  for (int n = 2; n < dim; n += 2) {
    amp *= t * std::sqrt((n - 1.0) / n);
    ket(n) = amp;
  }
  return ket;
}

DensityMatrix squeezed_vacuum(double r, int dim) {
  const CVector ket = squeezed_vacuum_ket(r, dim);
  check_leak(leaked_population(ket), "squeezed_vacuum", dim);
  return DensityMatrix::from_ket(ket);
}

TwoModeState two_mode_squeezed_vacuum(double r, int dim_a, int dim_b) {
  if (dim_a < 1 || dim_b < 1) throw Error(ErrorKind::kInvalidDimension, "two_mode_squeezed_vacuum: dim < 1");
  CVector ket = CVector::Zero(dim_a * dim_b);
  const double t = std::tanh(r);
  double amp = 1.0 / std::cosh(r);
  for (int n = 0; n < std::min(dim_a, dim_b); ++n) {
    ket(TwoModeState::index(n, n, dim_b)) = amp;
    amp *= t;
  }
  check_leak(leaked_population(ket), "two_mode_squeezed_vacuum", std::min(dim_a, dim_b));
  return TwoModeState::from_ket(dim_a, dim_b, ket);
}

DensityMatrix loss_channel(const DensityMatrix& state, double eta) {
  check_eta(eta);
  if (eta == 1.0) return state;
  return pure_loss_map(eta, state.dim()).apply(state);
}

TwoModeState loss_channel(const TwoModeState& state, double eta, Mode mode) {
  check_eta(eta);
  if (eta == 1.0) return state;
  const int dim = mode == Mode::kA ? state.dim_a() : state.dim_b();
  return pure_loss_map(eta, dim).apply(state, mode);
}

TwoModeState loss_channel(const TwoModeState& state, double eta) {
  return loss_channel(loss_channel(state, eta, Mode::kA), eta, Mode::kB);
}

CMatrix click_effect(const TapChannel& tap, int dim) {
  tap.validate();
  const int working = displaced_working_dim(tap.displacement, dim);
  const CMatrix cols = displaced_fock_columns(tap.displacement, dim, working);
  RVector no_click_weight(working);
  const double miss = 1.0 - tap.trigger_efficiency;
  for (int m = 0; m < working; ++m) no_click_weight(m) = (m == 0) ? 1.0 : std::pow(miss, m);
  const CMatrix no_click = cols.adjoint() * no_click_weight.cast<Complex>().asDiagonal() * cols;
  return CMatrix::Identity(dim, dim) - no_click;
}

LocalMap tap_click_map(const TapChannel& tap, int dim) {
  const auto kraus = beamsplitter_kraus(1.0 - tap.reflectivity, dim);
  return LocalMap::from_kraus(kraus, click_effect(tap, dim));
}

LocalMap tap_no_click_map(const TapChannel& tap, int dim) {
  const auto kraus = beamsplitter_kraus(1.0 - tap.reflectivity, dim);
  return LocalMap::from_kraus(kraus, CMatrix::Identity(dim, dim) - click_effect(tap, dim));
}

LocalMap tap_ignored_map(const TapChannel& tap, int dim) {
  tap.validate();
  return pure_loss_map(1.0 - tap.reflectivity, dim);
}

ConditionalResult<DensityMatrix> tap_and_click(const DensityMatrix& state, const TapChannel& tap) {
  return conditioned(tap_click_map(tap, state.dim()).apply(state));
}

ConditionalResult<TwoModeState> tap_and_click(const TwoModeState& state, const TapChannel& tap, Mode mode) {
  const int dim = mode == Mode::kA ? state.dim_a() : state.dim_b();
  return conditioned(tap_click_map(tap, dim).apply(state, mode));
}

TwoModeState split_half(const DensityMatrix& state, int dim_b) { return split_half(state, state.dim(), dim_b); }

TwoModeState split_half(const DensityMatrix& state, int dim_a, int dim_b) {
  if (dim_a < 1 || dim_b < 1) throw Error(ErrorKind::kInvalidDimension, "split_half: output dim < 1");
  const int dim = state.dim();
  // Column n is the image of |n>|0>: sum_k (-1)^k sqrt(C(n,k)) 2^{-n/2} |n-k, k>.
  CMatrix isometry = CMatrix::Zero(dim_a * dim_b, dim);
  for (int n = 0; n < dim; ++n) {
    for (int k = 0; k <= n; ++k) {
      const int a = n - k;
      if (a >= dim_a || k >= dim_b) continue;
      const double log_amp = 0.5 * (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(a + 1.0)) -
                             0.5 * n * std::log(2.0);
      isometry(TwoModeState::index(a, k, dim_b), n) = ((k % 2 == 0) ? 1.0 : -1.0) * std::exp(log_amp);
    }
  }
  TwoModeState out(dim_a, dim_b, isometry * state.matrix() * isometry.adjoint());
  return out.normalized();
}

DistillationScenario DistillationScenario::none() { return {}; }

DistillationScenario DistillationScenario::single(double reflectivity, double trigger_efficiency, Trigger trigger) {
  DistillationScenario s;
  s.parties = Parties::kSingle;
  s.tap_a = TapChannel{reflectivity, trigger_efficiency, {0.0, 0.0}};
  s.tap_b = s.tap_a;
  s.trigger = trigger;
  return s;
}

DistillationScenario DistillationScenario::dual(double reflectivity, double trigger_efficiency) {
  DistillationScenario s = single(reflectivity, trigger_efficiency);
  s.parties = Parties::kDual;
  return s;
}

ConditionalResult<TwoModeState> distill(const TwoModeState& state, const DistillationScenario& scenario) {
  if (scenario.parties == Parties::kNone) return {state, 1.0};

  const int da = state.dim_a();
  const int db = state.dim_b();
  const TapChannel& ta = scenario.tap_a;
  const TapChannel& tb = scenario.tap_b;

  if (scenario.parties == Parties::kDual) {
    return conditioned(tap_click_map(tb, db).apply(tap_click_map(ta, da).apply(state, Mode::kA), Mode::kB));
  }

  switch (scenario.trigger) {
    case Trigger::kA:
      return conditioned(tap_ignored_map(tb, db).apply(tap_click_map(ta, da).apply(state, Mode::kA), Mode::kB));
    case Trigger::kB:
      return conditioned(tap_click_map(tb, db).apply(tap_ignored_map(ta, da).apply(state, Mode::kA), Mode::kB));
    case Trigger::kEither: {
      // P(at least one click) = everything minus the joint no-click branch.
      const TwoModeState all =
          tap_ignored_map(tb, db).apply(tap_ignored_map(ta, da).apply(state, Mode::kA), Mode::kB);
      const TwoModeState none =
          tap_no_click_map(tb, db).apply(tap_no_click_map(ta, da).apply(state, Mode::kA), Mode::kB);
      return conditioned(TwoModeState(da, db, all.matrix() - none.matrix()));
    }
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown trigger");
}

TwoModeState minus_plus_transform(const TwoModeState& state) {
  const CMatrix u = beamsplitter(0.5, state.dim_a(), state.dim_b());
  return TwoModeState(state.dim_a(), state.dim_b(), u.adjoint() * state.matrix() * u);
}

TwoModeState minus_plus_inverse(const TwoModeState& state) {
  return apply_unitary(state, beamsplitter(0.5, state.dim_a(), state.dim_b()));
}

}  // namespace photosub
