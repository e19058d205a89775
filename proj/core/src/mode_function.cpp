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

#include <algorithm>
#include <cmath>

#include "photosub/error.hpp"
#include "photosub/homodyne.hpp"

namespace photosub {

ModeFunction::ModeFunction(double gamma, double kappa, double t0, double norm)
    : gamma_(gamma), kappa_(kappa), t0_(t0), norm_(norm) {
  if (!(gamma > 0.0) || !(kappa > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "mode function rates must be positive");
  }
  if (gamma == kappa) {
    throw Error(ErrorKind::kDegenerateParameters, "mode function requires kappa != gamma (f vanishes identically)");
  }
}

double ModeFunction::unnormalized_norm_squared(double gamma, double kappa) {
  return kappa * kappa / gamma - 4.0 * gamma * kappa / (gamma + kappa) + gamma * gamma / kappa;
}

ModeFunction ModeFunction::normalized(double gamma, double kappa, double t0) {
  const ModeFunction probe(gamma, kappa, t0);
  return ModeFunction(gamma, kappa, t0, 1.0 / std::sqrt(unnormalized_norm_squared(gamma, kappa)));
}

double ModeFunction::operator()(double t) const {
  const double s = std::abs(t - t0_);
  return norm_ * (kappa_ * std::exp(-gamma_ * s) - gamma_ * std::exp(-kappa_ * s));
}

double mode_function_eval(const ModeFunction& mf, double t) { return mf(t); }

WeightedQuadrature weighted_quadrature(std::span<const double> trace, std::span<const double> timestamps,
                                       const ModeFunction& mf) {
  if (trace.size() != timestamps.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "trace and timestamps differ in length");
  }
  if (trace.size() < 2) throw Error(ErrorKind::kInvalidArgument, "trace needs at least two samples");
  const double dt = (timestamps.back() - timestamps.front()) / static_cast<double>(timestamps.size() - 1);
  if (!(dt > 0.0)) throw Error(ErrorKind::kInvalidArgument, "timestamps must increase");
  for (std::size_t i = 1; i < timestamps.size(); ++i) {
    if (std::abs((timestamps[i] - timestamps[i - 1]) - dt) > 1e-6 * dt) {
      throw Error(ErrorKind::kInvalidArgument, "timestamps must be uniformly spaced");
    }
  }
  WeightedQuadrature out;
  double sum = 0.0;
  for (std::size_t i = 0; i < trace.size(); ++i) sum += mf(timestamps[i]) * trace[i];
  out.value = sum * dt;
  const double half_span = 3.0 / std::min(mf.gamma(), mf.kappa());
  out.span_too_short = (mf.t0() - timestamps.front() < half_span) || (timestamps.back() - mf.t0() < half_span);
  return out;
}

}  // namespace photosub
