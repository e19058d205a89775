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

#include "photosub/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>

#include "photosub/engineering.hpp"
#include "photosub/error.hpp"
#include "photosub/measures.hpp"
#include "photosub/phase_space.hpp"

namespace photosub {

namespace {

// Smallest probability density accepted in a likelihood term.
constexpr double kDensityFloor = 1e-300;
// Relative roundoff allowance when comparing successive log-likelihoods.
constexpr double kLikelihoodSlack = 1e-13;

struct Evaluation {
  double log_likelihood = 0.0;
  CMatrix r_operator;  // sum_j Pi_j / p_j, divided by the sample count
};

using Evaluator = std::function<Evaluation(const CMatrix&)>;

struct IterationOutcome {
  CMatrix rho;
  int iterations = 0;
  double final_delta = 0.0;
  double log_likelihood = 0.0;
  bool converged = false;
  int diluted_steps = 0;
  std::vector<double> history;
};

CMatrix normalized_sandwich(const CMatrix& left, const CMatrix& rho) {
  CMatrix next = left * rho * left.adjoint();
  next = 0.5 * (next + next.adjoint());
  return next / next.trace().real();
}

IterationOutcome iterate_rrr(const Evaluator& evaluate, int dim, int max_iterations, double tolerance) {
  IterationOutcome out;
  out.rho = CMatrix::Identity(dim, dim) / static_cast<double>(dim);
  Evaluation current = evaluate(out.rho);
  out.history.push_back(current.log_likelihood);
  const CMatrix identity = CMatrix::Identity(dim, dim);

  for (int it = 1; it <= max_iterations; ++it) {
    CMatrix candidate = normalized_sandwich(current.r_operator, out.rho);
    Evaluation next = evaluate(candidate);
    const double floor = current.log_likelihood - kLikelihoodSlack * std::max(1.0, std::abs(current.log_likelihood));
    if (next.log_likelihood < floor) {
      ++out.diluted_steps;
      bool accepted = false;
      for (double eps = 1.0; eps > 1e-9 && !accepted; eps *= 0.5) {
        candidate = normalized_sandwich(identity + eps * current.r_operator, out.rho);
        next = evaluate(candidate);
        accepted = next.log_likelihood >= floor;
      }
      if (!accepted) {
        // No step raises the likelihood at working precision: stationary point.
        out.iterations = it;
        out.final_delta = 0.0;
        out.converged = true;
        break;
      }
    }
    out.final_delta = (candidate - out.rho).cwiseAbs().maxCoeff();
    out.rho = std::move(candidate);
    current = std::move(next);
    out.history.push_back(current.log_likelihood);
    out.iterations = it;
    if (out.final_delta < tolerance) {
      out.converged = true;
      break;
    }
  }
  out.log_likelihood = current.log_likelihood;
  return out;
}

// Samples sharing one LO phase, with the real oscillator wavefunctions at each
// sample stacked as rows.
struct PhaseGroup {
  double phase;
  RMatrix wavefunctions;
};

std::vector<PhaseGroup> group_by_phase(const QuadratureDataset& data, int dim) {
  std::map<double, std::vector<double>> values;
  for (const QuadratureSample& s : data.samples) values[s.phase].push_back(s.value);
  std::vector<PhaseGroup> groups;
  groups.reserve(values.size());
  for (const auto& [phase, xs] : values) {
    PhaseGroup g{phase, RMatrix(static_cast<Eigen::Index>(xs.size()), dim)};
    for (std::size_t i = 0; i < xs.size(); ++i) {
      g.wavefunctions.row(static_cast<Eigen::Index>(i)) = oscillator_wavefunctions(xs[i], dim).transpose();
    }
    groups.push_back(std::move(g));
  }
  return groups;
}

// rho_theta(m, n) = rho(m, n) e^{i theta (n - m)}; p_j = psi_j^T Re(rho_theta) psi_j.
Evaluation evaluate_single_mode(const std::vector<PhaseGroup>& groups, const CMatrix& rho, std::size_t total) {
  const int dim = static_cast<int>(rho.rows());
  Evaluation ev;
  ev.r_operator = CMatrix::Zero(dim, dim);
  for (const PhaseGroup& g : groups) {
    RMatrix rotated(dim, dim);
    for (int m = 0; m < dim; ++m)
      for (int n = 0; n < dim; ++n) rotated(m, n) = (rho(m, n) * std::polar(1.0, g.phase * (n - m))).real();
    const RMatrix projected = g.wavefunctions * rotated;
    const RVector p = projected.cwiseProduct(g.wavefunctions).rowwise().sum().cwiseMax(kDensityFloor);
    ev.log_likelihood += p.array().log().sum();
    const RVector w = p.cwiseInverse();
    const RMatrix r_phase = g.wavefunctions.transpose() * w.asDiagonal() * g.wavefunctions;
    for (int m = 0; m < dim; ++m)
      for (int n = 0; n < dim; ++n) ev.r_operator(m, n) += r_phase(m, n) * std::polar(1.0, g.phase * (m - n));
  }
  ev.r_operator /= static_cast<double>(total);
  return ev;
}

}  // namespace

double log_likelihood(const DensityMatrix& state, const QuadratureDataset& data) {
  double sum = 0.0;
  for (const QuadratureSample& s : data.samples) {
    sum += std::log(std::max(kDensityFloor, quadrature_pdf(state, s.phase, s.value)));
  }
  return sum;
}

MaxLikResult maxlik_reconstruct(const QuadratureDataset& data, const MaxLikConfig& cfg) {
  if (data.samples.empty()) throw Error(ErrorKind::kEmptyDataset, "cannot reconstruct from an empty dataset");
  if (cfg.dim < 2) throw Error(ErrorKind::kInvalidDimension, "reconstruction dim must be >= 2");
  if (!(cfg.tolerance > 0.0) || cfg.max_iterations < 1) {
    throw Error(ErrorKind::kInvalidArgument, "tolerance must be positive and max_iterations >= 1");
  }
  const std::vector<PhaseGroup> groups = group_by_phase(data, cfg.dim);
  const std::size_t total = data.samples.size();
  const IterationOutcome run = iterate_rrr(
      [&](const CMatrix& rho) { return evaluate_single_mode(groups, rho, total); }, cfg.dim, cfg.max_iterations,
      cfg.tolerance);

  MaxLikResult result;
  result.state = DensityMatrix(run.rho).repair_psd();
  result.iterations = run.iterations;
  result.final_delta = run.final_delta;
  result.log_likelihood = run.log_likelihood;
  result.converged = run.converged;
  result.under_determined = groups.size() < 2;
  result.diluted_steps = run.diluted_steps;
  result.log_likelihood_history = run.history;
  return result;
}

TwoModeMaxLikResult maxlik_reconstruct_two_mode(const JointQuadratureDataset& data, const TwoModeMaxLikConfig& cfg) {
  if (data.samples.empty()) throw Error(ErrorKind::kEmptyDataset, "cannot reconstruct from an empty dataset");
  if (cfg.dim_a < 2 || cfg.dim_b < 2) throw Error(ErrorKind::kInvalidDimension, "reconstruction dims must be >= 2");
  const int da = cfg.dim_a;
  const int db = cfg.dim_b;
  const int dim = da * db;
  const auto count = static_cast<Eigen::Index>(data.samples.size());

  // Row j: the projector vector (v_a (x) v_b) with v_n = e^{i n theta} psi_n(x).
  CMatrix vectors(count, dim);
  for (Eigen::Index j = 0; j < count; ++j) {
    const JointQuadratureSample& s = data.samples[static_cast<std::size_t>(j)];
    const RVector psi_a = oscillator_wavefunctions(s.x_a, da);
    const RVector psi_b = oscillator_wavefunctions(s.x_b, db);
    for (int a = 0; a < da; ++a)
      for (int b = 0; b < db; ++b)
        vectors(j, a * db + b) = std::polar(psi_a(a) * psi_b(b), s.phase_a * a + s.phase_b * b);
  }
  const CMatrix conj_vectors = vectors.conjugate();

  const IterationOutcome run = iterate_rrr(
      [&](const CMatrix& rho) {
        Evaluation ev;
        const CMatrix projected = conj_vectors * rho;
        const RVector p = projected.cwiseProduct(vectors).rowwise().sum().real().cwiseMax(kDensityFloor);
        ev.log_likelihood = p.array().log().sum();
        ev.r_operator = vectors.transpose() * p.cwiseInverse().cast<Complex>().asDiagonal() * conj_vectors;
        ev.r_operator /= static_cast<double>(count);
        return ev;
      },
      dim, cfg.max_iterations, cfg.tolerance);

  TwoModeMaxLikResult result;
  result.state = TwoModeState(da, db, run.rho).repair_psd();
  result.iterations = run.iterations;
  result.final_delta = run.final_delta;
  result.log_likelihood = run.log_likelihood;
  result.converged = run.converged;
  result.diluted_steps = run.diluted_steps;
  result.log_likelihood_history = run.history;
  return result;
}

InphaseReconstruction two_mode_inphase_reconstruct(const JointQuadratureDataset& data, const MaxLikConfig& cfg) {
  if (data.samples.size() < 2) throw Error(ErrorKind::kEmptyDataset, "in-phase reconstruction needs samples");
  QuadratureDataset minus;
  minus.efficiency = data.efficiency;
  minus.seed = data.seed;
  minus.n_per_phase = data.n_per_pair;
  minus.state_label = data.state_label + " (minus mode)";
  minus.samples.reserve(data.samples.size());

  double plus_sum = 0.0;
  double plus_sq = 0.0;
  for (const JointQuadratureSample& s : data.samples) {
    if (s.phase_a != s.phase_b) {
      throw Error(ErrorKind::kInvalidArgument, "in-phase reconstruction requires phase_a == phase_b");
    }
    const double x_minus = (s.x_a - s.x_b) / std::numbers::sqrt2;
    const double x_plus = (s.x_a + s.x_b) / std::numbers::sqrt2;
    minus.samples.push_back({s.phase_a, x_minus});
    plus_sum += x_plus;
    plus_sq += x_plus * x_plus;
    if (std::find(minus.phases.begin(), minus.phases.end(), s.phase_a) == minus.phases.end()) {
      minus.phases.push_back(s.phase_a);
    }
  }
  const double n = static_cast<double>(data.samples.size());
  const double mean = plus_sum / n;
  const double variance = (plus_sq - n * mean * mean) / (n - 1.0);
  const double sigma = 0.5 * std::sqrt(2.0 / (n - 1.0));
  if (std::abs(variance - 0.5) > 3.0 * sigma) throw PlusModeNotVacuum(variance, sigma);

  InphaseReconstruction out;
  out.plus_variance = variance;
  out.plus_sigma = sigma;
  out.minus_mode = maxlik_reconstruct(minus, cfg);
  out.state = minus_plus_inverse(tensor(out.minus_mode.state, vacuum(cfg.dim)));
  return out;
}

DensityMatrix squeezed_basis(const DensityMatrix& state, double r) {
  const CMatrix s = squeeze_operator(r, state.dim());
  return DensityMatrix(s.adjoint() * state.matrix() * s);
}

double squeezed_subspace_weight(const DensityMatrix& state, double r) {
  if (state.dim() < 2) throw Error(ErrorKind::kInvalidDimension, "squeezed qubit needs dim >= 2");
  const DensityMatrix t = squeezed_basis(state, r);
  return (t(0, 0) + t(1, 1)).real();
}

double fit_squeezed_basis(const DensityMatrix& state, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = squeezed_subspace_weight(state, c);
  double fd = squeezed_subspace_weight(state, d);
  while (b - a > 1e-6) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = squeezed_subspace_weight(state, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = squeezed_subspace_weight(state, d);
    }
  }
  return 0.5 * (a + b);
}

QubitParams qubit_params(const DensityMatrix& state, std::optional<double> r) {
  QubitParams out;
  out.r = r.has_value() ? *r : fit_squeezed_basis(state);
  out.purity = purity(state);
  const DensityMatrix t = squeezed_basis(state, out.r);
  out.subspace_weight = std::clamp((t(0, 0) + t(1, 1)).real(), 0.0, 1.0);
  if (!(out.subspace_weight > 0.5)) {
    out.theta = std::numeric_limits<double>::quiet_NaN();
    out.phi = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  const double w = (t(0, 0) + t(1, 1)).real();
  const double z = (t(0, 0) - t(1, 1)).real() / w;
  const Complex coherence = t(1, 0) / w;
  out.theta = std::atan2(2.0 * std::abs(coherence), z);
  double phi = std::arg(coherence);
  if (phi < 0.0) phi += 2.0 * std::numbers::pi;
  if (phi >= 2.0 * std::numbers::pi) phi = 0.0;
  out.phi = phi;
  out.has_angles = true;
  return out;
}

}  // namespace photosub
