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

// Reference computations used by the test suites. They are written
// independently of the library code paths they check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace photosub::testing {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

/// Composite Simpson rule on [a, b] with n (even) intervals.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  if (n % 2 != 0) ++n;
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 == 0 ? 2.0 : 4.0);
  return sum * h / 3.0;
}

inline double normal_cdf(double x, double variance) { return 0.5 * std::erfc(-x / std::sqrt(2.0 * variance)); }

/// CDF of |<x|1>|^2 = 2 x^2 e^{-x^2} / sqrt(pi).
inline double fock1_cdf(double x) {
  return normal_cdf(x, 0.5) - x * std::exp(-x * x) / std::sqrt(std::numbers::pi);
}

/// Kolmogorov-Smirnov distance of a sample set against a reference CDF.
inline double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double c = cdf(samples[i]);
    d = std::max({d, std::abs(c - i / n), std::abs((i + 1) / n - c)});
  }
  return d;
}

/// Coherent-state amplitudes e^{-|a|^2/2} a^n / sqrt(n!) by direct evaluation.
inline CVec coherent_amplitudes(Complex alpha, int dim) {
  CVec v(dim);
  for (int n = 0; n < dim; ++n) {
    v(n) = std::exp(-0.5 * std::norm(alpha)) * std::pow(alpha, n) / std::sqrt(std::tgamma(n + 1.0));
  }
  return v;
}

/// Normalized |alpha> - |-alpha>.
inline CVec odd_cat(double alpha, int dim) {
  CVec v = coherent_amplitudes(alpha, dim) - coherent_amplitudes(-alpha, dim);
  return v / v.norm();
}

/// S(r)|k> for the squeezer exp((r/2)(a†^2 - a^2)), computed with a Taylor
/// series of the generator in a large auxiliary space and cropped to dim.
inline CVec squeezed_fock(double r, int k, int dim, int aux = 120) {
  CMat g = CMat::Zero(aux, aux);
  for (int n = 0; n + 2 < aux; ++n) {
    const double c = std::sqrt((n + 1.0) * (n + 2.0));
    g(n + 2, n) += 0.5 * r * c;
    g(n, n + 2) -= 0.5 * r * c;
  }
  CVec term = CVec::Zero(aux);
  term(k) = 1.0;
  CVec sum = term;
  for (int j = 1; j < 200; ++j) {
    term = g * term / static_cast<double>(j);
    sum += term;
    if (term.norm() < 1e-18) break;
  }
  return sum.head(dim);
}

/// |<v|rho|v>| for a normalized ket.
inline double overlap(const CMat& rho, const CVec& v) { return (v.adjoint() * rho * v)(0, 0).real(); }

/// Random density matrix of rank `rank` from Gaussian Ginibre factors.
inline CMat random_density(int dim, int rank, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  CMat a(dim, rank);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < rank; ++j) a(i, j) = Complex(g(rng), g(rng));
  CMat rho = a * a.adjoint();
  return rho / rho.trace().real();
}

inline CVec random_ket(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  CVec v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(g(rng), g(rng));
  return v / v.norm();
}

}  // namespace photosub::testing
