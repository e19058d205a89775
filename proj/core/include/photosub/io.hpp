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

// On-disk formats. Writers are deterministic so identical inputs produce
// byte-identical files; readers raise kParse errors that name the offending
// line (1-based, header included) or field.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "photosub/fock.hpp"
#include "photosub/homodyne.hpp"
#include "photosub/phase_space.hpp"

namespace photosub::io {

/// {"dim": n, "re": [[...]], "im": [[...]]}, row-major.
std::string density_matrix_json(const DensityMatrix& state);
DensityMatrix parse_density_matrix(std::string_view text);

/// As above with "dim_a", "dim_b" added; rows index a * dim_b + b.
std::string two_mode_state_json(const TwoModeState& state);
TwoModeState parse_two_mode_state(std::string_view text);

/// Header `x,p,w`; p is the outer loop, x the inner one.
std::string wigner_csv(const WignerGrid& grid);

/// Header `phase_rad,value`, 9 significant digits.
std::string quadrature_csv(const QuadratureDataset& data);
/// {state_label, eta, seed, n_per_phase, phases}.
std::string quadrature_sidecar_json(const QuadratureDataset& data);
/// Parses the CSV; metadata is filled from the sidecar text when given,
/// otherwise phases are collected from the samples in order of appearance.
QuadratureDataset parse_quadrature_dataset(std::string_view csv, std::optional<std::string_view> sidecar = {});

/// Header `phase_a,phase_b,x_a,x_b`, 9 significant digits.
std::string joint_quadrature_csv(const JointQuadratureDataset& data);
JointQuadratureDataset parse_joint_quadrature_csv(std::string_view csv);

struct ReconstructionReport {
  int iterations = 0;
  double final_delta = 0.0;
  double loglik = 0.0;
  bool converged = false;
  std::optional<double> fidelity_vs_reference;
};

std::string reconstruction_report_json(const ReconstructionReport& report);

/// Sidecar path for a dataset CSV: same stem with ".json".
std::filesystem::path sidecar_path(const std::filesystem::path& csv_path);

std::string read_text(const std::filesystem::path& path);
/// Creates parent directories as needed.
void write_text(const std::filesystem::path& path, std::string_view text);

void write_quadrature_dataset(const std::filesystem::path& csv_path, const QuadratureDataset& data);
/// Reads the CSV and, if present, its sidecar.
QuadratureDataset read_quadrature_dataset(const std::filesystem::path& csv_path);

}  // namespace photosub::io
