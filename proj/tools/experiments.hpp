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

// Experiment drivers behind the photosub command-line tool. Each driver
// writes its artifacts under ExperimentConfig::out and returns the paths.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace photosub::tools {

enum class Experiment { kKitten, kDistill, kQubit, kTomo, kWigner };

std::string_view to_string(Experiment e);
std::optional<Experiment> parse_experiment(std::string_view name);

struct ExperimentConfig {
  Experiment experiment = Experiment::kKitten;
  int dim = 20;
  /// Exactly one of the two lists is non-empty.
  std::vector<double> squeezing_db;
  std::vector<double> squeezing_r;
  double reflectivity = 0.05;
  double reflectivity_dual = 0.10;
  double eta_trigger = 1.0;
  double eta_homodyne = 1.0;
  std::vector<double> beta_re;
  std::vector<double> beta_im;
  int phases = 12;
  int samples = 30000;
  std::optional<std::uint64_t> seed;
  std::filesystem::path out = "out";
  int recon_dim = 10;
  std::filesystem::path dataset;
  std::filesystem::path state;
  std::filesystem::path reference;
  double grid_min = -4.0;
  double grid_max = 4.0;
  int grid_points = 101;
  bool qubit_wigner = false;

  /// Squeezing parameters r, converted from dB when given that way.
  std::vector<double> squeezing() const;
};

/// A configuration problem, tagged with the offending field name.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message);
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Throws ConfigError for the first violated rule.
void validate(const ExperimentConfig& cfg);

/// Applies a JSON object whose keys mirror the long flag names
/// ("squeezing-db", "eta-trigger", ...). Unknown keys are rejected.
void apply_json(ExperimentConfig& cfg, std::string_view json_text);

struct RunSummary {
  std::vector<std::filesystem::path> files;
};

RunSummary run_kitten(const ExperimentConfig& cfg);
RunSummary run_distill(const ExperimentConfig& cfg);
RunSummary run_qubit(const ExperimentConfig& cfg);
RunSummary run_tomo(const ExperimentConfig& cfg);
RunSummary run_wigner(const ExperimentConfig& cfg);

/// Validates and dispatches on cfg.experiment.
RunSummary run(const ExperimentConfig& cfg);

/// Smallest dimension holding S(r)|0> with less than 1e-12 population above it.
int source_dim_for(double r, int at_least);

}  // namespace photosub::tools
