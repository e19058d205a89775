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

#include "experiments.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>

#include <nlohmann/json.hpp>

#include "photosub/conventions.hpp"
#include "photosub/engineering.hpp"
#include "photosub/error.hpp"
#include "photosub/io.hpp"
#include "photosub/measures.hpp"
#include "photosub/phase_space.hpp"
#include "photosub/tomography.hpp"

namespace photosub::tools {

namespace {

using nlohmann::json;

std::string num(double value) {
  if (std::isnan(value)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

WignerGrid grid_for(const DensityMatrix& state, const ExperimentConfig& cfg) {
  const auto axis = linspace(cfg.grid_min, cfg.grid_max, cfg.grid_points);
  return wigner_grid(state, axis, axis);
}

DensityMatrix load_state(const std::filesystem::path& path) {
  return io::parse_density_matrix(io::read_text(path));
}

template <typename T>
T get(const json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ConfigError(key, "has the wrong type");
  }
}

std::vector<double> number_list(const json& j, const std::string& key) {
  if (j.is_number()) return {j.get<double>()};
  return get<std::vector<double>>(j, key);
}

}  // namespace

std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::kKitten: return "kitten";
    case Experiment::kDistill: return "distill";
    case Experiment::kQubit: return "qubit";
    case Experiment::kTomo: return "tomo";
    case Experiment::kWigner: return "wigner";
  }
  return "unknown";
}

std::optional<Experiment> parse_experiment(std::string_view name) {
  for (Experiment e : {Experiment::kKitten, Experiment::kDistill, Experiment::kQubit, Experiment::kTomo,
                       Experiment::kWigner}) {
    if (to_string(e) == name) return e;
  }
  return std::nullopt;
}

std::vector<double> ExperimentConfig::squeezing() const {
  if (!squeezing_r.empty()) return squeezing_r;
  std::vector<double> rs;
  for (double db : squeezing_db) rs.push_back(db_to_r(db));
  return rs;
}

ConfigError::ConfigError(std::string field, const std::string& message)
    : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

void validate(const ExperimentConfig& cfg) {
  const bool needs_squeezing = cfg.experiment == Experiment::kKitten || cfg.experiment == Experiment::kDistill ||
                               cfg.experiment == Experiment::kQubit;
  if (needs_squeezing) {
    if (cfg.squeezing_db.empty() == cfg.squeezing_r.empty()) {
      throw ConfigError("squeezing", "give exactly one of squeezing-db or squeezing-r");
    }
    for (double r : cfg.squeezing()) {
      if (!(r >= 0.0) || !std::isfinite(r)) throw ConfigError("squeezing", "must be finite and non-negative");
    }
    if (cfg.experiment != Experiment::kDistill && cfg.squeezing().size() != 1) {
      throw ConfigError("squeezing", "this experiment takes a single squeezing value");
    }
  }
  if (cfg.dim < 2) throw ConfigError("dim", "must be >= 2");
  if (!(cfg.reflectivity >= 0.0 && cfg.reflectivity < 0.5)) throw ConfigError("reflectivity", "must lie in [0, 0.5)");
  if (!(cfg.reflectivity_dual >= 0.0 && cfg.reflectivity_dual < 0.5)) {
    throw ConfigError("reflectivity-dual", "must lie in [0, 0.5)");
  }
  if (!(cfg.eta_trigger > 0.0 && cfg.eta_trigger <= 1.0)) throw ConfigError("eta-trigger", "must lie in (0, 1]");
  if (!(cfg.eta_homodyne > 0.0 && cfg.eta_homodyne <= 1.0)) throw ConfigError("eta-homodyne", "must lie in (0, 1]");
  if (cfg.recon_dim < 2) throw ConfigError("recon-dim", "must be >= 2");
  if (cfg.grid_points < 2) throw ConfigError("grid-points", "must be >= 2");
  if (!(cfg.grid_max > cfg.grid_min)) throw ConfigError("grid-max", "must exceed grid-min");

  switch (cfg.experiment) {
    case Experiment::kKitten:
      if (cfg.phases != 6 && cfg.phases != 12) throw ConfigError("phases", "must be 6 or 12");
      if (cfg.samples < 1) throw ConfigError("samples", "must be positive");
      if (!cfg.seed) throw ConfigError("seed", "required for sampling experiments");
      break;
    case Experiment::kQubit:
      if (cfg.beta_re.empty() && cfg.beta_im.empty()) throw ConfigError("beta-re", "beta grid must not be empty");
      if (!cfg.beta_re.empty() && !cfg.beta_im.empty() && cfg.beta_re.size() != cfg.beta_im.size()) {
        throw ConfigError("beta-im", "must have as many entries as beta-re");
      }
      break;
    case Experiment::kTomo:
      if (cfg.dataset.empty()) throw ConfigError("dataset", "path to a quadrature CSV is required");
      if (!std::filesystem::exists(cfg.dataset)) throw ConfigError("dataset", "file not found");
      if (!cfg.reference.empty() && !std::filesystem::exists(cfg.reference)) {
        throw ConfigError("reference", "file not found");
      }
      break;
    case Experiment::kWigner:
      if (cfg.state.empty()) throw ConfigError("state", "path to a density-matrix JSON is required");
      if (!std::filesystem::exists(cfg.state)) throw ConfigError("state", "file not found");
      break;
    case Experiment::kDistill:
      break;
  }
}

void apply_json(ExperimentConfig& cfg, std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config", e.what());
  }
  if (!j.is_object()) throw ConfigError("config", "must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "experiment") {
      const auto e = parse_experiment(get<std::string>(value, key));
      if (!e) throw ConfigError(key, "unknown experiment");
      cfg.experiment = *e;
    } else if (key == "dim") {
      cfg.dim = get<int>(value, key);
    } else if (key == "squeezing-db") {
      cfg.squeezing_db = number_list(value, key);
    } else if (key == "squeezing-r") {
      cfg.squeezing_r = number_list(value, key);
    } else if (key == "reflectivity") {
      cfg.reflectivity = get<double>(value, key);
    } else if (key == "reflectivity-dual") {
      cfg.reflectivity_dual = get<double>(value, key);
    } else if (key == "eta-trigger") {
      cfg.eta_trigger = get<double>(value, key);
    } else if (key == "eta-homodyne") {
      cfg.eta_homodyne = get<double>(value, key);
    } else if (key == "beta-re") {
      cfg.beta_re = number_list(value, key);
    } else if (key == "beta-im") {
      cfg.beta_im = number_list(value, key);
    } else if (key == "phases") {
      cfg.phases = get<int>(value, key);
    } else if (key == "samples") {
      cfg.samples = get<int>(value, key);
    } else if (key == "seed") {
      cfg.seed = get<std::uint64_t>(value, key);
    } else if (key == "out") {
      cfg.out = get<std::string>(value, key);
    } else if (key == "recon-dim") {
      cfg.recon_dim = get<int>(value, key);
    } else if (key == "dataset") {
      cfg.dataset = get<std::string>(value, key);
    } else if (key == "state") {
      cfg.state = get<std::string>(value, key);
    } else if (key == "reference") {
      cfg.reference = get<std::string>(value, key);
    } else if (key == "grid-min") {
      cfg.grid_min = get<double>(value, key);
    } else if (key == "grid-max") {
      cfg.grid_max = get<double>(value, key);
    } else if (key == "grid-points") {
      cfg.grid_points = get<int>(value, key);
    } else if (key == "qubit-wigner") {
      cfg.qubit_wigner = get<bool>(value, key);
    } else {
      throw ConfigError(key, "unknown configuration key");
    }
  }
}

int source_dim_for(double r, int at_least) {
  const double t = std::tanh(r);
  double amp_sq = 1.0 / std::cosh(r);
  double inside = 0.0;
  int n = 0;
  while (true) {
    inside += amp_sq;
    // Next even level: |c_{n+2}|^2 = |c_n|^2 t^2 (n+1)/(n+2).
    amp_sq *= t * t * (n + 1.0) / (n + 2.0);
    n += 2;
    if (n + 1 >= at_least && 1.0 - inside < 1e-12) return n + 1;
    if (n > 2000) return n + 1;
  }
}

RunSummary run_kitten(const ExperimentConfig& cfg) {
  const double r = cfg.squeezing().front();
  const TapChannel tap{cfg.reflectivity, cfg.eta_trigger, {}};
  const auto conditioned = tap_and_click(squeezed_vacuum(r, cfg.dim), tap);
  const DensityMatrix& truth = conditioned.state;

  QuadratureDataset data = sample_quadratures(truth, phase_grid(cfg.phases), cfg.samples, cfg.eta_homodyne, *cfg.seed);
  data.state_label = "kitten r=" + num(r) + " R=" + num(cfg.reflectivity) + " eta_t=" + num(cfg.eta_trigger);

  const MaxLikResult recon = maxlik_reconstruct(data, MaxLikConfig{cfg.recon_dim});
  const DensityMatrix truth_cropped = truth.resized(cfg.recon_dim).normalized();
  const DensityMatrix detected = loss_channel(truth, cfg.eta_homodyne).resized(cfg.recon_dim).normalized();

  RunSummary summary;
  auto emit = [&](const std::string& name, const std::string& text) {
    const auto path = cfg.out / name;
    io::write_text(path, text);
    summary.files.push_back(path);
  };
  emit("kitten_true.json", io::density_matrix_json(truth));
  const auto dataset_path = cfg.out / "kitten_dataset.csv";
  io::write_quadrature_dataset(dataset_path, data);
  summary.files.push_back(dataset_path);
  summary.files.push_back(io::sidecar_path(dataset_path));
  emit("kitten_reconstructed.json", io::density_matrix_json(recon.state));
  emit("kitten_wigner.csv", io::wigner_csv(grid_for(recon.state, cfg)));

  json report;
  report["fidelity"] = fidelity(recon.state, truth_cropped);
  report["fidelity_vs_detected"] = fidelity(recon.state, detected);
  report["w00"] = wigner(recon.state, 0.0, 0.0);
  report["w00_true"] = wigner(truth, 0.0, 0.0);
  report["p_click"] = conditioned.success_probability;
  report["iterations"] = recon.iterations;
  report["final_delta"] = recon.final_delta;
  report["loglik"] = recon.log_likelihood;
  report["converged"] = recon.converged;
  report["r"] = r;
  report["seed"] = *cfg.seed;
  emit("kitten_report.json", report.dump(2) + "\n");
  return summary;
}

RunSummary run_distill(const ExperimentConfig& cfg) {
  const auto single = DistillationScenario::single(cfg.reflectivity, cfg.eta_trigger);
  const auto dual = DistillationScenario::dual(cfg.reflectivity_dual, cfg.eta_trigger);
  constexpr double kSqueezedAxis = std::numbers::pi / 2.0;

  std::string csv = "r,db_in,en_none,en_single,en_dual,p_single,p_dual,var_minus_none_db,var_minus_dual_db\n";
  for (double r : cfg.squeezing()) {
    const TwoModeState source = split_half(squeezed_vacuum(r, source_dim_for(r, 2 * cfg.dim)), cfg.dim, cfg.dim);
    const auto s = distill(source, single);
    const auto d = distill(source, dual);
    csv += num(r) + ',' + num(r_to_db(r)) + ',' + num(log_negativity(source)) + ',' + num(log_negativity(s.state)) +
           ',' + num(log_negativity(d.state)) + ',' + num(s.success_probability) + ',' +
           num(d.success_probability) + ',' + num(to_db(joint_quadrature_variance(source, kSqueezedAxis, -1))) + ',' +
           num(to_db(joint_quadrature_variance(d.state, kSqueezedAxis, -1))) + '\n';
  }
  const auto path = cfg.out / "distill.csv";
  io::write_text(path, csv);
  return {{path}};
}

RunSummary run_qubit(const ExperimentConfig& cfg) {
  const double r = cfg.squeezing().front();
  const DensityMatrix source = squeezed_vacuum(r, cfg.dim);
  const std::size_t count = std::max(cfg.beta_re.size(), cfg.beta_im.size());
  RunSummary summary;
  std::string csv = "re_beta,im_beta,theta_deg,phi_deg,purity,subspace_weight,p_click\n";
  constexpr double kDeg = 180.0 / std::numbers::pi;
  for (std::size_t i = 0; i < count; ++i) {
    const double re = cfg.beta_re.empty() ? 0.0 : cfg.beta_re[i];
    const double im = cfg.beta_im.empty() ? 0.0 : cfg.beta_im[i];
    const auto conditioned = tap_and_click(source, TapChannel{cfg.reflectivity, cfg.eta_trigger, {re, im}});
    const QubitParams q = qubit_params(conditioned.state);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    csv += num(re) + ',' + num(im) + ',' + num(q.has_angles ? q.theta * kDeg : nan) + ',' +
           num(q.has_angles ? q.phi * kDeg : nan) + ',' + num(q.purity) + ',' + num(q.subspace_weight) + ',' +
           num(conditioned.success_probability) + '\n';
    if (cfg.qubit_wigner) {
      const auto path = cfg.out / ("qubit_wigner_" + std::to_string(i) + ".csv");
      io::write_text(path, io::wigner_csv(grid_for(conditioned.state, cfg)));
      summary.files.push_back(path);
    }
  }
  const auto path = cfg.out / "qubit.csv";
  io::write_text(path, csv);
  summary.files.insert(summary.files.begin(), path);
  return summary;
}

RunSummary run_tomo(const ExperimentConfig& cfg) {
  const QuadratureDataset data = io::read_quadrature_dataset(cfg.dataset);
  const MaxLikResult recon = maxlik_reconstruct(data, MaxLikConfig{cfg.recon_dim});
  io::ReconstructionReport report{recon.iterations, recon.final_delta, recon.log_likelihood, recon.converged, {}};
  if (!cfg.reference.empty()) {
    report.fidelity_vs_reference = fidelity(recon.state, load_state(cfg.reference).resized(cfg.recon_dim).normalized());
  }
  const auto state_path = cfg.out / "tomo_reconstructed.json";
  const auto report_path = cfg.out / "tomo_report.json";
  io::write_text(state_path, io::density_matrix_json(recon.state));
  io::write_text(report_path, io::reconstruction_report_json(report));
  return {{state_path, report_path}};
}

RunSummary run_wigner(const ExperimentConfig& cfg) {
  const DensityMatrix state = load_state(cfg.state);
  if (!state.validate().ok()) throw ConfigError("state", "input fails density-matrix checks");
  const auto path = cfg.out / "wigner.csv";
  io::write_text(path, io::wigner_csv(grid_for(state, cfg)));
  return {{path}};
}

RunSummary run(const ExperimentConfig& cfg) {
  validate(cfg);
  switch (cfg.experiment) {
    case Experiment::kKitten: return run_kitten(cfg);
    case Experiment::kDistill: return run_distill(cfg);
    case Experiment::kQubit: return run_qubit(cfg);
    case Experiment::kTomo: return run_tomo(cfg);
    case Experiment::kWigner: return run_wigner(cfg);
  }
  throw ConfigError("experiment", "unknown experiment");
}

}  // namespace photosub::tools
