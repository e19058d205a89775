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

// photosub: command-line driver for the photon-subtraction experiments.
//
// Exit codes: 0 success, 2 invalid configuration or input, 3 numerical failure.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "experiments.hpp"
#include "photosub/error.hpp"
#include "photosub/io.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

int exit_code_for(photosub::ErrorKind kind) {
  using photosub::ErrorKind;
  switch (kind) {
    case ErrorKind::kParse:
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kInvalidDimension:
    case ErrorKind::kEmptyDataset:
      return kExitValidation;
    default:
      return kExitNumerical;
  }
}

}  // namespace

int main(int argc, char** argv) {
  using photosub::tools::ExperimentConfig;
  namespace tools = photosub::tools;

  CLI::App app{
      "photosub: photon-subtraction experiments (kitten states, entanglement distillation, squeezed qubits).\n"
      "Squeezing in dB converts as r = dB / (20 log10 e), with dB = -10 log10(Var / 0.5) for the squeezed\n"
      "quadrature."};
  app.option_defaults()->always_capture_default();

  ExperimentConfig cli;
  std::string experiment;
  std::string config_path;
  std::string out = cli.out.string();
  std::string dataset;
  std::string state;
  std::string reference;
  std::uint64_t seed = 0;

  app.add_option("--config", config_path, "JSON file whose keys mirror the long flag names; flags override it");
  auto* opt_experiment = app.add_option("--experiment", experiment, "kitten | distill | qubit | tomo | wigner");
  auto* opt_dim = app.add_option("--dim", cli.dim, "Fock truncation per mode");
  auto* opt_db = app.add_option("--squeezing-db", cli.squeezing_db, "Input squeezing in dB (list for distill)")
                     ->delimiter(',');
  auto* opt_r = app.add_option("--squeezing-r", cli.squeezing_r, "Input squeezing parameter r (list for distill)")
                    ->delimiter(',');
  opt_db->excludes(opt_r);
  auto* opt_refl = app.add_option("--reflectivity", cli.reflectivity, "Tap reflectivity R (single-party tap)");
  auto* opt_refl_dual =
      app.add_option("--reflectivity-dual", cli.reflectivity_dual, "Tap reflectivity for dual-party distillation");
  auto* opt_eta_t = app.add_option("--eta-trigger", cli.eta_trigger, "Trigger detector efficiency");
  auto* opt_eta_h = app.add_option("--eta-homodyne", cli.eta_homodyne, "Homodyne detection efficiency");
  auto* opt_beta_re = app.add_option("--beta-re", cli.beta_re, "Real parts of the trigger displacement grid")
                          ->delimiter(',');
  auto* opt_beta_im = app.add_option("--beta-im", cli.beta_im, "Imaginary parts of the trigger displacement grid")
                          ->delimiter(',');
  auto* opt_phases = app.add_option("--phases", cli.phases, "Number of LO phases (6 or 12)");
  auto* opt_samples = app.add_option("--samples", cli.samples, "Samples per phase");
  auto* opt_seed = app.add_option("--seed", seed, "RNG seed (required for sampling experiments)");
  auto* opt_out = app.add_option("--out", out, "Output directory");
  auto* opt_recon = app.add_option("--recon-dim", cli.recon_dim, "Reconstruction dimension");
  auto* opt_dataset = app.add_option("--dataset", dataset, "Quadrature CSV for tomo");
  auto* opt_state = app.add_option("--state", state, "Density-matrix JSON for wigner");
  auto* opt_reference = app.add_option("--reference", reference, "Reference density-matrix JSON for tomo");
  auto* opt_gmin = app.add_option("--grid-min", cli.grid_min, "Wigner grid lower bound (both axes)");
  auto* opt_gmax = app.add_option("--grid-max", cli.grid_max, "Wigner grid upper bound (both axes)");
  auto* opt_gpts = app.add_option("--grid-points", cli.grid_points, "Wigner grid points per axis");
  auto* opt_qw = app.add_flag("--qubit-wigner", cli.qubit_wigner, "Also write a Wigner grid per qubit state");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    ExperimentConfig cfg;
    if (!config_path.empty()) tools::apply_json(cfg, photosub::io::read_text(config_path));

    if (opt_experiment->count() > 0) {
      const auto e = tools::parse_experiment(experiment);
      if (!e) throw tools::ConfigError("experiment", "unknown experiment '" + experiment + "'");
      cfg.experiment = *e;
    } else if (config_path.empty()) {
      throw tools::ConfigError("experiment", "required");
    }
    if (opt_dim->count()) cfg.dim = cli.dim;
    if (opt_db->count()) {
      cfg.squeezing_db = cli.squeezing_db;
      cfg.squeezing_r.clear();
    }
    if (opt_r->count()) {
      cfg.squeezing_r = cli.squeezing_r;
      cfg.squeezing_db.clear();
    }
    if (opt_refl->count()) cfg.reflectivity = cli.reflectivity;
    if (opt_refl_dual->count()) cfg.reflectivity_dual = cli.reflectivity_dual;
    if (opt_eta_t->count()) cfg.eta_trigger = cli.eta_trigger;
    if (opt_eta_h->count()) cfg.eta_homodyne = cli.eta_homodyne;
    if (opt_beta_re->count()) cfg.beta_re = cli.beta_re;
    if (opt_beta_im->count()) cfg.beta_im = cli.beta_im;
    if (opt_phases->count()) cfg.phases = cli.phases;
    if (opt_samples->count()) cfg.samples = cli.samples;
    if (opt_seed->count()) cfg.seed = seed;
    if (opt_out->count()) cfg.out = out;
    if (opt_recon->count()) cfg.recon_dim = cli.recon_dim;
    if (opt_dataset->count()) cfg.dataset = dataset;
    if (opt_state->count()) cfg.state = state;
    if (opt_reference->count()) cfg.reference = reference;
    if (opt_gmin->count()) cfg.grid_min = cli.grid_min;
    if (opt_gmax->count()) cfg.grid_max = cli.grid_max;
    if (opt_gpts->count()) cfg.grid_points = cli.grid_points;
    if (opt_qw->count()) cfg.qubit_wigner = cli.qubit_wigner;

    const tools::RunSummary summary = tools::run(cfg);
    for (const auto& path : summary.files) std::printf("wrote %s\n", path.string().c_str());
    return 0;
  } catch (const tools::ConfigError& e) {
    std::fprintf(stderr, "invalid configuration: %s\n", e.what());
    return kExitValidation;
  } catch (const photosub::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumerical;
  }
}
