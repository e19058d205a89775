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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "experiments.hpp"
#include "photosub/engineering.hpp"
#include "photosub/io.hpp"
#include "photosub/phase_space.hpp"

namespace photosub {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int exit_code;
  std::string err;
};

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "photosub_cli_test" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

RunResult run_cli(const std::string& args, const fs::path& dir) {
  const fs::path err = dir / "stderr.txt";
  const std::string cmd = std::string(PHOTOSUB_CLI_PATH) + " " + args + " > " + (dir / "stdout.txt").string() +
                          " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, io::read_text(err)};
}

json load_json(const fs::path& p) { return json::parse(io::read_text(p)); }

std::vector<std::vector<double>> load_csv(const fs::path& p, std::string* header = nullptr) {
  std::istringstream in(io::read_text(p));
  std::string line;
  std::getline(in, line);
  if (header) *header = line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

TEST(Cli, KittenEndToEnd) {
  const fs::path dir = scratch("kitten");
  const RunResult r = run_cli("--experiment kitten --squeezing-db 3 --reflectivity 0.05 --eta-homodyne 1 "
                              "--phases 12 --samples 30000 --seed 2026 --out " + dir.string(), dir);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  for (const char* f : {"kitten_true.json", "kitten_dataset.csv", "kitten_dataset.json", "kitten_reconstructed.json",
                        "kitten_wigner.csv", "kitten_report.json"}) {
    EXPECT_TRUE(fs::exists(dir / f)) << f;
  }
  const json report = load_json(dir / "kitten_report.json");
  EXPECT_GE(report["fidelity"].get<double>(), 0.98);
  EXPECT_LT(report["w00"].get<double>(), 0.0);
  // Emitted states satisfy the density-matrix invariants when reloaded.
  EXPECT_TRUE(io::parse_density_matrix(io::read_text(dir / "kitten_true.json")).validate().ok());
  EXPECT_TRUE(io::parse_density_matrix(io::read_text(dir / "kitten_reconstructed.json")).validate().ok());
  std::string header;
  const auto grid = load_csv(dir / "kitten_wigner.csv", &header);
  EXPECT_EQ(header, "x,p,w");
  EXPECT_EQ(grid.size(), 101u * 101u);
}

TEST(Cli, KittenBelowLossThresholdLosesNegativity) {
  const fs::path dir = scratch("kitten_lossy");
  const RunResult r = run_cli("--experiment kitten --squeezing-db 3 --eta-homodyne 0.4 --phases 12 --samples 30000 "
                              "--seed 5 --out " + dir.string(), dir);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_GT(load_json(dir / "kitten_report.json")["w00"].get<double>(), 0.0);
}

TEST(Cli, RerunIsByteIdentical) {
  const fs::path a = scratch("rerun_a");
  const fs::path b = scratch("rerun_b");
  const std::string args = "--experiment kitten --squeezing-r 0.3 --phases 6 --samples 2000 --dim 14 --seed 9 ";
  ASSERT_EQ(run_cli(args + "--out " + a.string(), a).exit_code, 0);
  ASSERT_EQ(run_cli(args + "--out " + b.string(), b).exit_code, 0);
  for (const auto& entry : fs::directory_iterator(a)) {
    const auto name = entry.path().filename();
    if (name == "stdout.txt" || name == "stderr.txt") continue;
    EXPECT_EQ(io::read_text(a / name), io::read_text(b / name)) << name;
  }
}

TEST(Cli, NoTapMeansNumericalFailure) {
  const fs::path dir = scratch("no_tap");
  const RunResult r =
      run_cli("--experiment kitten --squeezing-db 3 --reflectivity 0 --seed 1 --out " + dir.string(), dir);
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_NE(r.err.find("no-click-support"), std::string::npos);
}

TEST(Cli, ValidationErrorsNameTheField) {
  const fs::path dir = scratch("validation");
  RunResult r = run_cli("--experiment kitten --squeezing-db 3 --out " + dir.string(), dir);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("seed"), std::string::npos);
  r = run_cli("--experiment kitten --squeezing-db 3 --seed 1 --reflectivity 0.7 --out " + dir.string(), dir);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("reflectivity"), std::string::npos);
  r = run_cli("--experiment distill --out " + dir.string(), dir);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("squeezing"), std::string::npos);
  r = run_cli("--experiment bogus", dir);
  EXPECT_EQ(r.exit_code, 2);
  r = run_cli("--experiment kitten --squeezing-db 3 --squeezing-r 0.3 --seed 1", dir);
  EXPECT_EQ(r.exit_code, 2);
}

TEST(Cli, ConfigFileMirrorsFlags) {
  const fs::path dir = scratch("config");
  io::write_text(dir / "cfg.json", "{\"experiment\": \"distill\", \"squeezing-db\": [1, 3], \"dim\": 8, \"out\": \"" +
                                       (dir / "o").string() + "\"}");
  RunResult r = run_cli("--config " + (dir / "cfg.json").string(), dir);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(load_csv(dir / "o" / "distill.csv").size(), 2u);

  io::write_text(dir / "bad.json", "{\"experiment\": \"distill\", \"squeezing-db\": 1, \"colour\": 3}");
  r = run_cli("--config " + (dir / "bad.json").string(), dir);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("colour"), std::string::npos);
}

TEST(Cli, DistillSweep) {
  const fs::path dir = scratch("distill");
  const RunResult r = run_cli("--experiment distill --squeezing-db 1,2,3,4,5 --dim 12 --reflectivity 0.05 "
                              "--reflectivity-dual 0.10 --out " + dir.string(), dir);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  std::string header;
  const auto rows = load_csv(dir / "distill.csv", &header);
  EXPECT_EQ(header, "r,db_in,en_none,en_single,en_dual,p_single,p_dual,var_minus_none_db,var_minus_dual_db");
  ASSERT_EQ(rows.size(), 5u);
  for (const auto& row : rows) {
    EXPECT_GT(row[3], row[2]);
    EXPECT_GT(row[4], row[2]);
    EXPECT_NEAR(row[7], row[1], 1e-3);
  }
  for (std::size_t i = 0; i < 3; ++i) EXPECT_GT(rows[i][3], rows[i][4]);
  // Dual distillation adds squeezing below the tanh r ~ 1/2 crossover (1-4 dB here).
  for (std::size_t i = 0; i < 4; ++i) EXPECT_GT(rows[i][8], rows[i][1]);
}

TEST(Cli, QubitPolesAndPhase) {
  const fs::path dir = scratch("qubit");
  const RunResult r = run_cli("--experiment qubit --squeezing-db 3 --reflectivity 0.05 "
                              "--beta-re 0,0.0787,0,1.57 --beta-im 0,0,0.0787,0 --qubit-wigner --grid-points 21 "
                              "--out " + dir.string(), dir);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  std::string header;
  const auto rows = load_csv(dir / "qubit.csv", &header);
  EXPECT_EQ(header, "re_beta,im_beta,theta_deg,phi_deg,purity,subspace_weight,p_click");
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_DOUBLE_EQ(rows[0][2], 180.0);
  EXPECT_LT(rows[3][2], 10.0);
  double shift = std::abs(rows[1][3] - rows[2][3]);
  if (shift > 180.0) shift = 360.0 - shift;
  EXPECT_NEAR(shift, 90.0, 1.0);
  EXPECT_TRUE(fs::exists(dir / "qubit_wigner_3.csv"));
}

TEST(Cli, TomoOnVacuumDataset) {
  const fs::path dir = scratch("tomo");
  auto data = sample_quadratures(vacuum(6), phase_grid(6), 10000, 1.0, 77);
  data.state_label = "vacuum";
  io::write_quadrature_dataset(dir / "vac.csv", data);
  io::write_text(dir / "ref.json", io::density_matrix_json(vacuum(6)));
  const RunResult r = run_cli("--experiment tomo --dataset " + (dir / "vac.csv").string() + " --recon-dim 6 --reference " +
                              (dir / "ref.json").string() + " --out " + dir.string(), dir);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const json report = load_json(dir / "tomo_report.json");
  EXPECT_GE(report["fidelity_vs_reference"].get<double>(), 0.995);
  for (const char* key : {"iterations", "final_delta", "loglik"}) EXPECT_TRUE(report.contains(key)) << key;
}

TEST(Cli, TomoMalformedCsvNamesRow) {
  const fs::path dir = scratch("tomo_bad");
  io::write_text(dir / "bad.csv", "phase_rad,value\n0,0.1\n0,0.2\n0,oops\n");
  const RunResult r = run_cli("--experiment tomo --dataset " + (dir / "bad.csv").string() + " --out " + dir.string(), dir);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("line 4"), std::string::npos) << r.err;
}

TEST(Cli, WignerOfSinglePhoton) {
  const fs::path dir = scratch("wigner");
  io::write_text(dir / "one.json", io::density_matrix_json(fock(1, 10)));
  const RunResult r = run_cli("--experiment wigner --state " + (dir / "one.json").string() +
                              " --grid-min -4 --grid-max 4 --grid-points 101 --out " + dir.string(), dir);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto rows = load_csv(dir / "wigner.csv");
  ASSERT_EQ(rows.size(), 101u * 101u);
  auto min_it = std::min_element(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a[2] < b[2]; });
  EXPECT_NEAR((*min_it)[2], -1.0 / std::numbers::pi, 1e-9);
  EXPECT_NEAR((*min_it)[0], 0.0, 1e-12);
  EXPECT_NEAR((*min_it)[1], 0.0, 1e-12);
}

TEST(ExperimentConfig, SourceDimensionCoversTail) {
  for (double r : {0.1, 0.5, 1.0}) {
    const int d = tools::source_dim_for(r, 10);
    EXPECT_GE(d, 10);
    EXPECT_NO_THROW(squeezed_vacuum(r, d));
    EXPECT_LT(1.0 - squeezed_vacuum_ket(r, d).squaredNorm(), 1e-12);
  }
}

TEST(ExperimentConfig, ValidationInLibrary) {
  tools::ExperimentConfig cfg;
  cfg.experiment = tools::Experiment::kQubit;
  cfg.squeezing_db = {3.0};
  try {
    tools::validate(cfg);
    FAIL();
  } catch (const tools::ConfigError& e) {
    EXPECT_EQ(e.field(), "beta-re");
  }
  cfg.beta_re = {0.1, 0.2};
  cfg.beta_im = {0.1};
  try {
    tools::validate(cfg);
    FAIL();
  } catch (const tools::ConfigError& e) {
    EXPECT_EQ(e.field(), "beta-im");
  }
  cfg.beta_im = {0.0, 0.0};
  EXPECT_NO_THROW(tools::validate(cfg));
}

}  // namespace
}  // namespace photosub
