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

#include "photosub/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "photosub/error.hpp"

namespace photosub::io {

namespace {

using nlohmann::json;

std::string format_number(double value, int digits) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
  return buf;
}

json matrix_parts(const CMatrix& m, bool imaginary) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(imaginary ? m(i, j).imag() : m(i, j).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParse, std::string(what) + ": " + e.what());
  }
}

template <typename T>
T field(const json& j, const char* name) {
  if (!j.contains(name)) throw Error(ErrorKind::kParse, std::string("missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("field '") + name + "': " + e.what());
  }
}

CMatrix parse_matrix(const json& j, int dim) {
  const auto re = field<std::vector<std::vector<double>>>(j, "re");
  const auto im = field<std::vector<std::vector<double>>>(j, "im");
  if (re.size() != static_cast<std::size_t>(dim) || im.size() != static_cast<std::size_t>(dim)) {
    throw Error(ErrorKind::kParse, "'re'/'im' must have " + std::to_string(dim) + " rows");
  }
  CMatrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const auto ur = static_cast<std::size_t>(r);
    if (re[ur].size() != static_cast<std::size_t>(dim) || im[ur].size() != static_cast<std::size_t>(dim)) {
      throw Error(ErrorKind::kParse, "row " + std::to_string(r) + " of 're'/'im' must have " + std::to_string(dim) +
                                         " entries");
    }
    for (int c = 0; c < dim; ++c) m(r, c) = Complex(re[ur][static_cast<std::size_t>(c)], im[ur][static_cast<std::size_t>(c)]);
  }
  return m;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Splits a CSV row into exactly `count` doubles or throws naming the line.
std::vector<double> parse_row(std::string_view line, std::size_t count, std::size_t line_number) {
  std::vector<double> values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    const std::string_view cell = trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
      throw Error(ErrorKind::kParse, "line " + std::to_string(line_number) + ": cannot parse '" + std::string(cell) +
                                         "' as a number");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (values.size() != count) {
    throw Error(ErrorKind::kParse, "line " + std::to_string(line_number) + ": expected " + std::to_string(count) +
                                       " columns, found " + std::to_string(values.size()));
  }
  return values;
}

// Yields the data rows of a CSV after checking its header.
template <typename Fn>
void for_each_row(std::string_view csv, std::string_view header, std::size_t columns, Fn&& fn) {
  const auto lines = split_lines(csv);
  if (lines.empty() || trim(lines[0]) != header) {
    throw Error(ErrorKind::kParse, "line 1: expected header '" + std::string(header) + "'");
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    fn(parse_row(lines[i], columns, i + 1));
  }
}

}  // namespace

std::string density_matrix_json(const DensityMatrix& state) {
  json j;
  j["dim"] = state.dim();
  j["re"] = matrix_parts(state.matrix(), false);
  j["im"] = matrix_parts(state.matrix(), true);
  return j.dump() + "\n";
}

DensityMatrix parse_density_matrix(std::string_view text) {
  const json j = parse_json(text, "density matrix");
  const int dim = field<int>(j, "dim");
  if (dim < 1) throw Error(ErrorKind::kParse, "field 'dim' must be positive");
  return DensityMatrix(parse_matrix(j, dim));
}

std::string two_mode_state_json(const TwoModeState& state) {
  json j;
  j["dim"] = state.dim();
  j["dim_a"] = state.dim_a();
  j["dim_b"] = state.dim_b();
  j["re"] = matrix_parts(state.matrix(), false);
  j["im"] = matrix_parts(state.matrix(), true);
  return j.dump() + "\n";
}

TwoModeState parse_two_mode_state(std::string_view text) {
  const json j = parse_json(text, "two-mode state");
  const int da = field<int>(j, "dim_a");
  const int db = field<int>(j, "dim_b");
  if (da < 1 || db < 1) throw Error(ErrorKind::kParse, "fields 'dim_a'/'dim_b' must be positive");
  return TwoModeState(da, db, parse_matrix(j, da * db));
}

std::string wigner_csv(const WignerGrid& grid) {
  std::string out = "x,p,w\n";
  for (std::size_t ip = 0; ip < grid.ps.size(); ++ip) {
    for (std::size_t ix = 0; ix < grid.xs.size(); ++ix) {
      out += format_number(grid.xs[ix], 9);
      out += ',';
      out += format_number(grid.ps[ip], 9);
      out += ',';
      out += format_number(grid.values(static_cast<Eigen::Index>(ip), static_cast<Eigen::Index>(ix)), 12);
      out += '\n';
    }
  }
  return out;
}

std::string quadrature_csv(const QuadratureDataset& data) {
  std::string out = "phase_rad,value\n";
  for (const QuadratureSample& s : data.samples) {
    out += format_number(s.phase, 9);
    out += ',';
    out += format_number(s.value, 9);
    out += '\n';
  }
  return out;
}

std::string quadrature_sidecar_json(const QuadratureDataset& data) {
  json j;
  j["state_label"] = data.state_label;
  j["eta"] = data.efficiency;
  j["seed"] = data.seed;
  j["n_per_phase"] = data.n_per_phase;
  j["phases"] = data.phases;
  return j.dump(2) + "\n";
}

QuadratureDataset parse_quadrature_dataset(std::string_view csv, std::optional<std::string_view> sidecar) {
  QuadratureDataset data;
  for_each_row(csv, "phase_rad,value", 2, [&](const std::vector<double>& v) {
    data.samples.push_back({v[0], v[1]});
  });
  if (data.samples.empty()) throw Error(ErrorKind::kEmptyDataset, "quadrature CSV has no samples");

  if (sidecar) {
    const json j = parse_json(*sidecar, "dataset sidecar");
    data.state_label = field<std::string>(j, "state_label");
    data.efficiency = field<double>(j, "eta");
    data.seed = field<std::uint64_t>(j, "seed");
    data.n_per_phase = field<int>(j, "n_per_phase");
    data.phases = field<std::vector<double>>(j, "phases");
  }
  // The CSV holds phases rounded to 9 digits; snap them to the sidecar values
  // so samples and metadata agree exactly.
  for (QuadratureSample& s : data.samples) {
    bool matched = false;
    for (double phase : data.phases) {
      if (std::abs(phase - s.phase) <= 1e-8 * std::max(1.0, std::abs(phase))) {
        s.phase = phase;
        matched = true;
        break;
      }
    }
    if (!matched) data.phases.push_back(s.phase);
  }
  return data;
}

std::string joint_quadrature_csv(const JointQuadratureDataset& data) {
  std::string out = "phase_a,phase_b,x_a,x_b\n";
  for (const JointQuadratureSample& s : data.samples) {
    out += format_number(s.phase_a, 9) + ',' + format_number(s.phase_b, 9) + ',' + format_number(s.x_a, 9) + ',' +
           format_number(s.x_b, 9) + '\n';
  }
  return out;
}

JointQuadratureDataset parse_joint_quadrature_csv(std::string_view csv) {
  JointQuadratureDataset data;
  for_each_row(csv, "phase_a,phase_b,x_a,x_b", 4, [&](const std::vector<double>& v) {
    data.samples.push_back({v[0], v[1], v[2], v[3]});
    const std::pair<double, double> pair{v[0], v[1]};
    if (std::find(data.phase_pairs.begin(), data.phase_pairs.end(), pair) == data.phase_pairs.end()) {
      data.phase_pairs.push_back(pair);
    }
  });
  if (data.samples.empty()) throw Error(ErrorKind::kEmptyDataset, "joint quadrature CSV has no samples");
  return data;
}

std::string reconstruction_report_json(const ReconstructionReport& report) {
  json j;
  j["iterations"] = report.iterations;
  j["final_delta"] = report.final_delta;
  j["loglik"] = report.loglik;
  j["converged"] = report.converged;
  if (report.fidelity_vs_reference) j["fidelity_vs_reference"] = *report.fidelity_vs_reference;
  return j.dump(2) + "\n";
}

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path) {
  std::filesystem::path p = csv_path;
  p.replace_extension(".json");
  return p;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kInvalidArgument, "cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

void write_quadrature_dataset(const std::filesystem::path& csv_path, const QuadratureDataset& data) {
  write_text(csv_path, quadrature_csv(data));
  write_text(sidecar_path(csv_path), quadrature_sidecar_json(data));
}

QuadratureDataset read_quadrature_dataset(const std::filesystem::path& csv_path) {
  const std::string csv = read_text(csv_path);
  const auto side = sidecar_path(csv_path);
  if (std::filesystem::exists(side)) {
    const std::string meta = read_text(side);
    return parse_quadrature_dataset(csv, std::string_view(meta));
  }
  return parse_quadrature_dataset(csv);
}

}  // namespace photosub::io
