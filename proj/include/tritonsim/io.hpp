// Copyright 2026 The tritonsim authors
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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tritonsim/lcu.hpp"
#include "tritonsim/variational.hpp"

namespace tritonsim {

inline constexpr const char* kVersion = "0.1.0";

/// One reproducibility artifact per run: a single JSON document, overridable
/// field-by-field from the command line. Defaults follow the reference
/// setup where it states them (1500 iterations, lambda = 4, sigma = 0.001).
struct RunConfig {
  double t = 1.0;
  double u = -7.0;
  double v = 28.0;  // recorded for provenance; appears in no equation
  int ansatz_blocks = 4;
  int max_iterations = 1500;
  double initial_step = 0.5;
  double tolerance = 1e-4;
  std::string optimizer = "cobyla";  // or "nelder-mead"
  int eval_shots = 0;                // 0 = exact expectation values
  double lambda = 4.0;
  std::int64_t shots = 10000;
  double sigma = 0.001;
  int mc_samples = 10000;
  std::string mapping = "dipole-axis";
  double alpha0 = 1.0;
  int theta_points = 64;
  int phi_points = 16;
  std::optional<double> lambda_max;  // default: 2 * spectral gap
  int lambda_points = 9;
  int restarts = 1;
  std::uint64_t seed = 1;
  int jobs = 1;
};

nlohmann::json config_to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

VariationalSettings settings_from_config(const RunConfig& config);

/// Result document: algorithm, seed, config snapshot, theta, energies.
nlohmann::json result_to_json(const VariationalResult& result,
                              const RunConfig& config);

/// Reads a theta vector from either a result document or a bare
/// {"theta": [...]} parameter file.
Eigen::VectorXd load_theta(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

/// First line of every CSV artifact: "# tritonsim <version> config=<json>".
std::string csv_preamble(const RunConfig& config);

std::string lambda_sweep_to_csv(const std::vector<LambdaPoint>& points);
std::string mc_to_csv(const EnergyDistribution& dist);

/// Minimal reader for the sweep CSV (used by the validate command):
/// returns one parsed SweepPoint per data row, ignoring "#" comment lines.
std::vector<SweepPoint> parse_sweep_csv(const std::string& content);

}  // namespace tritonsim
