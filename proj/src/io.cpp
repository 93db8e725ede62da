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

#include "tritonsim/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace tritonsim {

namespace {

template <typename T>
void read_field(const nlohmann::json& j, const char* key, T& into) {
  if (j.contains(key)) into = j.at(key).get<T>();
}

}  // namespace

nlohmann::json config_to_json(const RunConfig& c) {
  nlohmann::json j;
  j["t"] = c.t;
  j["u"] = c.u;
  j["v"] = c.v;
  j["ansatz_blocks"] = c.ansatz_blocks;
  j["max_iterations"] = c.max_iterations;
  j["initial_step"] = c.initial_step;
  j["tolerance"] = c.tolerance;
  j["optimizer"] = c.optimizer;
  j["eval_shots"] = c.eval_shots;
  j["lambda"] = c.lambda;
  j["shots"] = c.shots;
  j["sigma"] = c.sigma;
  j["mc_samples"] = c.mc_samples;
  j["mapping"] = c.mapping;
  j["alpha0"] = c.alpha0;
  j["theta_points"] = c.theta_points;
  j["phi_points"] = c.phi_points;
  if (c.lambda_max)
    j["lambda_max"] = *c.lambda_max;
  else
    j["lambda_max"] = nullptr;
  j["lambda_points"] = c.lambda_points;
  j["restarts"] = c.restarts;
  j["seed"] = c.seed;
  j["jobs"] = c.jobs;
  return j;
}

RunConfig config_from_json(const nlohmann::json& j) {
  RunConfig c;
  read_field(j, "t", c.t);
  read_field(j, "u", c.u);
  read_field(j, "v", c.v);
  read_field(j, "ansatz_blocks", c.ansatz_blocks);
  read_field(j, "max_iterations", c.max_iterations);
  read_field(j, "initial_step", c.initial_step);
  read_field(j, "tolerance", c.tolerance);
  read_field(j, "optimizer", c.optimizer);
  read_field(j, "eval_shots", c.eval_shots);
  read_field(j, "lambda", c.lambda);
  read_field(j, "shots", c.shots);
  read_field(j, "sigma", c.sigma);
  read_field(j, "mc_samples", c.mc_samples);
  read_field(j, "mapping", c.mapping);
  read_field(j, "alpha0", c.alpha0);
  read_field(j, "theta_points", c.theta_points);
  read_field(j, "phi_points", c.phi_points);
  if (j.contains("lambda_max") && !j.at("lambda_max").is_null())
    c.lambda_max = j.at("lambda_max").get<double>();
  read_field(j, "lambda_points", c.lambda_points);
  read_field(j, "restarts", c.restarts);
  read_field(j, "seed", c.seed);
  read_field(j, "jobs", c.jobs);
  if (c.optimizer != "cobyla" && c.optimizer != "nelder-mead")
    throw std::invalid_argument("config: unknown optimizer '" + c.optimizer + "'");
  return c;
}

RunConfig load_config(const std::string& path) {
  return config_from_json(nlohmann::json::parse(read_text_file(path)));
}

VariationalSettings settings_from_config(const RunConfig& config) {
  VariationalSettings s;
  s.ansatz.num_qubits = 4;
  s.ansatz.num_blocks = config.ansatz_blocks;
  s.max_iterations = config.max_iterations;
  s.initial_step = config.initial_step;
  s.convergence_tolerance = config.tolerance;
  s.optimizer = config.optimizer == "cobyla" ? OptimizerKind::Cobyla
                                             : OptimizerKind::NelderMead;
  s.shots_per_term = config.eval_shots;
  return s;
}

nlohmann::json result_to_json(const VariationalResult& result,
                              const RunConfig& config) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["algorithm"] = algorithm_name(result.algorithm);
  j["seed"] = result.seed;
  j["config"] = config_to_json(config);
  j["theta"] = std::vector<double>(result.theta.data(),
                                   result.theta.data() + result.theta.size());
  j["energy"] = result.energy;
  j["loss"] = result.loss;
  if (result.overlap_with_ground)
    j["overlap_with_ground"] = *result.overlap_with_ground;
  j["feasible"] = result.feasible;
  if (!result.overlap_bounds.empty())
    j["overlap_bounds"] = result.overlap_bounds;
  j["evaluations"] = result.trace.evaluations();
  j["termination"] = result.trace.termination == Termination::Converged
                         ? "converged"
                         : "iteration-cap";
  return j;
}

Eigen::VectorXd load_theta(const std::string& path) {
  const nlohmann::json j = nlohmann::json::parse(read_text_file(path));
  const nlohmann::json* arr = nullptr;
  if (j.is_array())
    arr = &j;
  else if (j.contains("theta"))
    arr = &j.at("theta");
  else
    throw std::invalid_argument("params file: no theta array in " + path);
  const auto values = arr->get<std::vector<double>>();
  Eigen::VectorXd theta(static_cast<Eigen::Index>(values.size()));
  for (std::size_t k = 0; k < values.size(); ++k)
    theta[static_cast<Eigen::Index>(k)] = values[k];
  return theta;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string csv_preamble(const RunConfig& config) {
  return std::string("# tritonsim ") + kVersion +
         " config=" + config_to_json(config).dump() + "\n";
}

std::string lambda_sweep_to_csv(const std::vector<LambdaPoint>& points) {
  std::ostringstream os;
  os.precision(17);
  os << "lambda,loss,energy,overlap\n";
  for (const auto& p : points)
    os << p.lambda << "," << p.loss << "," << p.energy << "," << p.overlap
       << "\n";
  return os.str();
}

std::string mc_to_csv(const EnergyDistribution& dist) {
  std::ostringstream os;
  os.precision(17);
  os << "energy\n";
  for (double e : dist.samples) os << e << "\n";
  return os.str();
}

std::vector<SweepPoint> parse_sweep_csv(const std::string& content) {
  std::vector<SweepPoint> points;
  std::istringstream is(content);
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {  // column header row
      header_seen = true;
      continue;
    }
    std::istringstream ls(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (cells.size() != 14)
      throw std::invalid_argument("sweep csv: expected 14 columns");
    SweepPoint p;
    p.estimate.theta = std::stod(cells[0]);
    p.estimate.phi = std::stod(cells[1]);
    p.coeffs.alpha = std::stod(cells[2]);
    p.coeffs.beta = std::stod(cells[3]);
    p.coeffs.gamma = std::stod(cells[4]);
    p.coeffs.delta = std::stod(cells[5]);
    p.coeffs.theta = p.estimate.theta;
    p.coeffs.phi = p.estimate.phi;
    p.lambda_norm = std::stod(cells[6]);
    p.estimate.shots = std::stoll(cells[7]);
    p.estimate.successes = std::stoll(cells[8]);
    p.estimate.transitions = std::stoll(cells[9]);
    p.estimate.p_success = std::stod(cells[10]);
    const double pt = std::stod(cells[11]);
    if (!std::isnan(pt)) p.estimate.p_transition = pt;
    p.estimate.se_success = std::stod(cells[12]);
    const double set = std::stod(cells[13]);
    if (!std::isnan(set)) p.estimate.se_transition = set;
    points.push_back(std::move(p));
  }
  return points;
}

}  // namespace tritonsim
