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

// Command-line pipeline: spectrum, the three variational drivers, the lambda
// calibration sweep, Monte-Carlo error propagation, and the LCU transition
// sweeps. Data goes to stdout unless -o is given; diagnostics go to stderr.
// Exit codes: 0 success, 1 usage/config error, 2 iteration-cap, 3 validation
// failure.

#include <cmath>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tritonsim/io.hpp"
#include "tritonsim/oracle.hpp"
#include "tritonsim/rng.hpp"

namespace {

using namespace tritonsim;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIterationCap = 2;
constexpr int kExitValidation = 3;

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content;
  else
    write_text_file(out_path, content);
}

std::vector<double> linspace(double lo, double hi, int count, bool inclusive) {
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    xs.push_back(lo);
    return xs;
  }
  const double span = inclusive ? (hi - lo) / (count - 1) : (hi - lo) / count;
  for (int i = 0; i < count; ++i) xs.push_back(lo + span * i);
  return xs;
}

double spectral_gap(const RunConfig& config) {
  const Spectrum s = diagonalize(build_triton_hamiltonian(config.t, config.u));
  const double e0 = s.eigenvalues[0];
  for (Eigen::Index k = 1; k < s.eigenvalues.size(); ++k)
    if (s.eigenvalues[k] > e0 + 1e-9) return s.eigenvalues[k] - e0;
  return 0.0;
}

VariationalResult pseudo_result(Algorithm algorithm, const Eigen::VectorXd& theta,
                                const RunConfig& config) {
  const PauliSum h = build_triton_hamiltonian(config.t, config.u);
  const VariationalSettings settings = settings_from_config(config);
  VariationalResult r;
  r.algorithm = algorithm;
  r.theta = theta;
  r.seed = config.seed;
  r.energy = expectation(h, ansatz_state(settings.ansatz, theta));
  r.loss = r.energy;
  return r;
}

int check_sweep_against_oracle(const std::vector<SweepPoint>& points) {
  constexpr double kSlack = 1e-12;
  int failures = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    const TransitionProbabilities oracle = exact_transition(p.coeffs);
    const double n = static_cast<double>(p.estimate.shots);
    const double sd_s = std::sqrt(oracle.p_success * (1.0 - oracle.p_success) / n);
    if (std::abs(p.estimate.p_success - oracle.p_success) > 3.0 * sd_s + kSlack) {
      std::cerr << "validate: row " << i << " p_success "
                << p.estimate.p_success << " vs exact " << oracle.p_success
                << " outside 3 sigma\n";
      ++failures;
    }
    if (p.estimate.successes > 0 && oracle.transition_defined) {
      const double m = static_cast<double>(p.estimate.successes);
      const double sd_t =
          std::sqrt(oracle.p_transition * (1.0 - oracle.p_transition) / m);
      if (std::abs(*p.estimate.p_transition - oracle.p_transition) >
          3.0 * sd_t + kSlack) {
        std::cerr << "validate: row " << i << " p_transition "
                  << *p.estimate.p_transition << " vs exact "
                  << oracle.p_transition << " outside 3 sigma\n";
        ++failures;
      }
    }
  }
  return failures;
}

void print_sweep_summary(const std::vector<SweepPoint>& points) {
  std::size_t argmax = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].estimate.p_transition && *points[i].estimate.p_transition > best) {
      best = *points[i].estimate.p_transition;
      argmax = i;
    }
  }
  if (best < 0.0) {
    std::cerr << "sweep: no successful shots at any grid point\n";
    return;
  }
  const double theta = points[argmax].estimate.theta;
  std::cerr << "sweep: max p_transition " << best << " at theta " << theta
            << " rad (" << theta * 180.0 / std::numbers::pi << " deg)\n";
}

struct Cli {
  std::string config_path;
  std::string out_path;
  std::string trace_path;
  std::string ground_path;
  std::string excited_path;
  std::string params_path;
  std::string input_path;
  double phi = 0.0;
  bool validate = false;

  // field overrides; applied on top of the config file
  std::optional<double> t, u, v, lambda, sigma, alpha0, initial_step, tolerance,
      lambda_max;
  std::optional<int> blocks, max_iterations, mc_samples, theta_points,
      phi_points, lambda_points, restarts, jobs, eval_shots;
  std::optional<std::int64_t> shots;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> mapping, optimizer;

  RunConfig resolve() const {
    RunConfig c = config_path.empty() ? RunConfig{} : load_config(config_path);
    auto apply = [](auto& into, const auto& from) {
      if (from) into = *from;
    };
    apply(c.t, t);
    apply(c.u, u);
    apply(c.v, v);
    apply(c.lambda, lambda);
    apply(c.sigma, sigma);
    apply(c.alpha0, alpha0);
    apply(c.initial_step, initial_step);
    apply(c.tolerance, tolerance);
    apply(c.ansatz_blocks, blocks);
    apply(c.max_iterations, max_iterations);
    apply(c.mc_samples, mc_samples);
    apply(c.theta_points, theta_points);
    apply(c.phi_points, phi_points);
    apply(c.lambda_points, lambda_points);
    apply(c.restarts, restarts);
    apply(c.jobs, jobs);
    apply(c.eval_shots, eval_shots);
    apply(c.shots, shots);
    apply(c.seed, seed);
    apply(c.mapping, mapping);
    apply(c.optimizer, optimizer);
    if (lambda_max) c.lambda_max = *lambda_max;
    if (c.optimizer != "cobyla" && c.optimizer != "nelder-mead")
      throw std::invalid_argument("config: unknown optimizer '" + c.optimizer + "'");
    return c;
  }
};

int cmd_spectrum(const Cli& cli) {
  const RunConfig config = cli.resolve();
  const Spectrum s = diagonalize(build_triton_hamiltonian(config.t, config.u));
  nlohmann::json j;
  j["version"] = kVersion;
  j["config"] = config_to_json(config);
  j["eigenvalues"] = std::vector<double>(
      s.eigenvalues.data(), s.eigenvalues.data() + s.eigenvalues.size());
  emit(j.dump(2) + "\n", cli.out_path);
  return kExitOk;
}

int finish_variational(const Cli& cli, const RunConfig& config,
                       const VariationalResult& result) {
  emit(result_to_json(result, config).dump(2) + "\n", cli.out_path);
  if (!cli.trace_path.empty())
    write_text_file(cli.trace_path, csv_preamble(config) + trace_to_csv(result.trace));
  std::cerr << algorithm_name(result.algorithm) << ": energy " << result.energy
            << " after " << result.trace.evaluations() << " evaluations\n";
  if (result.trace.termination == Termination::IterationCap &&
      cli.params_path.empty())
    return kExitIterationCap;
  return kExitOk;
}

int cmd_vqe(const Cli& cli) {
  const RunConfig config = cli.resolve();
  const PauliSum h = build_triton_hamiltonian(config.t, config.u);
  if (!cli.params_path.empty()) {
    return finish_variational(
        cli, config,
        pseudo_result(Algorithm::Vqe, load_theta(cli.params_path), config));
  }
  const VariationalResult result =
      run_vqe(h, settings_from_config(config), config.seed);
  return finish_variational(cli, config, result);
}

int cmd_vqd(const Cli& cli) {
  const RunConfig config = cli.resolve();
  const PauliSum h = build_triton_hamiltonian(config.t, config.u);
  const VariationalSettings settings = settings_from_config(config);
  const VariationalResult ground =
      pseudo_result(Algorithm::Vqe, load_theta(cli.ground_path), config);
  if (!cli.params_path.empty()) {
    VariationalResult r = pseudo_result(Algorithm::Vqd, load_theta(cli.params_path), config);
    r.overlap_with_ground = overlap_sq(ansatz_state(settings.ansatz, ground.theta),
                                       settings.ansatz, r.theta);
    r.loss = r.energy + config.lambda * *r.overlap_with_ground;
    return finish_variational(cli, config, r);
  }
  const VariationalResult result =
      run_vqd(h, ground, config.lambda, settings, config.seed);
  return finish_variational(cli, config, result);
}

int cmd_vqeac(const Cli& cli) {
  const RunConfig config = cli.resolve();
  const PauliSum h = build_triton_hamiltonian(config.t, config.u);
  const VariationalSettings settings = settings_from_config(config);
  const VariationalResult ground =
      pseudo_result(Algorithm::Vqe, load_theta(cli.ground_path), config);
  if (!cli.params_path.empty()) {
    VariationalResult r =
        pseudo_result(Algorithm::VqeAc, load_theta(cli.params_path), config);
    r.overlap_with_ground = overlap_sq(ansatz_state(settings.ansatz, ground.theta),
                                       settings.ansatz, r.theta);
    r.feasible = *r.overlap_with_ground <= 1e-3 + 1e-6;
    return finish_variational(cli, config, r);
  }
  const VariationalResult result = run_vqeac(h, ground, settings, config.seed);
  return finish_variational(cli, config, result);
}

int cmd_lambda_sweep(const Cli& cli) {
  const RunConfig config = cli.resolve();
  const PauliSum h = build_triton_hamiltonian(config.t, config.u);
  const VariationalResult ground =
      pseudo_result(Algorithm::Vqe, load_theta(cli.ground_path), config);
  const double hi = config.lambda_max ? *config.lambda_max
                                      : 2.0 * spectral_gap(config);
  const std::vector<double> grid =
      linspace(0.0, hi, config.lambda_points, true);
  const auto points =
      lambda_sweep(h, ground, grid, settings_from_config(config), config.seed,
                   config.restarts, config.jobs);
  emit(csv_preamble(config) + lambda_sweep_to_csv(points), cli.out_path);
  return kExitOk;
}

int cmd_mc_error(const Cli& cli) {
  const RunConfig config = cli.resolve();
  const PauliSum h = build_triton_hamiltonian(config.t, config.u);
  const VariationalSettings settings = settings_from_config(config);
  const Eigen::VectorXd theta = load_theta(cli.params_path);
  const EnergyDistribution dist =
      monte_carlo_energy(theta, config.sigma, config.mc_samples, h,
                         settings.ansatz, config.seed, config.jobs);
  emit(csv_preamble(config) + mc_to_csv(dist), cli.out_path);
  std::cerr << "mc-error: mean " << dist.mean << " stddev " << dist.stddev
            << " over " << dist.samples.size() << " samples\n";
  return kExitOk;
}

int cmd_lcu_sweep(const Cli& cli, bool three_d) {
  const RunConfig config = cli.resolve();
  const std::vector<double> theta_grid =
      linspace(0.0, std::numbers::pi, config.theta_points, true);
  std::vector<SweepPoint> points;
  if (three_d) {
    const std::vector<double> phi_grid =
        linspace(0.0, 2.0 * std::numbers::pi, config.phi_points, false);
    points = sweep3d(theta_grid, phi_grid, config.mapping, config.alpha0,
                     config.shots, config.seed, config.jobs);
  } else {
    points = sweep(theta_grid, cli.phi, config.mapping, config.alpha0,
                   config.shots, config.seed, config.jobs);
  }
  emit(csv_preamble(config) + sweep_to_csv(points), cli.out_path);
  print_sweep_summary(points);
  if (cli.validate && check_sweep_against_oracle(points) > 0)
    return kExitValidation;
  return kExitOk;
}

int cmd_validate(const Cli& cli) {
  const auto points = parse_sweep_csv(read_text_file(cli.input_path));
  const int failures = check_sweep_against_oracle(points);
  if (failures > 0) {
    std::cerr << "validate: " << failures << " of " << points.size()
              << " rows failed\n";
    return kExitValidation;
  }
  std::cerr << "validate: all " << points.size() << " rows within 3 sigma\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational eigenstate preparation and post-selected LCU "
               "transition simulation for a fixed-site triton model"};
  app.require_subcommand(1);
  app.fallthrough();

  Cli cli;
  app.add_option("--config", cli.config_path, "JSON config file");
  app.add_option("--seed", cli.seed, "run seed");
  app.add_option("--jobs", cli.jobs, "worker threads (default 1, sequential)");
  app.add_option("--t", cli.t, "hopping coupling t");
  app.add_option("--u", cli.u, "contact coupling U");
  app.add_option("--v", cli.v, "coupling V (recorded, unused)");
  app.add_option("--blocks", cli.blocks, "ansatz block count");
  app.add_option("--max-iterations", cli.max_iterations, "optimizer budget");
  app.add_option("--initial-step", cli.initial_step, "optimizer initial step");
  app.add_option("--tolerance", cli.tolerance, "optimizer final step");
  app.add_option("--optimizer", cli.optimizer, "cobyla | nelder-mead");
  app.add_option("--eval-shots", cli.eval_shots,
                 "shots per Pauli term in the objective (0 = exact)");
  app.add_option("--lambda", cli.lambda, "deflation weight");
  app.add_option("--shots", cli.shots, "LCU shots per grid point");
  app.add_option("--sigma", cli.sigma, "parameter noise for mc-error");
  app.add_option("--mc-samples", cli.mc_samples, "Monte-Carlo sample count");
  app.add_option("--mapping", cli.mapping, "coefficient mapping name");
  app.add_option("--alpha0", cli.alpha0, "monopole coefficient alpha0");
  app.add_option("--theta-points", cli.theta_points, "theta grid size");
  app.add_option("--phi-points", cli.phi_points, "phi grid size (3-D sweep)");
  app.add_option("--lambda-max", cli.lambda_max,
                 "lambda grid upper end (default 2 * gap)");
  app.add_option("--lambda-points", cli.lambda_points, "lambda grid size");
  app.add_option("--restarts", cli.restarts, "restarts per lambda point");

  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "exact eigenvalues as JSON");
  spectrum_cmd->add_option("-o,--out", cli.out_path, "output file");

  auto add_variational_options = [&](CLI::App* cmd, bool needs_ground) {
    cmd->add_option("-o,--out", cli.out_path, "result JSON file");
    cmd->add_option("--trace", cli.trace_path, "write per-iteration CSV here");
    cmd->add_option("--params-file", cli.params_path,
                    "bind this theta vector instead of optimizing");
    if (needs_ground)
      cmd->add_option("--ground", cli.ground_path,
                      "ground-state result or params file")
          ->required();
  };
  auto* vqe_cmd = app.add_subcommand("vqe", "ground-state search");
  add_variational_options(vqe_cmd, false);
  auto* vqd_cmd = app.add_subcommand("vqd", "excited state by deflation");
  add_variational_options(vqd_cmd, true);
  auto* vqeac_cmd =
      app.add_subcommand("vqeac", "excited state by constrained search");
  add_variational_options(vqeac_cmd, true);

  auto* lambda_cmd = app.add_subcommand(
      "lambda-sweep", "VQD loss as a function of the deflation weight");
  lambda_cmd->add_option("-o,--out", cli.out_path, "output CSV");
  lambda_cmd->add_option("--ground", cli.ground_path, "ground-state result file")
      ->required();

  auto* mc_cmd = app.add_subcommand(
      "mc-error", "energy distribution under parameter noise");
  mc_cmd->add_option("-o,--out", cli.out_path, "output CSV");
  mc_cmd->add_option("--params-file", cli.params_path, "theta vector file")
      ->required();

  auto* sweep_cmd =
      app.add_subcommand("lcu-sweep", "P_s and P_t over the polar angle");
  sweep_cmd->add_option("-o,--out", cli.out_path, "output CSV");
  sweep_cmd->add_option("--phi", cli.phi, "fixed xy-plane angle (radians)");
  sweep_cmd->add_flag("--validate", cli.validate,
                      "check every row against the exact oracle");
  sweep_cmd->add_option("--ground", cli.ground_path,
                        "recorded in metadata only");
  sweep_cmd->add_option("--excited", cli.excited_path,
                        "recorded in metadata only");

  auto* sweep3d_cmd =
      app.add_subcommand("lcu-sweep3d", "P_s and P_t over (theta, phi)");
  sweep3d_cmd->add_option("-o,--out", cli.out_path, "output CSV");

  auto* validate_cmd =
      app.add_subcommand("validate", "re-check a sweep CSV against the oracle");
  validate_cmd->add_option("input", cli.input_path, "sweep CSV file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (spectrum_cmd->parsed()) return cmd_spectrum(cli);
    if (vqe_cmd->parsed()) return cmd_vqe(cli);
    if (vqd_cmd->parsed()) return cmd_vqd(cli);
    if (vqeac_cmd->parsed()) return cmd_vqeac(cli);
    if (lambda_cmd->parsed()) return cmd_lambda_sweep(cli);
    if (mc_cmd->parsed()) return cmd_mc_error(cli);
    if (sweep_cmd->parsed()) return cmd_lcu_sweep(cli, false);
    if (sweep3d_cmd->parsed()) return cmd_lcu_sweep(cli, true);
    if (validate_cmd->parsed()) return cmd_validate(cli);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
