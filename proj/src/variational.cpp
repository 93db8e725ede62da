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

#include "tritonsim/variational.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "tritonsim/parallel.hpp"
#include "tritonsim/rng.hpp"

namespace tritonsim {

namespace {

Eigen::VectorXd uniform_start(int dim, std::uint64_t seed) {
  Eigen::VectorXd theta(dim);
  const std::uint64_t key = rng::derive(seed, 0x5eed);
  for (int k = 0; k < dim; ++k)
    theta[k] = -std::numbers::pi +
               2.0 * std::numbers::pi * rng::uniform(key, static_cast<std::uint64_t>(k));
  return theta;
}

OptimizationTrace run_optimizer(const OptimizationProblem& problem,
                                OptimizerKind kind, std::uint64_t seed) {
  return kind == OptimizerKind::Cobyla ? minimize(problem, seed)
                                       : minimize_nelder_mead(problem, seed);
}

double sample_stddev(const std::vector<double>& xs, double mean) {
  if (xs.size() < 2) return 0.0;
  double acc = 0.0;
  for (double x : xs) acc += (x - mean) * (x - mean);
  return std::sqrt(acc / static_cast<double>(xs.size() - 1));
}

}  // namespace

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Vqe: return "VQE";
    case Algorithm::Vqd: return "VQD";
    default: return "VQE/AC";
  }
}

Objective make_energy_objective(const PauliSum& h, const AnsatzSpec& spec,
                                int shots_per_term, std::uint64_t eval_seed) {
  if (shots_per_term == 0) {
    return [h, spec](const Eigen::VectorXd& theta) {
      return expectation(h, ansatz_state(spec, theta));
    };
  }
  // Shot mode: each Hermitian string measures +-1 with p(+) = (1 + <P>)/2;
  // drawing those outcomes gives the exact statistics of a shot-based
  // estimator without leaving the statevector representation.
  auto counter = std::make_shared<std::uint64_t>(0);
  const auto shots = static_cast<std::uint64_t>(shots_per_term);
  return [h, spec, shots, eval_seed, counter](const Eigen::VectorXd& theta) {
    const StateVector psi = ansatz_state(spec, theta);
    const std::uint64_t eval_key = rng::derive(eval_seed, (*counter)++);
    double energy = h.identity_offset;
    for (std::size_t t = 0; t < h.terms.size(); ++t) {
      PauliTerm unit = h.terms[t];
      const double coeff = unit.coefficient;
      unit.coefficient = 1.0;
      const StateVector applied = apply_term(unit, psi);
      const double expect = inner_product(psi, applied).real();
      const double p_plus = std::clamp((1.0 + expect) / 2.0, 0.0, 1.0);
      std::int64_t plus = 0;
      for (std::uint64_t s = 0; s < shots; ++s)
        if (rng::uniform(eval_key, t * shots + s) < p_plus) ++plus;
      const double estimate =
          2.0 * static_cast<double>(plus) / static_cast<double>(shots) - 1.0;
      energy += coeff * estimate;
    }
    return energy;
  };
}

double overlap_sq(const StateVector& ground, const AnsatzSpec& spec,
                  const Eigen::VectorXd& theta) {
  const std::complex<double> ip = inner_product(ground, ansatz_state(spec, theta));
  return std::norm(ip);
}

VariationalResult run_vqe(const PauliSum& h, const VariationalSettings& settings,
                          std::uint64_t seed) {
  if (h.num_qubits != settings.ansatz.num_qubits)
    throw std::invalid_argument("run_vqe: register size mismatch");

  OptimizationProblem problem;
  problem.objective =
      make_energy_objective(h, settings.ansatz, settings.shots_per_term,
                            rng::derive(seed, 0xe7a1));
  problem.initial_point = uniform_start(settings.ansatz.param_count(), seed);
  problem.max_iterations = settings.max_iterations;
  problem.initial_step = settings.initial_step;
  problem.convergence_tolerance = settings.convergence_tolerance;

  VariationalResult out;
  out.algorithm = Algorithm::Vqe;
  out.seed = seed;
  out.trace = run_optimizer(problem, settings.optimizer, seed);
  out.theta = out.trace.best_point;
  out.energy = expectation(h, ansatz_state(settings.ansatz, out.theta));
  out.loss = out.energy;
  return out;
}

VariationalResult run_vqd(const PauliSum& h, const VariationalResult& ground,
                          double lambda, const VariationalSettings& settings,
                          std::uint64_t seed) {
  if (lambda < 0.0) throw std::invalid_argument("run_vqd: lambda must be >= 0");
  const StateVector g = ansatz_state(settings.ansatz, ground.theta);
  const Objective energy =
      make_energy_objective(h, settings.ansatz, settings.shots_per_term,
                            rng::derive(seed, 0xe7a1));
  const AnsatzSpec spec = settings.ansatz;

  OptimizationProblem problem;
  problem.objective = [energy, g, spec, lambda](const Eigen::VectorXd& theta) {
    return energy(theta) + lambda * overlap_sq(g, spec, theta);
  };
  problem.initial_point = uniform_start(spec.param_count(), seed);
  problem.max_iterations = settings.max_iterations;
  problem.initial_step = settings.initial_step;
  problem.convergence_tolerance = settings.convergence_tolerance;

  VariationalResult out;
  out.algorithm = Algorithm::Vqd;
  out.seed = seed;
  out.trace = run_optimizer(problem, settings.optimizer, seed);
  out.theta = out.trace.best_point;
  out.energy = expectation(h, ansatz_state(spec, out.theta));
  out.overlap_with_ground = overlap_sq(g, spec, out.theta);
  out.loss = out.energy + lambda * *out.overlap_with_ground;
  return out;
}

VariationalResult run_vqeac(const PauliSum& h, const VariationalResult& ground,
                            const VariationalSettings& settings,
                            std::uint64_t seed, double initial_bound,
                            double final_bound) {
  if (initial_bound < final_bound || final_bound <= 0.0)
    throw std::invalid_argument("run_vqeac: bad overlap bound schedule");
  const StateVector g = ansatz_state(settings.ansatz, ground.theta);
  const AnsatzSpec spec = settings.ansatz;
  const Objective energy =
      make_energy_objective(h, spec, settings.shots_per_term,
                            rng::derive(seed, 0xe7a1));
  const double kFinalBound = final_bound;

  VariationalResult out;
  out.algorithm = Algorithm::VqeAc;
  out.seed = seed;

  Eigen::VectorXd start = uniform_start(spec.param_count(), seed);
  Eigen::VectorXd best = start;
  double bound = initial_bound;
  while (true) {
    out.overlap_bounds.push_back(bound);
    OptimizationProblem stage;
    stage.objective = energy;
    // A bound of 1 can never bind (overlap <= 1): plain VQE, no constraint.
    if (bound < 1.0)
      stage.inequality_constraints.push_back(
          [g, spec, bound](const Eigen::VectorXd& theta) {
            return bound - overlap_sq(g, spec, theta);
          });
    stage.initial_point = start;
    stage.max_iterations = settings.max_iterations;
    stage.initial_step = settings.initial_step;
    stage.convergence_tolerance = settings.convergence_tolerance;

    const OptimizationTrace stage_trace =
        run_optimizer(stage, settings.optimizer, seed);
    out.trace.records.insert(out.trace.records.end(),
                             stage_trace.records.begin(),
                             stage_trace.records.end());
    out.trace.termination = stage_trace.termination;

    if (overlap_sq(g, spec, stage_trace.best_point) <= bound + 1e-6) {
      best = stage_trace.best_point;
      start = best;
    }
    if (bound <= kFinalBound) break;
    bound /= 2.0;
  }

  out.theta = best;
  out.energy = expectation(h, ansatz_state(spec, out.theta));
  out.loss = out.energy;
  out.overlap_with_ground = overlap_sq(g, spec, out.theta);
  out.feasible = *out.overlap_with_ground <= kFinalBound + 1e-6;
  out.trace.best_point = out.theta;
  out.trace.best_objective = out.energy;
  out.trace.best_constraints = Eigen::VectorXd::Constant(
      1, kFinalBound - *out.overlap_with_ground);
  return out;
}

std::vector<LambdaPoint> lambda_sweep(const PauliSum& h,
                                      const VariationalResult& ground,
                                      const std::vector<double>& lambdas,
                                      const VariationalSettings& settings,
                                      std::uint64_t seed, int restarts,
                                      int jobs) {
  if (lambdas.empty()) throw std::invalid_argument("lambda_sweep: empty grid");
  for (double l : lambdas)
    if (l < 0.0) throw std::invalid_argument("lambda_sweep: negative lambda");
  if (restarts < 1) throw std::invalid_argument("lambda_sweep: restarts < 1");

  std::vector<LambdaPoint> out(lambdas.size());
  parallel_for(lambdas.size(), jobs, [&](std::size_t i) {
    LambdaPoint best;
    for (int r = 0; r < restarts; ++r) {
      const std::uint64_t run_seed =
          rng::derive(seed, i * static_cast<std::size_t>(restarts) +
                                static_cast<std::size_t>(r));
      const VariationalResult res =
          run_vqd(h, ground, lambdas[i], settings, run_seed);
      if (r == 0 || res.loss < best.loss) {
        best.lambda = lambdas[i];
        best.loss = res.loss;
        best.energy = res.energy;
        best.overlap = *res.overlap_with_ground;
      }
    }
    out[i] = best;
  });
  return out;
}

EnergyDistribution monte_carlo_energy(const Eigen::VectorXd& theta_opt,
                                      double sigma, int n_samples,
                                      const PauliSum& h, const AnsatzSpec& spec,
                                      std::uint64_t seed, int jobs) {
  if (sigma < 0.0) throw std::invalid_argument("monte_carlo_energy: sigma < 0");
  if (n_samples < 1)
    throw std::invalid_argument("monte_carlo_energy: need >= 1 sample");

  EnergyDistribution dist;
  dist.sigma = sigma;
  dist.samples.resize(static_cast<std::size_t>(n_samples));
  parallel_for(dist.samples.size(), jobs, [&](std::size_t i) {
    const std::uint64_t key = rng::derive(seed, i);
    Eigen::VectorXd theta = theta_opt;
    for (Eigen::Index k = 0; k < theta.size(); ++k)
      theta[k] += sigma * rng::normal(key, static_cast<std::uint64_t>(k));
    dist.samples[i] = expectation(h, ansatz_state(spec, theta));
  });
  double mean = 0.0;
  for (double e : dist.samples) mean += e;
  mean /= static_cast<double>(dist.samples.size());
  dist.mean = mean;
  dist.stddev = sample_stddev(dist.samples, mean);
  return dist;
}

}  // namespace tritonsim
