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

#include "tritonsim/ansatz.hpp"
#include "tritonsim/optimize.hpp"
#include "tritonsim/pauli.hpp"

namespace tritonsim {

enum class Algorithm { Vqe, Vqd, VqeAc };

std::string algorithm_name(Algorithm a);

enum class OptimizerKind { Cobyla, NelderMead };

struct VariationalSettings {
  AnsatzSpec ansatz;
  int max_iterations = 1500;
  double initial_step = 0.5;
  double convergence_tolerance = 1e-4;
  OptimizerKind optimizer = OptimizerKind::Cobyla;
  // 0 = exact amplitudes; > 0 samples each Pauli term with this many shots,
  // reproducing the stochastic objective of a shot-based backend.
  int shots_per_term = 0;
};

struct VariationalResult {
  Algorithm algorithm = Algorithm::Vqe;
  Eigen::VectorXd theta;
  double energy = 0.0;  // exact-mode expectation, recomputed at theta
  double loss = 0.0;    // optimized objective at theta (= energy for VQE)
  std::optional<double> overlap_with_ground;
  OptimizationTrace trace;
  std::uint64_t seed = 0;
  bool feasible = true;                // VQE/AC orthogonality met (never silent)
  std::vector<double> overlap_bounds;  // VQE/AC schedule actually used
};

/// Energy objective over ansatz parameters. shots_per_term > 0 draws each
/// term's measurement outcomes through the counter generator keyed by
/// (eval_seed, evaluation index), so stochastic runs stay reproducible.
Objective make_energy_objective(const PauliSum& h, const AnsatzSpec& spec,
                                int shots_per_term, std::uint64_t eval_seed);

/// |<g|psi(theta)>|^2, computed exactly from statevectors.
double overlap_sq(const StateVector& ground, const AnsatzSpec& spec,
                  const Eigen::VectorXd& theta);

/// Ground-state search: min_theta <psi(theta)|H|psi(theta)> from a uniform
/// [-pi, pi] start drawn with the run seed.
VariationalResult run_vqe(const PauliSum& h, const VariationalSettings& settings,
                          std::uint64_t seed);

/// Deflation: min E(theta) + lambda |<g|psi(theta)>|^2.
VariationalResult run_vqd(const PauliSum& h, const VariationalResult& ground,
                          double lambda, const VariationalSettings& settings,
                          std::uint64_t seed);

/// Orthogonality handed to the constrained optimizer: min E(theta) subject to
/// overlap <= bound, the bound halved from initial_bound down through
/// final_bound with the best feasible point carried between stages. A single
/// stage with bound 1 is an inactive constraint and recovers plain VQE.
VariationalResult run_vqeac(const PauliSum& h, const VariationalResult& ground,
                            const VariationalSettings& settings,
                            std::uint64_t seed, double initial_bound = 0.5,
                            double final_bound = 1e-3);

struct LambdaPoint {
  double lambda = 0.0;
  double loss = 0.0;
  double energy = 0.0;
  double overlap = 0.0;
};

/// One VQD run per lambda (best of `restarts` seeded starts each).
std::vector<LambdaPoint> lambda_sweep(const PauliSum& h,
                                      const VariationalResult& ground,
                                      const std::vector<double>& lambdas,
                                      const VariationalSettings& settings,
                                      std::uint64_t seed, int restarts = 1,
                                      int jobs = 1);

struct EnergyDistribution {
  std::vector<double> samples;
  double mean = 0.0;
  double stddev = 0.0;
  double sigma = 0.0;  // parameter noise that generated the samples
};

/// Error propagation: energies of theta ~ Normal(theta_opt, sigma^2 I),
/// evaluated exactly.
EnergyDistribution monte_carlo_energy(const Eigen::VectorXd& theta_opt,
                                      double sigma, int n_samples,
                                      const PauliSum& h, const AnsatzSpec& spec,
                                      std::uint64_t seed, int jobs = 1);

}  // namespace tritonsim
