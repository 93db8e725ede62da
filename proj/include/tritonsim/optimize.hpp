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
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace tritonsim {

using Objective = std::function<double(const Eigen::VectorXd&)>;

/// Derivative-free constrained minimization problem. Constraints are
/// satisfied when >= 0.
struct OptimizationProblem {
  Objective objective;
  std::vector<Objective> inequality_constraints;
  Eigen::VectorXd initial_point;
  int max_iterations = 1500;
  double initial_step = 0.5;
  double convergence_tolerance = 1e-4;
};

enum class Termination { Converged, IterationCap };

struct TraceRecord {
  Eigen::VectorXd point;
  double objective = 0.0;
  Eigen::VectorXd constraints;
};

struct OptimizationTrace {
  std::vector<TraceRecord> records;  // one per objective evaluation, in order
  Eigen::VectorXd best_point;
  double best_objective = 0.0;
  Eigen::VectorXd best_constraints;
  Termination termination = Termination::Converged;

  int evaluations() const { return static_cast<int>(records.size()); }
};

/// Trust-region method with linear models over a simplex of n+1 points, in
/// the COBYLA family: the linearized subproblem is solved inside a shrinking
/// trust radius, infeasibility handled through an adaptive exact penalty.
/// The returned best point is feasible to 1e-6 whenever any evaluated point
/// was. Fully deterministic for a fixed problem; the seed is reserved for
/// stochastic objectives and recorded alongside the run.
OptimizationTrace minimize(const OptimizationProblem& problem, std::uint64_t seed);

/// Simplex search with a quadratic constraint penalty; ships behind the same
/// interface for differential testing of the primary optimizer.
OptimizationTrace minimize_nelder_mead(const OptimizationProblem& problem,
                                       std::uint64_t seed);

/// Per-evaluation CSV: iteration, objective, constraints, parameters.
std::string trace_to_csv(const OptimizationTrace& trace);

}  // namespace tritonsim
