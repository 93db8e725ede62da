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

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tritonsim/circuit.hpp"
#include "tritonsim/excitation.hpp"

namespace tritonsim {

// Register layout of the assembled circuit: target qubits 0,1 carry the
// two-level encoding (|10> ground, |01> excited); ancillas are qubits 2,3,4
// (A0, A1, A2 in circuit-diagram order, A0 = qubit 2).
inline constexpr int kNumTargets = 2;
inline constexpr int kNumAncillas = 3;

/// One unitary of the decomposition O = sum_j mu_j U_j: a positive weight and
/// a signed two-qubit Pauli string, plus the ancilla basis state designated
/// to select it.
struct LcuEntry {
  double weight = 0.0;  // mu_j > 0
  int sign = 1;         // folded coefficient sign
  std::array<Pauli, 2> axes = {Pauli::I, Pauli::I};
  std::uint32_t ancilla_pattern = 0;  // bit k = required value of ancilla k
};

struct UnitaryDecomposition {
  std::vector<LcuEntry> entries;  // ordered I, Z0, Z1, XX, YY, XY, YX
  double lambda_norm = 0.0;       // sum of weights
};

/// Splits a restricted operator into signed Pauli unitaries with positive
/// weights. Zero-coefficient entries are dropped; throws on the zero operator.
UnitaryDecomposition decompose(const RestrictedOperator& op);

/// Prepare unitary on the 3 ancillas: |000> -> sum_j sqrt(mu_j/Lambda) |j*>
/// with |j*> the entry's designated pattern. Built as a binary tree of
/// controlled RY rotations over the coefficient families; for the planar
/// 5-unitary operator this is RY(2*phi1) with phi1 = asin(sqrt(|beta|/Lambda)),
/// the zero-controlled RY(2*phi2) with phi2 = asin(sqrt(|gamma|/(|alpha|+|gamma|))),
/// and two equal-split rotations.
Circuit build_prepare(const UnitaryDecomposition& decomp);

/// Select unitary on ancillas + targets: applies the signed Pauli string of
/// each entry when the ancillas read its designated pattern.
Circuit build_select(const UnitaryDecomposition& decomp);

/// Full post-selected circuit V_p^dag V_s V_p on the 5-qubit register.
Circuit lcu_circuit(const UnitaryDecomposition& decomp);

struct LcuEstimate {
  double theta = 0.0;
  double phi = 0.0;
  double p_success = 0.0;
  std::optional<double> p_transition;  // empty when no shot succeeded
  std::int64_t shots = 0;
  std::int64_t successes = 0;
  std::int64_t transitions = 0;
  double se_success = 0.0;
  std::optional<double> se_transition;
};

/// Runs the LCU circuit on |000> (x) |10>, samples all five qubits and
/// post-selects on the ancillas returning to |000>. Zero successes are
/// flagged through the empty optionals, never fatal.
LcuEstimate run_lcu(const UnitaryDecomposition& decomp, std::int64_t shots,
                    std::uint64_t seed);

struct SweepPoint {
  ExcitationCoefficients coeffs;
  double lambda_norm = 0.0;
  LcuEstimate estimate;
};

/// One estimate per theta grid point at fixed phi; point i uses the derived
/// seed (seed, i), so results are reproducible and order-independent.
std::vector<SweepPoint> sweep(const std::vector<double>& theta_grid, double phi,
                              std::string_view mapping, double alpha0,
                              std::int64_t shots, std::uint64_t seed,
                              int jobs = 1);

/// Product grid, phi-major: row (p, t) has linear index p * n_theta + t, so
/// the phi = phi_grid[0] row reuses the planar sweep's seeds verbatim.
std::vector<SweepPoint> sweep3d(const std::vector<double>& theta_grid,
                                const std::vector<double>& phi_grid,
                                std::string_view mapping, double alpha0,
                                std::int64_t shots, std::uint64_t seed,
                                int jobs = 1);

/// CSV with the columns: theta_rad, phi_rad, alpha, beta, gamma, delta,
/// lambda_norm, shots, successes, transitions, p_success, p_transition,
/// se_success, se_transition.
std::string sweep_to_csv(const std::vector<SweepPoint>& points);

}  // namespace tritonsim
