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

#include <Eigen/Dense>

#include "tritonsim/excitation.hpp"
#include "tritonsim/pauli.hpp"

namespace tritonsim {

/// Full spectrum of a Hermitian operator, eigenvalues ascending and
/// eigenvectors orthonormal (an arbitrary orthonormal basis inside any
/// degenerate cluster).
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;  // column k pairs with eigenvalues[k]
};

/// Dense Hermitian eigensolver, written in-repo: Householder reduction to a
/// real symmetric tridiagonal followed by implicit-shift QL with eigenvector
/// accumulation. Register limited to 12 qubits.
Spectrum diagonalize(const PauliSum& h);

/// Same contract on an explicit matrix (used by tests and the LCU checks).
Spectrum diagonalize_dense(const Eigen::MatrixXcd& h);

/// Independent cross-check of diagonalize: power iteration on a spectral
/// shift of h with deflation against previously found eigenvectors.
Spectrum diagonalize_power_iteration(const Eigen::MatrixXcd& h);

struct TransitionProbabilities {
  double p_success = 0.0;
  double p_transition = 0.0;
  bool transition_defined = true;  // false when O annihilates the ground state
};

/// Closed-form counterparts of the sampled LCU statistics, from the 2x2
/// subspace matrix of the excitation operator:
///   p_success   = |O|g>|^2 / Lambda^2
///   p_transition = |<e|O|g>|^2 / |O|g>|^2
TransitionProbabilities exact_transition(const ExcitationCoefficients& coeffs);

}  // namespace tritonsim
