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

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "tritonsim/statevector.hpp"

namespace tritonsim {

enum class Pauli : std::uint8_t { I, X, Y, Z };

char to_char(Pauli p);
Pauli pauli_from_char(char c);

/// One real-weighted tensor product of single-qubit Pauli operators.
/// axes[q] acts on qubit q; qubit 0 is the least-significant bit of the
/// basis-state index, and renders leftmost in strings ("XIIZ" = X on qubit 0,
/// Z on qubit 3). Coefficients are real by construction: every operator in
/// this model is real-weighted once signs are folded into the strings.
struct PauliTerm {
  double coefficient = 0.0;
  std::vector<Pauli> axes;

  int num_qubits() const { return static_cast<int>(axes.size()); }
};

/// Sum of Pauli terms plus a real multiple of the identity.
struct PauliSum {
  int num_qubits = 0;
  double identity_offset = 0.0;
  std::vector<PauliTerm> terms;
};

PauliSum operator+(const PauliSum& a, const PauliSum& b);
PauliSum operator*(double scale, const PauliSum& p);

/// Fixed-site triton Hamiltonian on 4 qubits:
///   (8t + U/2) I - 2t sum_k X_k - (U/4)(Z0 Z3 + Z1 Z2) - (U/4) sum_{i<j<k} Zi Zj Zk
/// The ZZ pairs are the paper's 1-based {1,4} and {2,3}.
PauliSum build_triton_hamiltonian(double t, double u);

/// <psi|h|psi> for a normalized state. Each string is applied directly to the
/// amplitudes (no dense matrix), so this scales to the 7-qubit LCU register.
/// Throws if the imaginary residue exceeds 1e-10 (non-Hermitian input).
double expectation(const PauliSum& h, const StateVector& psi);

/// Dense 2^n x 2^n realization; guarded to n <= 12.
Eigen::MatrixXcd to_dense(const PauliSum& h);
Eigen::MatrixXcd to_dense(const PauliTerm& term);

/// P|psi> for a single unit-coefficient string (coefficient is applied too).
StateVector apply_term(const PauliTerm& term, const StateVector& psi);

/// Textual rendering, e.g. "4.5 + -2 * XIII + 1.75 * ZIIZ". Round-trips
/// through parse_pauli_sum.
std::string to_string(const PauliSum& h);
PauliSum parse_pauli_sum(std::string_view text);

}  // namespace tritonsim
