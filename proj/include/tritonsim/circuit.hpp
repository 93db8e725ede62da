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
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "tritonsim/pauli.hpp"
#include "tritonsim/statevector.hpp"

namespace tritonsim {

/// Control condition: gate fires when `qubit` reads `value` (zero-controls
/// are native, no X-conjugation).
struct Control {
  int qubit = 0;
  bool value = true;
};

/// RY(angle) = exp(-i angle Y / 2). A gate with param_slot >= 0 is an unbound
/// parameter slot; bind() assigns its angle.
struct RyGate {
  int target = 0;
  double angle = 0.0;
  int param_slot = -1;
};

struct XGate {
  int target = 0;
};

struct ZGate {
  int target = 0;
};

struct CzGate {
  int a = 0;
  int b = 1;
};

struct CryGate {
  std::vector<Control> controls;
  int target = 0;
  double angle = 0.0;
};

/// Multi-controlled signed Pauli string on target qubits; realizes one
/// |j><j| (x) U_j block of a select unitary. sign = -1 encodes a coefficient
/// sign folded into the unitary as a controlled phase flip.
struct CPauliGate {
  std::vector<Control> controls;
  std::vector<int> targets;
  std::vector<Pauli> axes;  // axes[k] acts on targets[k]
  int sign = 1;
};

using Gate = std::variant<RyGate, XGate, ZGate, CzGate, CryGate, CPauliGate>;

struct Circuit {
  int num_qubits = 0;
  std::vector<Gate> gates;

  void append(Gate gate);  // validates indices before storing
};

/// U_circuit |input>; every gate is checked to preserve the norm to 1e-10.
/// Throws on register mismatch or unbound parameter slots.
StateVector apply(const Circuit& circuit, StateVector input);

/// Reversed gate order with each gate inverted.
Circuit adjoint(const Circuit& circuit);

/// Assigns theta[slot] to every parameter slot. Angle count must equal the
/// slot count; angles are used as given (no modular reduction).
Circuit bind(const Circuit& circuit, const Eigen::VectorXd& theta);

int param_count(const Circuit& circuit);

/// Dense unitary, built column-by-column; for verification at small sizes.
Eigen::MatrixXcd circuit_unitary(const Circuit& circuit);

/// Same gates re-indexed onto a larger register: qubit q -> mapping[q].
Circuit remap(const Circuit& circuit, const std::vector<int>& mapping,
              int new_num_qubits);

/// JSON description of the gate list (names, qubits, angles) for golden files.
std::string circuit_to_json(const Circuit& circuit);

}  // namespace tritonsim
