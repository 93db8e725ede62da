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

#include "tritonsim/ansatz.hpp"

#include <stdexcept>

namespace tritonsim {

Circuit build_block(int qubit_count, int param_offset) {
  if (qubit_count < 2)
    throw std::invalid_argument("ansatz: circular entanglement needs >= 2 qubits");
  if (param_offset < 0)
    throw std::invalid_argument("ansatz: negative parameter offset");
  Circuit block;
  block.num_qubits = qubit_count;
  for (int q = 0; q < qubit_count; ++q)
    block.append(RyGate{q, 0.0, param_offset + q});
  for (int q = 0; q + 1 < qubit_count; ++q) block.append(CzGate{q, q + 1});
  if (qubit_count > 2) block.append(CzGate{qubit_count - 1, 0});
  return block;
}

Circuit build_ansatz(const AnsatzSpec& spec) {
  if (spec.num_blocks < 1)
    throw std::invalid_argument("ansatz: need at least one block");
  Circuit out;
  out.num_qubits = spec.num_qubits;
  for (int b = 0; b < spec.num_blocks; ++b) {
    const Circuit block = build_block(spec.num_qubits, b * spec.num_qubits);
    for (const auto& g : block.gates) out.gates.push_back(g);
  }
  return out;
}

StateVector ansatz_state(const AnsatzSpec& spec, const Eigen::VectorXd& theta) {
  const Circuit bound = bind(build_ansatz(spec), theta);
  return apply(bound, StateVector::zero_state(spec.num_qubits));
}

}  // namespace tritonsim
