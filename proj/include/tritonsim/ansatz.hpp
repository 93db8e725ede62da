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

#include "tritonsim/circuit.hpp"

namespace tritonsim {

/// Hardware-efficient ansatz shape: num_blocks repetitions of one block, each
/// block a full RY rotation layer followed by a circular CZ entanglement ring.
/// Default 4 qubits x 4 blocks = 16 trainable parameters.
struct AnsatzSpec {
  int num_qubits = 4;
  int num_blocks = 4;

  int param_count() const { return num_qubits * num_blocks; }
};

/// One block: RY slots param_offset..param_offset+n-1 on qubits 0..n-1, then
/// CZ ring (0,1),(1,2),...,(n-2,n-1),(n-1,0). For n = 2 the closing gate would
/// duplicate CZ(0,1), so each unordered pair is emitted at most once.
Circuit build_block(int qubit_count, int param_offset);

/// Blocks applied in index order, so parameter 4b + k is slot k of block b.
Circuit build_ansatz(const AnsatzSpec& spec);

/// Convenience: bound ansatz state on |0...0>.
StateVector ansatz_state(const AnsatzSpec& spec, const Eigen::VectorXd& theta);

}  // namespace tritonsim
