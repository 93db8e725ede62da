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
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace tritonsim {

/// Dense amplitude vector over the 2^n computational basis states.
/// Qubit 0 is the least-significant bit of the basis-state index.
struct StateVector {
  Eigen::VectorXcd amplitudes;
  int num_qubits = 0;

  static StateVector zero_state(int num_qubits);
  static StateVector basis_state(int num_qubits, std::uint64_t index);

  std::uint64_t dimension() const { return std::uint64_t{1} << num_qubits; }
  double norm_sq() const { return amplitudes.squaredNorm(); }
};

/// <a|b>. Eigen's dot conjugates the left argument, matching bra-ket order.
std::complex<double> inner_product(const StateVector& a, const StateVector& b);

/// Measurement counts over a subset of qubits. Bit k of a returned key is the
/// outcome of qubits[k]. Shots are drawn by inverse-CDF over the cumulative
/// probabilities with the counter-based generator, so fixed (seed, shots)
/// reproduce the same counts everywhere.
std::map<std::uint64_t, std::int64_t> sample(const StateVector& state,
                                             const std::vector<int>& qubits,
                                             std::int64_t shots,
                                             std::uint64_t seed);

/// Renders a counts key as a bit string, qubits[0] leftmost.
std::string format_bits(std::uint64_t key, int num_bits);

}  // namespace tritonsim
