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

#include "tritonsim/statevector.hpp"

#include <algorithm>
#include <stdexcept>

#include "tritonsim/rng.hpp"

namespace tritonsim {

StateVector StateVector::zero_state(int num_qubits) {
  return basis_state(num_qubits, 0);
}

StateVector StateVector::basis_state(int num_qubits, std::uint64_t index) {
  if (num_qubits < 1 || num_qubits > 30)
    throw std::invalid_argument("statevector: qubit count out of range");
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  if (index >= dim)
    throw std::invalid_argument("statevector: basis index out of range");
  StateVector s;
  s.num_qubits = num_qubits;
  s.amplitudes = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  s.amplitudes[static_cast<Eigen::Index>(index)] = 1.0;
  return s;
}

std::complex<double> inner_product(const StateVector& a, const StateVector& b) {
  if (a.num_qubits != b.num_qubits)
    throw std::invalid_argument("inner_product: register size mismatch");
  return a.amplitudes.dot(b.amplitudes);
}

std::map<std::uint64_t, std::int64_t> sample(const StateVector& state,
                                             const std::vector<int>& qubits,
                                             std::int64_t shots,
                                             std::uint64_t seed) {
  if (qubits.empty()) throw std::invalid_argument("sample: empty qubit subset");
  if (shots < 1) throw std::invalid_argument("sample: shots must be >= 1");
  for (int q : qubits)
    if (q < 0 || q >= state.num_qubits)
      throw std::invalid_argument("sample: qubit index out of range");

  const Eigen::Index dim = state.amplitudes.size();
  std::vector<double> cdf(static_cast<std::size_t>(dim));
  double acc = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    acc += std::norm(state.amplitudes[i]);
    cdf[static_cast<std::size_t>(i)] = acc;
  }
  // Normalize the tail so a full-range draw always lands inside the table.
  cdf.back() = std::max(cdf.back(), 1.0);

  std::map<std::uint64_t, std::int64_t> counts;
  for (std::int64_t shot = 0; shot < shots; ++shot) {
    const double u = rng::uniform(seed, static_cast<std::uint64_t>(shot));
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const auto full = static_cast<std::uint64_t>(it - cdf.begin());
    std::uint64_t key = 0;
    for (std::size_t k = 0; k < qubits.size(); ++k)
      key |= ((full >> qubits[k]) & 1u) << k;
    ++counts[key];
  }
  return counts;
}

std::string format_bits(std::uint64_t key, int num_bits) {
  std::string out(static_cast<std::size_t>(num_bits), '0');
  for (int k = 0; k < num_bits; ++k)
    if ((key >> k) & 1u) out[static_cast<std::size_t>(k)] = '1';
  return out;
}

}  // namespace tritonsim
