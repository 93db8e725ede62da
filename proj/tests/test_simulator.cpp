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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "tritonsim/circuit.hpp"
#include "tritonsim/rng.hpp"

using namespace tritonsim;

namespace {

StateVector random_state(int num_qubits, std::uint64_t seed) {
  StateVector s;
  s.num_qubits = num_qubits;
  s.amplitudes.resize(static_cast<Eigen::Index>(1) << num_qubits);
  for (Eigen::Index i = 0; i < s.amplitudes.size(); ++i)
    s.amplitudes[i] = std::complex<double>(
        rng::normal(seed, static_cast<std::uint64_t>(2 * i)),
        rng::normal(seed, static_cast<std::uint64_t>(2 * i + 1)));
  s.amplitudes.normalize();
  return s;
}

Circuit random_circuit(int num_qubits, int depth, std::uint64_t seed) {
  Circuit c;
  c.num_qubits = num_qubits;
  for (int g = 0; g < depth; ++g) {
    const std::uint64_t key = rng::derive(seed, static_cast<std::uint64_t>(g));
    const int kind = static_cast<int>(rng::uniform(key, 0) * 6.0);
    const int q0 = static_cast<int>(rng::uniform(key, 1) * num_qubits);
    int q1 = static_cast<int>(rng::uniform(key, 2) * (num_qubits - 1));
    if (q1 >= q0) ++q1;
    const double angle = (rng::uniform(key, 3) - 0.5) * 4.0 * std::numbers::pi;
    switch (kind) {
      case 0: c.append(RyGate{q0, angle}); break;
      case 1: c.append(XGate{q0}); break;
      case 2: c.append(ZGate{q0}); break;
      case 3: c.append(CzGate{q0, q1}); break;
      case 4: c.append(CryGate{{{q1, rng::uniform(key, 4) < 0.5}}, q0, angle}); break;
      default: {
        const auto axis = static_cast<Pauli>(
            1 + static_cast<int>(rng::uniform(key, 5) * 3.0));
        c.append(CPauliGate{{{q1, rng::uniform(key, 6) < 0.5}},
                            {q0},
                            {axis},
                            rng::uniform(key, 7) < 0.5 ? 1 : -1});
        break;
      }
    }
  }
  return c;
}

}  // namespace

TEST_CASE("empty circuit is the identity") {
  Circuit c;
  c.num_qubits = 4;
  const StateVector out = apply(c, StateVector::zero_state(4));
  CHECK(std::abs(out.amplitudes[0] - 1.0) == 0.0);
}

TEST_CASE("RY(pi) flips |0> to |1>") {
  Circuit c;
  c.num_qubits = 1;
  c.append(RyGate{0, std::numbers::pi});
  const StateVector out = apply(c, StateVector::zero_state(1));
  CHECK(std::abs(out.amplitudes[0]) < 1e-15);
  CHECK(std::abs(out.amplitudes[1] - 1.0) < 1e-15);
}

TEST_CASE("every gate kind is unitary") {
  Circuit c;
  c.num_qubits = 3;
  c.append(RyGate{0, 0.83});
  c.append(XGate{1});
  c.append(ZGate{2});
  c.append(CzGate{0, 2});
  c.append(CryGate{{{1, false}, {2, true}}, 0, -1.4});
  c.append(CPauliGate{{{0, false}}, {1, 2}, {Pauli::Y, Pauli::X}, -1});
  const Eigen::MatrixXcd u = circuit_unitary(c);
  CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() <
        1e-10);
}

TEST_CASE("zero-controls equal the X-conjugated form") {
  Circuit native;
  native.num_qubits = 2;
  native.append(CryGate{{{1, false}}, 0, 0.9});

  Circuit conjugated;
  conjugated.num_qubits = 2;
  conjugated.append(XGate{1});
  conjugated.append(CryGate{{{1, true}}, 0, 0.9});
  conjugated.append(XGate{1});

  CHECK((circuit_unitary(native) - circuit_unitary(conjugated))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("controlled Pauli matches its block matrix") {
  Circuit c;
  c.num_qubits = 3;
  c.append(CPauliGate{{{2, true}}, {0, 1}, {Pauli::X, Pauli::Y}, -1});
  const Eigen::MatrixXcd u = circuit_unitary(c);

  Eigen::MatrixXcd xy(4, 4);
  xy.setZero();
  const std::complex<double> i1(0, 1);
  // X on qubit 0, Y on qubit 1 (qubit 0 = LSB): XY|q1 q0> basis
  xy(0b10, 0b01) = i1 * 1.0;   // |01> -> i|10>
  xy(0b11, 0b00) = i1 * 1.0;   // |00> -> i|11>
  xy(0b00, 0b11) = -i1 * 1.0;  // |11> -> -i|00>
  xy(0b01, 0b10) = -i1 * 1.0;  // |10> -> -i|01>
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Identity(8, 8);
  expected.block(4, 4, 4, 4) = -xy;
  CHECK((u - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("adjoint round-trip restores random states") {
  for (std::uint64_t k = 0; k < 10; ++k) {
    const Circuit c = random_circuit(3, 50, rng::derive(999, k));
    const StateVector in = random_state(3, rng::derive(555, k));
    const StateVector back = apply(adjoint(c), apply(c, in));
    CHECK((back.amplitudes - in.amplitudes).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("norm is preserved through deep circuits") {
  const Circuit c = random_circuit(4, 50, 42);
  const StateVector out = apply(c, StateVector::zero_state(4));
  CHECK(out.norm_sq() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("inner products") {
  const StateVector psi = random_state(3, 7);
  CHECK(std::abs(inner_product(psi, psi) - 1.0) < 1e-12);
  CHECK_THROWS(inner_product(psi, StateVector::zero_state(2)));
}

TEST_CASE("sampling a deterministic state") {
  const auto counts = sample(StateVector::zero_state(1), {0}, 100, 5);
  REQUIRE(counts.size() == 1);
  CHECK(counts.at(0) == 100);
  CHECK(format_bits(0, 1) == "0");
}

TEST_CASE("sampling |+> is binomial") {
  Circuit c;
  c.num_qubits = 1;
  c.append(RyGate{0, std::numbers::pi / 2.0});
  const StateVector plus = apply(c, StateVector::zero_state(1));
  const auto counts = sample(plus, {0}, 1000000, 11);
  const double zeros = static_cast<double>(counts.at(0));
  CHECK(std::abs(zeros - 500000.0) < 3.0 * 500.0);
}

TEST_CASE("sampling frequencies track probabilities at 4 sigma") {
  for (std::uint64_t k = 0; k < 5; ++k) {
    const StateVector psi = random_state(3, rng::derive(2024, k));
    const std::int64_t shots = 100000;
    const auto counts = sample(psi, {0, 1, 2}, shots, rng::derive(4048, k));
    for (Eigen::Index i = 0; i < 8; ++i) {
      const double p = std::norm(psi.amplitudes[i]);
      const double sd = std::sqrt(p * (1.0 - p) / static_cast<double>(shots));
      const auto it = counts.find(static_cast<std::uint64_t>(i));
      const double freq =
          it == counts.end()
              ? 0.0
              : static_cast<double>(it->second) / static_cast<double>(shots);
      CHECK(std::abs(freq - p) <= 4.0 * sd + 1e-12);
    }
  }
}

TEST_CASE("sampling is deterministic in the seed") {
  const StateVector psi = random_state(3, 31);
  const auto a = sample(psi, {0, 2}, 5000, 17);
  const auto b = sample(psi, {0, 2}, 5000, 17);
  CHECK(a == b);
  const auto c = sample(psi, {0, 2}, 5000, 18);
  CHECK(a != c);
}

TEST_CASE("marginal sampling matches amplitude marginals") {
  const StateVector psi = random_state(3, 77);
  const std::int64_t shots = 200000;
  const auto counts = sample(psi, {1}, shots, 3);
  double p1 = 0.0;
  for (Eigen::Index i = 0; i < 8; ++i)
    if (i & 2) p1 += std::norm(psi.amplitudes[i]);
  const double freq =
      static_cast<double>(counts.count(1) ? counts.at(1) : 0) / shots;
  const double sd = std::sqrt(p1 * (1.0 - p1) / static_cast<double>(shots));
  CHECK(std::abs(freq - p1) <= 4.0 * sd);
}

TEST_CASE("malformed gates and registers are rejected") {
  Circuit c;
  c.num_qubits = 2;
  CHECK_THROWS(c.append(RyGate{2, 1.0}));
  CHECK_THROWS(c.append(CzGate{1, 1}));
  CHECK_THROWS(c.append(CryGate{{{0, true}}, 0, 1.0}));
  CHECK_THROWS(c.append(CPauliGate{{{0, true}}, {1}, {Pauli::X, Pauli::Y}, 1}));
  CHECK_THROWS(c.append(CPauliGate{{{0, true}}, {1}, {Pauli::X}, 2}));

  Circuit ok;
  ok.num_qubits = 2;
  CHECK_THROWS(apply(ok, StateVector::zero_state(3)));

  Circuit unbound;
  unbound.num_qubits = 1;
  unbound.append(RyGate{0, 0.0, 0});
  CHECK_THROWS(apply(unbound, StateVector::zero_state(1)));
  CHECK_THROWS(sample(StateVector::zero_state(1), {}, 10, 0));
}
