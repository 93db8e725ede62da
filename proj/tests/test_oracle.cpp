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

#include "table1.hpp"
#include "tritonsim/oracle.hpp"
#include "tritonsim/rng.hpp"

using namespace tritonsim;

namespace {

Eigen::MatrixXcd random_hermitian(Eigen::Index n, std::uint64_t seed) {
  Eigen::MatrixXcd a(n, n);
  std::uint64_t ctr = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const double re = rng::normal(seed, ctr++);
      const double im = rng::normal(seed, ctr++);
      a(i, j) = std::complex<double>(re, im);
    }
  return (a + a.adjoint()) / 2.0;
}

double max_residual(const Eigen::MatrixXcd& h, const Spectrum& s) {
  double worst = 0.0;
  for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) {
    const double r =
        (h * s.eigenvectors.col(k) - s.eigenvalues[k] * s.eigenvectors.col(k))
            .norm();
    worst = std::max(worst, r);
  }
  return worst;
}

}  // namespace

TEST_CASE("single-qubit Z spectrum") {
  PauliSum z;
  z.num_qubits = 1;
  z.terms.push_back({1.0, {Pauli::Z}});
  const Spectrum s = diagonalize(z);
  CHECK(s.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(s.eigenvalues[1] == doctest::Approx(1.0));
}

TEST_CASE("identity offset only") {
  PauliSum c;
  c.num_qubits = 2;
  c.identity_offset = 3.25;
  const Spectrum s = diagonalize(c);
  for (Eigen::Index k = 0; k < 4; ++k)
    CHECK(s.eigenvalues[k] == doctest::Approx(3.25));
}

TEST_CASE("triton spectrum anchors, residuals and orthonormality") {
  const PauliSum h = build_triton_hamiltonian(1.0, -7.0);
  const Eigen::MatrixXcd dense = to_dense(h);
  const Spectrum s = diagonalize(h);

  CHECK(std::abs(s.eigenvalues[0] - testdata::kE0) < 1e-9);
  CHECK(std::abs(s.eigenvalues[1] - testdata::kE1) < 1e-9);
  CHECK(std::abs(s.eigenvalues[2] - testdata::kE1) < 1e-9);  // degenerate pair

  CHECK(max_residual(dense, s) < 1e-9);
  const Eigen::MatrixXcd gram = s.eigenvectors.adjoint() * s.eigenvectors;
  CHECK((gram - Eigen::MatrixXcd::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-9);

  for (Eigen::Index k = 1; k < 16; ++k)
    CHECK(s.eigenvalues[k] >= s.eigenvalues[k - 1]);
}

TEST_CASE("the two eigensolvers agree on the triton spectrum") {
  const Eigen::MatrixXcd dense = to_dense(build_triton_hamiltonian(1.0, -7.0));
  const Spectrum ql = diagonalize_dense(dense);
  const Spectrum pi = diagonalize_power_iteration(dense);
  REQUIRE(ql.eigenvalues.size() == pi.eigenvalues.size());
  for (Eigen::Index k = 0; k < ql.eigenvalues.size(); ++k)
    CHECK(std::abs(ql.eigenvalues[k] - pi.eigenvalues[k]) < 1e-8);
  CHECK(max_residual(dense, pi) < 1e-8);
}

TEST_CASE("random Hermitian matrices diagonalize accurately") {
  for (std::uint64_t trial = 0; trial < 10; ++trial) {
    const Eigen::MatrixXcd h = random_hermitian(9, rng::derive(606, trial));
    const Spectrum s = diagonalize_dense(h);
    CHECK(max_residual(h, s) < 1e-10);
    const Eigen::MatrixXcd gram = s.eigenvectors.adjoint() * s.eigenvectors;
    CHECK((gram - Eigen::MatrixXcd::Identity(9, 9)).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("non-Hermitian and oversized inputs are rejected") {
  Eigen::MatrixXcd bad(2, 2);
  bad << 1.0, std::complex<double>(0, 1), std::complex<double>(0, 1), 1.0;
  CHECK_THROWS(diagonalize_dense(bad));
  PauliSum big;
  big.num_qubits = 13;
  CHECK_THROWS(diagonalize(big));
}

TEST_CASE("exact transition of the identity operator") {
  ExcitationCoefficients c;
  c.alpha = 1.0;
  const TransitionProbabilities p = exact_transition(c);
  CHECK(p.p_success == doctest::Approx(1.0));
  CHECK(p.p_transition == doctest::Approx(0.0));
}

TEST_CASE("pure hopping transfers with certainty") {
  ExcitationCoefficients c;
  c.beta = 0.4;
  const TransitionProbabilities p = exact_transition(c);
  CHECK(p.p_transition == doctest::Approx(1.0));
  CHECK(p.p_success == doctest::Approx(1.0));  // |beta|^2 / |beta|^2
}

TEST_CASE("transition probabilities are scale invariant") {
  ExcitationCoefficients c;
  c.alpha = 0.8;
  c.beta = -0.3;
  c.gamma = 0.5;
  c.delta = 0.2;
  const TransitionProbabilities p1 = exact_transition(c);
  ExcitationCoefficients scaled = c;
  scaled.alpha *= 7.0;
  scaled.beta *= 7.0;
  scaled.gamma *= 7.0;
  scaled.delta *= 7.0;
  const TransitionProbabilities p2 = exact_transition(scaled);
  CHECK(p1.p_success == doctest::Approx(p2.p_success).epsilon(1e-12));
  CHECK(p1.p_transition == doctest::Approx(p2.p_transition).epsilon(1e-12));
}

TEST_CASE("zero operator is rejected, annihilated ground state is flagged") {
  CHECK_THROWS(exact_transition(ExcitationCoefficients{}));
  ExcitationCoefficients c;
  c.alpha = 1.0;
  c.gamma = -1.0;  // O|g> = 0 but O is not the zero operator
  const TransitionProbabilities p = exact_transition(c);
  CHECK(p.p_success == doctest::Approx(0.0));
  CHECK(!p.transition_defined);
}
