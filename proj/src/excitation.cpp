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

#include "tritonsim/excitation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tritonsim {

namespace {

constexpr double kHermTol = 1e-12;

PauliTerm term2(Pauli a0, Pauli a1, double coeff) {
  return PauliTerm{coeff, {a0, a1}};
}

void push_nonzero(PauliSum& sum, PauliTerm term) {
  if (term.coefficient != 0.0) sum.terms.push_back(std::move(term));
}

}  // namespace

Eigen::Matrix2cd subspace_matrix(const ExcitationCoefficients& c) {
  Eigen::Matrix2cd h;
  h(0, 0) = c.alpha + c.gamma;
  h(1, 1) = c.alpha - c.gamma;
  h(0, 1) = std::complex<double>(c.beta, -c.delta);
  h(1, 0) = std::complex<double>(c.beta, c.delta);
  return h;
}

PauliSum jordan_wigner_two_mode(const Eigen::Matrix2cd& h) {
  if (std::abs(h(0, 0).imag()) > kHermTol || std::abs(h(1, 1).imag()) > kHermTol ||
      std::abs(h(0, 1) - std::conj(h(1, 0))) > kHermTol)
    throw std::invalid_argument("jordan_wigner: input not Hermitian");

  const double a = h(0, 0).real();
  const double c = h(1, 1).real();
  const double b = h(1, 0).real();
  const double d = h(1, 0).imag();

  // sum_pq h_pq c_p^dag c_q with n_p = (I - Z_p)/2 and hopping
  // c_0^dag c_1 + c_1^dag c_0 = (X0X1 + Y0Y1)/2,
  // -i (c_0^dag c_1 - c_1^dag c_0) = (X0Y1 - Y0X1)/2.
  PauliSum out;
  out.num_qubits = 2;
  out.identity_offset = (a + c) / 2.0;
  push_nonzero(out, term2(Pauli::Z, Pauli::I, -a / 2.0));
  push_nonzero(out, term2(Pauli::I, Pauli::Z, -c / 2.0));
  push_nonzero(out, term2(Pauli::X, Pauli::X, b / 2.0));
  push_nonzero(out, term2(Pauli::Y, Pauli::Y, b / 2.0));
  push_nonzero(out, term2(Pauli::X, Pauli::Y, d / 2.0));
  push_nonzero(out, term2(Pauli::Y, Pauli::X, -d / 2.0));
  return out;
}

RestrictedOperator restrict_to_subspace(const PauliSum& op) {
  if (op.num_qubits != 2)
    throw std::invalid_argument("restrict_to_subspace: expected a 2-qubit operator");

  const auto ground = StateVector::basis_state(2, kGroundIndex);
  const auto excited = StateVector::basis_state(2, kExcitedIndex);
  const Eigen::MatrixXcd dense = to_dense(op);

  const Eigen::VectorXcd og = dense * ground.amplitudes;
  const Eigen::VectorXcd oe = dense * excited.amplitudes;
  for (Eigen::Index leak : {Eigen::Index{0}, Eigen::Index{3}}) {
    if (std::abs(og[leak]) > kHermTol || std::abs(oe[leak]) > kHermTol)
      throw std::invalid_argument(
          "restrict_to_subspace: operator does not preserve the subspace");
  }

  Eigen::Matrix2cd m;
  m(0, 0) = og[kGroundIndex];
  m(1, 0) = og[kExcitedIndex];
  m(0, 1) = oe[kGroundIndex];
  m(1, 1) = oe[kExcitedIndex];

  const double a = ((m(0, 0) + m(1, 1)) / 2.0).real();
  const double z = ((m(0, 0) - m(1, 1)) / 2.0).real();
  const double x = m(1, 0).real();
  const double y = m(1, 0).imag();

  RestrictedOperator out;
  out.matrix = m;
  out.op.num_qubits = 2;
  out.op.identity_offset = a;
  push_nonzero(out.op, term2(Pauli::Z, Pauli::I, -z / 2.0));
  push_nonzero(out.op, term2(Pauli::I, Pauli::Z, z / 2.0));
  push_nonzero(out.op, term2(Pauli::X, Pauli::X, x / 2.0));
  push_nonzero(out.op, term2(Pauli::Y, Pauli::Y, x / 2.0));
  push_nonzero(out.op, term2(Pauli::X, Pauli::Y, y / 2.0));
  push_nonzero(out.op, term2(Pauli::Y, Pauli::X, -y / 2.0));
  return out;
}

ExcitationCoefficients coefficients_from_angle(double theta, double phi,
                                               std::string_view mapping,
                                               double alpha0) {
  if (theta < -1e-12 || theta > std::numbers::pi + 1e-12)
    throw std::invalid_argument("coefficients_from_angle: theta outside [0, pi]");
  ExcitationCoefficients c;
  c.theta = theta;
  c.phi = phi;
  if (mapping == "dipole-axis") {
    c.alpha = alpha0;
    c.beta = std::sin(theta) * std::cos(phi);
    c.delta = std::sin(theta) * std::sin(phi);
    c.gamma = std::cos(theta);
  } else if (mapping == "deuteron") {
    c.alpha = alpha0;
    c.gamma = -alpha0;
    c.beta = std::sin(theta) * std::cos(phi);
    c.delta = std::sin(theta) * std::sin(phi);
  } else {
    throw std::invalid_argument("coefficients_from_angle: unknown mapping '" +
                                std::string(mapping) + "'");
  }
  return c;
}

const std::vector<std::string>& known_mappings() {
  static const std::vector<std::string> names = {"dipole-axis", "deuteron"};
  return names;
}

}  // namespace tritonsim
