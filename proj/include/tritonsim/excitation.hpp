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

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "tritonsim/pauli.hpp"

namespace tritonsim {

// Two-level transition operator O = alpha I + beta X + gamma Z + delta Y,
// mapped to two qubits. Mode p occupied <=> qubit p reads |1>; the ground
// state |10> (qubit 0 = 1, qubit 1 = 0) is basis index 1 and the excited
// state |01> is basis index 2.
inline constexpr std::uint64_t kGroundIndex = 1;
inline constexpr std::uint64_t kExcitedIndex = 2;

struct ExcitationCoefficients {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;  // Y component; 0 in the planar case
  double theta = 0.0;  // polarization polar angle, radians
  double phi = 0.0;    // xy-plane angle, radians; 0 in the planar case
};

/// 2x2 single-particle matrix of the coefficients:
///   [[alpha+gamma, beta - i delta], [beta + i delta, alpha - gamma]]
/// in the (ground, excited) subspace basis.
Eigen::Matrix2cd subspace_matrix(const ExcitationCoefficients& coeffs);

/// Two-qubit operator preserving span{|01>, |10>}, carried both as a Pauli
/// sum and as its 2x2 matrix in the (ground, excited) basis.
struct RestrictedOperator {
  PauliSum op;
  Eigen::Matrix2cd matrix;
};

/// Second-quantizes a 2x2 Hermitian single-particle operator over two modes
/// and maps it to qubits. The result, restricted to the single-excitation
/// subspace, equals the input matrix in the (ground, excited) basis; that
/// round-trip fixes every sign convention. Throws on non-Hermitian input.
PauliSum jordan_wigner_two_mode(const Eigen::Matrix2cd& h);

/// Projects a 2-qubit operator onto the single-excitation subspace and
/// rebuilds it in the symmetric form
///   a I + z (Z1 - Z0)/2 + x (X0X1 + Y0Y1)/2 + y (X0Y1 - Y0X1)/2,
/// which annihilates |00> and |11> outright. Throws if the input leaks out
/// of the subspace beyond 1e-12.
RestrictedOperator restrict_to_subspace(const PauliSum& op);

/// Named, pluggable polarization-angle -> coefficient mappings. The default
/// "dipole-axis" mapping sets beta = sin(theta) cos(phi),
/// delta = sin(theta) sin(phi), gamma = cos(theta), alpha = alpha0.
/// "deuteron" keeps gamma = -alpha = -alpha0 at every angle.
ExcitationCoefficients coefficients_from_angle(double theta, double phi,
                                               std::string_view mapping,
                                               double alpha0 = 1.0);

const std::vector<std::string>& known_mappings();

}  // namespace tritonsim
