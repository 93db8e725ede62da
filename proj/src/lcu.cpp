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

#include "tritonsim/lcu.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tritonsim/parallel.hpp"
#include "tritonsim/rng.hpp"

namespace tritonsim {

namespace {

// Designated ancilla pattern per unitary family, bits (A0, A1, A2) with A0
// least significant. A0 = 1 separates the hopping families (XX/YY and XY/YX)
// from I and the Z's, so the first prepare rotation carries exactly the
// paper's angle phi1; A1 separates gamma from alpha on the left and the
// delta pair from the beta pair on the right; A2 splits within a pair.
enum Family : int { kI = 0, kZ0, kZ1, kXX, kYY, kXY, kYX };

constexpr std::uint32_t kPattern[7] = {
    0b000,  // I
    0b010,  // Z0
    0b110,  // Z1
    0b001,  // XX
    0b101,  // YY
    0b011,  // XY
    0b111,  // YX
};

constexpr std::array<Pauli, 2> kAxes[7] = {
    {Pauli::I, Pauli::I}, {Pauli::Z, Pauli::I}, {Pauli::I, Pauli::Z},
    {Pauli::X, Pauli::X}, {Pauli::Y, Pauli::Y}, {Pauli::X, Pauli::Y},
    {Pauli::Y, Pauli::X},
};

int family_of(const std::array<Pauli, 2>& axes) {
  for (int f = 0; f < 7; ++f)
    if (kAxes[f] == axes) return f;
  throw std::invalid_argument("lcu: unsupported Pauli string");
}

double weight_of(const UnitaryDecomposition& d, int family) {
  for (const auto& e : d.entries)
    if (e.ancilla_pattern == kPattern[family]) return e.weight;
  return 0.0;
}

std::vector<Control> ancilla_controls(std::uint32_t pattern, int upto_bits,
                                      int qubit_offset) {
  std::vector<Control> cs;
  for (int k = 0; k < upto_bits; ++k)
    cs.push_back({qubit_offset + k, ((pattern >> k) & 1u) != 0});
  return cs;
}

// RY(2*asin(sqrt(t))) moves probability t onto |1>.
double split_angle(double t) {
  t = std::clamp(t, 0.0, 1.0);
  return 2.0 * std::asin(std::sqrt(t));
}

}  // namespace

UnitaryDecomposition decompose(const RestrictedOperator& op) {
  // Coefficients per family from the canonical restricted form.
  double coeff[7] = {op.op.identity_offset, 0, 0, 0, 0, 0, 0};
  for (const auto& term : op.op.terms) {
    if (term.num_qubits() != 2)
      throw std::invalid_argument("lcu: expected 2-qubit operator");
    coeff[family_of({term.axes[0], term.axes[1]})] += term.coefficient;
  }

  UnitaryDecomposition out;
  for (int f = kI; f <= kYX; ++f) {
    if (coeff[f] == 0.0) continue;
    LcuEntry e;
    e.weight = std::abs(coeff[f]);
    e.sign = coeff[f] > 0.0 ? 1 : -1;
    e.axes = kAxes[f];
    e.ancilla_pattern = kPattern[f];
    out.entries.push_back(e);
    out.lambda_norm += e.weight;
  }
  if (out.entries.empty())
    throw std::invalid_argument("lcu: zero operator has no decomposition");
  return out;
}

Circuit build_prepare(const UnitaryDecomposition& decomp) {
  if (decomp.entries.empty() || decomp.entries.size() > 8)
    throw std::invalid_argument("lcu: entry count must be in [1, 8]");
  const double lambda = decomp.lambda_norm;
  if (lambda <= 0.0) throw std::invalid_argument("lcu: empty decomposition");

  const double w_alpha = weight_of(decomp, kI);
  const double w_gamma = weight_of(decomp, kZ0) + weight_of(decomp, kZ1);
  const double w_beta = weight_of(decomp, kXX) + weight_of(decomp, kYY);
  const double w_delta = weight_of(decomp, kXY) + weight_of(decomp, kYX);

  Circuit prep;
  prep.num_qubits = kNumAncillas;

  // Level 0 on A0: hopping families vs identity + Z's. For the planar
  // operator the angle is 2*asin(sqrt(|beta|/Lambda)).
  const double t0 = (w_beta + w_delta) / lambda;
  if (t0 > 0.0) prep.append(RyGate{0, split_angle(t0)});

  // Level 1 on A1. Left branch (A0 = 0): gamma against alpha, the
  // zero-controlled rotation with angle 2*asin(sqrt(|gamma|/(|alpha|+|gamma|))).
  if (w_alpha + w_gamma > 0.0 && w_gamma > 0.0)
    prep.append(CryGate{{{0, false}}, 1, split_angle(w_gamma / (w_alpha + w_gamma))});
  // Right branch (A0 = 1): delta pair against beta pair.
  if (w_beta + w_delta > 0.0 && w_delta > 0.0)
    prep.append(CryGate{{{0, true}}, 1, split_angle(w_delta / (w_beta + w_delta))});

  // Level 2 on A2: equal split inside each two-member family.
  if (w_gamma > 0.0)
    prep.append(CryGate{{{0, false}, {1, true}},
                        2,
                        split_angle(weight_of(decomp, kZ1) / w_gamma)});
  if (w_beta > 0.0)
    prep.append(CryGate{{{0, true}, {1, false}},
                        2,
                        split_angle(weight_of(decomp, kYY) / w_beta)});
  if (w_delta > 0.0)
    prep.append(CryGate{{{0, true}, {1, true}},
                        2,
                        split_angle(weight_of(decomp, kYX) / w_delta)});
  return prep;
}

Circuit build_select(const UnitaryDecomposition& decomp) {
  if (decomp.entries.empty() || decomp.entries.size() > 8)
    throw std::invalid_argument("lcu: entry count must be in [1, 8]");
  Circuit sel;
  sel.num_qubits = kNumTargets + kNumAncillas;
  for (const auto& e : decomp.entries) {
    if (e.sign == 1 && e.axes[0] == Pauli::I && e.axes[1] == Pauli::I)
      continue;  // +identity block needs no gate
    CPauliGate g;
    g.controls = ancilla_controls(e.ancilla_pattern, kNumAncillas, kNumTargets);
    g.targets = {0, 1};
    g.axes = {e.axes[0], e.axes[1]};
    g.sign = e.sign;
    sel.append(std::move(g));
  }
  return sel;
}

Circuit lcu_circuit(const UnitaryDecomposition& decomp) {
  const Circuit prep = build_prepare(decomp);
  const std::vector<int> onto_ancillas = {kNumTargets, kNumTargets + 1,
                                          kNumTargets + 2};
  const int total = kNumTargets + kNumAncillas;
  const Circuit prep_embedded = remap(prep, onto_ancillas, total);
  const Circuit select = build_select(decomp);

  Circuit full;
  full.num_qubits = total;
  for (const auto& g : prep_embedded.gates) full.gates.push_back(g);
  for (const auto& g : select.gates) full.gates.push_back(g);
  const Circuit unprep = adjoint(prep_embedded);
  for (const auto& g : unprep.gates) full.gates.push_back(g);
  return full;
}

LcuEstimate run_lcu(const UnitaryDecomposition& decomp, std::int64_t shots,
                    std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("run_lcu: shots must be >= 1");
  const Circuit circuit = lcu_circuit(decomp);
  const StateVector in =
      StateVector::basis_state(kNumTargets + kNumAncillas, kGroundIndex);
  const StateVector out = apply(circuit, in);

  const auto counts = sample(out, {0, 1, 2, 3, 4}, shots, seed);
  LcuEstimate est;
  est.shots = shots;
  for (const auto& [key, count] : counts) {
    if ((key >> kNumTargets) != 0) continue;  // ancillas not back to |000>
    est.successes += count;
    if (key == kExcitedIndex) est.transitions += count;
  }
  est.p_success =
      static_cast<double>(est.successes) / static_cast<double>(shots);
  est.se_success = std::sqrt(est.p_success * (1.0 - est.p_success) /
                             static_cast<double>(shots));
  if (est.successes > 0) {
    const double pt = static_cast<double>(est.transitions) /
                      static_cast<double>(est.successes);
    est.p_transition = pt;
    est.se_transition =
        std::sqrt(pt * (1.0 - pt) / static_cast<double>(est.successes));
  }
  return est;
}

namespace {

SweepPoint run_point(double theta, double phi, std::string_view mapping,
                     double alpha0, std::int64_t shots, std::uint64_t point_seed) {
  SweepPoint p;
  p.coeffs = coefficients_from_angle(theta, phi, mapping, alpha0);
  const RestrictedOperator op =
      restrict_to_subspace(jordan_wigner_two_mode(subspace_matrix(p.coeffs)));
  const UnitaryDecomposition decomp = decompose(op);
  p.lambda_norm = decomp.lambda_norm;
  p.estimate = run_lcu(decomp, shots, point_seed);
  p.estimate.theta = theta;
  p.estimate.phi = phi;
  return p;
}

}  // namespace

std::vector<SweepPoint> sweep(const std::vector<double>& theta_grid, double phi,
                              std::string_view mapping, double alpha0,
                              std::int64_t shots, std::uint64_t seed, int jobs) {
  if (theta_grid.empty()) throw std::invalid_argument("sweep: empty grid");
  std::vector<SweepPoint> points(theta_grid.size());
  parallel_for(theta_grid.size(), jobs, [&](std::size_t i) {
    points[i] = run_point(theta_grid[i], phi, mapping, alpha0, shots,
                          rng::derive(seed, i));
  });
  return points;
}

std::vector<SweepPoint> sweep3d(const std::vector<double>& theta_grid,
                                const std::vector<double>& phi_grid,
                                std::string_view mapping, double alpha0,
                                std::int64_t shots, std::uint64_t seed,
                                int jobs) {
  if (theta_grid.empty() || phi_grid.empty())
    throw std::invalid_argument("sweep3d: empty grid");
  std::vector<SweepPoint> points(theta_grid.size() * phi_grid.size());
  parallel_for(points.size(), jobs, [&](std::size_t i) {
    const std::size_t p = i / theta_grid.size();
    const std::size_t t = i % theta_grid.size();
    points[i] = run_point(theta_grid[t], phi_grid[p], mapping, alpha0, shots,
                          rng::derive(seed, i));
  });
  return points;
}

std::string sweep_to_csv(const std::vector<SweepPoint>& points) {
  std::ostringstream os;
  os.precision(17);
  os << "theta_rad,phi_rad,alpha,beta,gamma,delta,lambda_norm,shots,successes,"
        "transitions,p_success,p_transition,se_success,se_transition\n";
  for (const auto& p : points) {
    const auto& e = p.estimate;
    os << e.theta << "," << e.phi << "," << p.coeffs.alpha << ","
       << p.coeffs.beta << "," << p.coeffs.gamma << "," << p.coeffs.delta << ","
       << p.lambda_norm << "," << e.shots << "," << e.successes << ","
       << e.transitions << "," << e.p_success << ",";
    if (e.p_transition)
      os << *e.p_transition;
    else
      os << "nan";
    os << "," << e.se_success << ",";
    if (e.se_transition)
      os << *e.se_transition;
    else
      os << "nan";
    os << "\n";
  }
  return os.str();
}

}  // namespace tritonsim
