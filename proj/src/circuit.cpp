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

#include "tritonsim/circuit.hpp"

#include <bit>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tritonsim {

namespace {

void check_index(int q, int n) {
  if (q < 0 || q >= n) throw std::invalid_argument("circuit: qubit index out of range");
}

void check_distinct(const std::vector<int>& qubits) {
  std::set<int> seen(qubits.begin(), qubits.end());
  if (seen.size() != qubits.size())
    throw std::invalid_argument("circuit: qubit indices must be distinct");
}

std::vector<int> gate_qubits(const Gate& gate) {
  std::vector<int> qs;
  std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, RyGate> || std::is_same_v<T, XGate> ||
                      std::is_same_v<T, ZGate>) {
          qs.push_back(g.target);
        } else if constexpr (std::is_same_v<T, CzGate>) {
          qs.push_back(g.a);
          qs.push_back(g.b);
        } else if constexpr (std::is_same_v<T, CryGate>) {
          for (const auto& c : g.controls) qs.push_back(c.qubit);
          qs.push_back(g.target);
        } else {
          for (const auto& c : g.controls) qs.push_back(c.qubit);
          for (int t : g.targets) qs.push_back(t);
        }
      },
      gate);
  return qs;
}

struct ControlMask {
  std::uint64_t mask = 0;
  std::uint64_t values = 0;
};

ControlMask control_mask(const std::vector<Control>& controls) {
  ControlMask cm;
  for (const auto& c : controls) {
    cm.mask |= std::uint64_t{1} << c.qubit;
    if (c.value) cm.values |= std::uint64_t{1} << c.qubit;
  }
  return cm;
}

void rotate_pair(Eigen::VectorXcd& amp, std::uint64_t i0, std::uint64_t i1,
                 double c, double s) {
  const auto a0 = amp[static_cast<Eigen::Index>(i0)];
  const auto a1 = amp[static_cast<Eigen::Index>(i1)];
  amp[static_cast<Eigen::Index>(i0)] = c * a0 - s * a1;
  amp[static_cast<Eigen::Index>(i1)] = s * a0 + c * a1;
}

void apply_ry(Eigen::VectorXcd& amp, int target, double angle, std::uint64_t dim) {
  const double c = std::cos(angle / 2.0), s = std::sin(angle / 2.0);
  const std::uint64_t bit = std::uint64_t{1} << target;
  for (std::uint64_t i = 0; i < dim; ++i)
    if (!(i & bit)) rotate_pair(amp, i, i | bit, c, s);
}

void apply_x(Eigen::VectorXcd& amp, int target, std::uint64_t dim) {
  const std::uint64_t bit = std::uint64_t{1} << target;
  for (std::uint64_t i = 0; i < dim; ++i)
    if (!(i & bit))
      std::swap(amp[static_cast<Eigen::Index>(i)],
                amp[static_cast<Eigen::Index>(i | bit)]);
}

void apply_z(Eigen::VectorXcd& amp, int target, std::uint64_t dim) {
  const std::uint64_t bit = std::uint64_t{1} << target;
  for (std::uint64_t i = 0; i < dim; ++i)
    if (i & bit) amp[static_cast<Eigen::Index>(i)] = -amp[static_cast<Eigen::Index>(i)];
}

void apply_cz(Eigen::VectorXcd& amp, int a, int b, std::uint64_t dim) {
  const std::uint64_t both =
      (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
  for (std::uint64_t i = 0; i < dim; ++i)
    if ((i & both) == both)
      amp[static_cast<Eigen::Index>(i)] = -amp[static_cast<Eigen::Index>(i)];
}

void apply_cry(Eigen::VectorXcd& amp, const CryGate& g, std::uint64_t dim) {
  const ControlMask cm = control_mask(g.controls);
  const double c = std::cos(g.angle / 2.0), s = std::sin(g.angle / 2.0);
  const std::uint64_t bit = std::uint64_t{1} << g.target;
  for (std::uint64_t i = 0; i < dim; ++i)
    if (!(i & bit) && (i & cm.mask) == cm.values)
      rotate_pair(amp, i, i | bit, c, s);
}

void apply_cpauli(Eigen::VectorXcd& amp, const CPauliGate& g, std::uint64_t dim) {
  const ControlMask cm = control_mask(g.controls);
  std::uint64_t flip = 0, phase = 0;
  int y_count = 0;
  for (std::size_t k = 0; k < g.targets.size(); ++k) {
    const std::uint64_t bit = std::uint64_t{1} << g.targets[k];
    switch (g.axes[k]) {
      case Pauli::I: break;
      case Pauli::X: flip |= bit; break;
      case Pauli::Y: flip |= bit; phase |= bit; ++y_count; break;
      case Pauli::Z: phase |= bit; break;
    }
  }
  // i^y_count: Pauli strings are Hermitian, so y_count phases pair up below.
  std::complex<double> base(0, 0);
  switch (y_count & 3) {
    case 0: base = {1, 0}; break;
    case 1: base = {0, 1}; break;
    case 2: base = {-1, 0}; break;
    case 3: base = {0, -1}; break;
  }
  base *= static_cast<double>(g.sign);
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & cm.mask) != cm.values) continue;
    const std::uint64_t j = i ^ flip;
    if (j < i) continue;  // pair handled once
    const double sign_i = (std::popcount(i & phase) & 1) ? -1.0 : 1.0;
    if (i == j) {
      amp[static_cast<Eigen::Index>(i)] *= base * sign_i;
      continue;
    }
    const double sign_j = (std::popcount(j & phase) & 1) ? -1.0 : 1.0;
    const auto ai = amp[static_cast<Eigen::Index>(i)];
    const auto aj = amp[static_cast<Eigen::Index>(j)];
    amp[static_cast<Eigen::Index>(j)] = base * sign_i * ai;
    amp[static_cast<Eigen::Index>(i)] = base * sign_j * aj;
  }
}

}  // namespace

void Circuit::append(Gate gate) {
  const auto qs = gate_qubits(gate);
  for (int q : qs) check_index(q, num_qubits);
  check_distinct(qs);
  if (const auto* cp = std::get_if<CPauliGate>(&gate)) {
    if (cp->axes.size() != cp->targets.size())
      throw std::invalid_argument("circuit: CPauli axes/targets length mismatch");
    if (cp->sign != 1 && cp->sign != -1)
      throw std::invalid_argument("circuit: CPauli sign must be +-1");
  }
  gates.push_back(std::move(gate));
}

StateVector apply(const Circuit& circuit, StateVector input) {
  if (circuit.num_qubits != input.num_qubits)
    throw std::invalid_argument("apply: register size mismatch");
  const std::uint64_t dim = input.dimension();
  const double norm_in = input.amplitudes.squaredNorm();
  for (const auto& gate : circuit.gates) {
    std::visit(
        [&](const auto& g) {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, RyGate>) {
            if (g.param_slot >= 0)
              throw std::invalid_argument("apply: unbound parameter slot");
            apply_ry(input.amplitudes, g.target, g.angle, dim);
          } else if constexpr (std::is_same_v<T, XGate>) {
            apply_x(input.amplitudes, g.target, dim);
          } else if constexpr (std::is_same_v<T, ZGate>) {
            apply_z(input.amplitudes, g.target, dim);
          } else if constexpr (std::is_same_v<T, CzGate>) {
            apply_cz(input.amplitudes, g.a, g.b, dim);
          } else if constexpr (std::is_same_v<T, CryGate>) {
            apply_cry(input.amplitudes, g, dim);
          } else {
            apply_cpauli(input.amplitudes, g, dim);
          }
        },
        gate);
    const double n2 = input.amplitudes.squaredNorm();
    if (std::abs(n2 - norm_in) > 1e-10)
      throw std::runtime_error("apply: gate broke normalization");
  }
  return input;
}

Circuit adjoint(const Circuit& circuit) {
  Circuit out;
  out.num_qubits = circuit.num_qubits;
  out.gates.reserve(circuit.gates.size());
  for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
    Gate g = *it;
    if (auto* ry = std::get_if<RyGate>(&g)) {
      if (ry->param_slot >= 0)
        throw std::invalid_argument("adjoint: unbound parameter slot");
      ry->angle = -ry->angle;
    } else if (auto* cry = std::get_if<CryGate>(&g)) {
      cry->angle = -cry->angle;
    }
    // X, Z, CZ and signed Pauli strings are self-inverse.
    out.gates.push_back(std::move(g));
  }
  return out;
}

int param_count(const Circuit& circuit) {
  int max_slot = -1;
  for (const auto& gate : circuit.gates)
    if (const auto* ry = std::get_if<RyGate>(&gate))
      if (ry->param_slot > max_slot) max_slot = ry->param_slot;
  return max_slot + 1;
}

Circuit bind(const Circuit& circuit, const Eigen::VectorXd& theta) {
  const int slots = param_count(circuit);
  if (theta.size() != slots)
    throw std::invalid_argument("bind: parameter count mismatch");
  Circuit out = circuit;
  for (auto& gate : out.gates) {
    if (auto* ry = std::get_if<RyGate>(&gate); ry && ry->param_slot >= 0) {
      ry->angle = theta[ry->param_slot];
      ry->param_slot = -1;
    }
  }
  return out;
}

Eigen::MatrixXcd circuit_unitary(const Circuit& circuit) {
  if (circuit.num_qubits > 12)
    throw std::invalid_argument("circuit_unitary: register too large");
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << circuit.num_qubits);
  Eigen::MatrixXcd u(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    auto basis = StateVector::basis_state(circuit.num_qubits,
                                          static_cast<std::uint64_t>(col));
    u.col(col) = apply(circuit, std::move(basis)).amplitudes;
  }
  return u;
}

Circuit remap(const Circuit& circuit, const std::vector<int>& mapping,
              int new_num_qubits) {
  if (static_cast<int>(mapping.size()) != circuit.num_qubits)
    throw std::invalid_argument("remap: mapping size mismatch");
  auto m = [&](int q) {
    check_index(mapping[static_cast<std::size_t>(q)], new_num_qubits);
    return mapping[static_cast<std::size_t>(q)];
  };
  Circuit out;
  out.num_qubits = new_num_qubits;
  for (const auto& gate : circuit.gates) {
    Gate g = gate;
    std::visit(
        [&](auto& gg) {
          using T = std::decay_t<decltype(gg)>;
          if constexpr (std::is_same_v<T, RyGate> || std::is_same_v<T, XGate> ||
                        std::is_same_v<T, ZGate>) {
            gg.target = m(gg.target);
          } else if constexpr (std::is_same_v<T, CzGate>) {
            gg.a = m(gg.a);
            gg.b = m(gg.b);
          } else if constexpr (std::is_same_v<T, CryGate>) {
            for (auto& c : gg.controls) c.qubit = m(c.qubit);
            gg.target = m(gg.target);
          } else {
            for (auto& c : gg.controls) c.qubit = m(c.qubit);
            for (auto& t : gg.targets) t = m(t);
          }
        },
        g);
    out.gates.push_back(std::move(g));
  }
  return out;
}

std::string circuit_to_json(const Circuit& circuit) {
  std::ostringstream os;
  os.precision(17);
  os << "{\"num_qubits\":" << circuit.num_qubits << ",\"gates\":[";
  bool first = true;
  auto controls_json = [&](const std::vector<Control>& cs) {
    std::ostringstream c;
    c << "[";
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (k) c << ",";
      c << "{\"qubit\":" << cs[k].qubit << ",\"value\":" << (cs[k].value ? 1 : 0)
        << "}";
    }
    c << "]";
    return c.str();
  };
  for (const auto& gate : circuit.gates) {
    if (!first) os << ",";
    first = false;
    std::visit(
        [&](const auto& g) {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, RyGate>) {
            os << "{\"gate\":\"ry\",\"target\":" << g.target;
            if (g.param_slot >= 0)
              os << ",\"slot\":" << g.param_slot;
            else
              os << ",\"angle\":" << g.angle;
            os << "}";
          } else if constexpr (std::is_same_v<T, XGate>) {
            os << "{\"gate\":\"x\",\"target\":" << g.target << "}";
          } else if constexpr (std::is_same_v<T, ZGate>) {
            os << "{\"gate\":\"z\",\"target\":" << g.target << "}";
          } else if constexpr (std::is_same_v<T, CzGate>) {
            os << "{\"gate\":\"cz\",\"qubits\":[" << g.a << "," << g.b << "]}";
          } else if constexpr (std::is_same_v<T, CryGate>) {
            os << "{\"gate\":\"cry\",\"controls\":" << controls_json(g.controls)
               << ",\"target\":" << g.target << ",\"angle\":" << g.angle << "}";
          } else {
            os << "{\"gate\":\"cpauli\",\"controls\":" << controls_json(g.controls)
               << ",\"targets\":[";
            for (std::size_t k = 0; k < g.targets.size(); ++k) {
              if (k) os << ",";
              os << g.targets[k];
            }
            os << "],\"axes\":\"";
            for (Pauli p : g.axes) os << to_char(p);
            os << "\",\"sign\":" << g.sign << "}";
          }
        },
        gate);
  }
  os << "]}";
  return os.str();
}

}  // namespace tritonsim
