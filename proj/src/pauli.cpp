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

#include "tritonsim/pauli.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace tritonsim {

namespace {

struct TermMasks {
  std::uint64_t flip = 0;   // X and Y qubits
  std::uint64_t phase = 0;  // Y and Z qubits contribute (-1)^popcount
  int y_count = 0;
};

TermMasks masks_of(const PauliTerm& term) {
  TermMasks m;
  for (int q = 0; q < term.num_qubits(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (term.axes[static_cast<std::size_t>(q)]) {
      case Pauli::I:
        break;
      case Pauli::X:
        m.flip |= bit;
        break;
      case Pauli::Y:
        m.flip |= bit;
        m.phase |= bit;
        ++m.y_count;
        break;
      case Pauli::Z:
        m.phase |= bit;
        break;
    }
  }
  return m;
}

// i^k for k mod 4
std::complex<double> ipow(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

void check_register(const PauliSum& h) {
  for (const auto& t : h.terms)
    if (t.num_qubits() != h.num_qubits)
      throw std::invalid_argument("pauli: term register size mismatch");
}

std::string format_double(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::runtime_error("pauli: number format");
  return std::string(buf, end);
}

}  // namespace

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    default: return 'Z';
  }
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: throw std::invalid_argument("pauli: unknown axis character");
  }
}

PauliSum operator+(const PauliSum& a, const PauliSum& b) {
  if (a.num_qubits != b.num_qubits)
    throw std::invalid_argument("pauli: sum register size mismatch");
  PauliSum out = a;
  out.identity_offset += b.identity_offset;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  return out;
}

PauliSum operator*(double scale, const PauliSum& p) {
  PauliSum out = p;
  out.identity_offset *= scale;
  for (auto& t : out.terms) t.coefficient *= scale;
  return out;
}

PauliSum build_triton_hamiltonian(double t, double u) {
  constexpr int n = 4;
  PauliSum h;
  h.num_qubits = n;
  h.identity_offset = 8.0 * t + u / 2.0;

  auto string_on = [](std::vector<int> qubits, Pauli axis, double coeff) {
    PauliTerm term;
    term.coefficient = coeff;
    term.axes.assign(n, Pauli::I);
    for (int q : qubits) term.axes[static_cast<std::size_t>(q)] = axis;
    return term;
  };

  for (int k = 0; k < n; ++k) h.terms.push_back(string_on({k}, Pauli::X, -2.0 * t));
  for (auto [i, j] : {std::pair{0, 3}, std::pair{1, 2}})
    h.terms.push_back(string_on({i, j}, Pauli::Z, -u / 4.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        h.terms.push_back(string_on({i, j, k}, Pauli::Z, -u / 4.0));
  return h;
}

StateVector apply_term(const PauliTerm& term, const StateVector& psi) {
  if (term.num_qubits() != psi.num_qubits)
    throw std::invalid_argument("pauli: register size mismatch");
  const TermMasks m = masks_of(term);
  const std::complex<double> base = term.coefficient * ipow(m.y_count);
  StateVector out;
  out.num_qubits = psi.num_qubits;
  out.amplitudes.resize(psi.amplitudes.size());
  const std::uint64_t dim = psi.dimension();
  for (std::uint64_t i = 0; i < dim; ++i) {
    const double sign = (std::popcount(i & m.phase) & 1) ? -1.0 : 1.0;
    out.amplitudes[static_cast<Eigen::Index>(i ^ m.flip)] =
        base * sign * psi.amplitudes[static_cast<Eigen::Index>(i)];
  }
  return out;
}

double expectation(const PauliSum& h, const StateVector& psi) {
  if (h.num_qubits != psi.num_qubits)
    throw std::invalid_argument("expectation: register size mismatch");
  check_register(h);
  const std::uint64_t dim = psi.dimension();
  std::complex<double> acc = h.identity_offset * psi.amplitudes.squaredNorm();
  for (const auto& term : h.terms) {
    const TermMasks m = masks_of(term);
    const std::complex<double> base = term.coefficient * ipow(m.y_count);
    std::complex<double> term_acc = 0.0;
    for (std::uint64_t i = 0; i < dim; ++i) {
      const double sign = (std::popcount(i & m.phase) & 1) ? -1.0 : 1.0;
      term_acc += std::conj(psi.amplitudes[static_cast<Eigen::Index>(i ^ m.flip)]) *
                  sign * psi.amplitudes[static_cast<Eigen::Index>(i)];
    }
    acc += base * term_acc;
  }
  if (std::abs(acc.imag()) > 1e-10)
    throw std::invalid_argument("expectation: non-Hermitian input (imaginary residue)");
  return acc.real();
}

Eigen::MatrixXcd to_dense(const PauliTerm& term) {
  const int n = term.num_qubits();
  if (n > 12) throw std::invalid_argument("to_dense: register too large");
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n);
  const TermMasks m = masks_of(term);
  const std::complex<double> base = term.coefficient * ipow(m.y_count);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const auto ui = static_cast<std::uint64_t>(i);
    const double sign = (std::popcount(ui & m.phase) & 1) ? -1.0 : 1.0;
    out(static_cast<Eigen::Index>(ui ^ m.flip), i) = base * sign;
  }
  return out;
}

Eigen::MatrixXcd to_dense(const PauliSum& h) {
  if (h.num_qubits > 12) throw std::invalid_argument("to_dense: register too large");
  check_register(h);
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << h.num_qubits);
  Eigen::MatrixXcd out =
      h.identity_offset * Eigen::MatrixXcd::Identity(dim, dim);
  for (const auto& term : h.terms) out += to_dense(term);
  return out;
}

std::string to_string(const PauliSum& h) {
  check_register(h);
  std::string out = format_double(h.identity_offset);
  for (const auto& term : h.terms) {
    out += " + ";
    out += format_double(term.coefficient);
    out += " * ";
    for (Pauli p : term.axes) out += to_char(p);
  }
  return out;
}

PauliSum parse_pauli_sum(std::string_view text) {
  PauliSum out;
  bool saw_offset = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) break;
    std::size_t chunk_end = text.find(" + ", pos);
    std::string_view chunk =
        text.substr(pos, chunk_end == std::string_view::npos ? std::string_view::npos
                                                             : chunk_end - pos);
    pos = chunk_end == std::string_view::npos ? text.size() : chunk_end + 3;

    const std::size_t star = chunk.find('*');
    double value = 0.0;
    std::string_view num =
        star == std::string_view::npos ? chunk : chunk.substr(0, star);
    while (!num.empty() && num.back() == ' ') num.remove_suffix(1);
    while (!num.empty() && num.front() == ' ') num.remove_prefix(1);
    auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (ec != std::errc{} || p != num.data() + num.size())
      throw std::invalid_argument("pauli: cannot parse coefficient");

    if (star == std::string_view::npos) {
      if (saw_offset) throw std::invalid_argument("pauli: duplicate identity offset");
      out.identity_offset = value;
      saw_offset = true;
      continue;
    }
    std::string_view axes = chunk.substr(star + 1);
    while (!axes.empty() && axes.front() == ' ') axes.remove_prefix(1);
    while (!axes.empty() && axes.back() == ' ') axes.remove_suffix(1);
    if (axes.empty()) throw std::invalid_argument("pauli: empty axis string");
    PauliTerm term;
    term.coefficient = value;
    for (char c : axes) term.axes.push_back(pauli_from_char(c));
    out.terms.push_back(std::move(term));
  }
  if (!out.terms.empty()) {
    out.num_qubits = out.terms.front().num_qubits();
    check_register(out);
  }
  return out;
}

}  // namespace tritonsim
