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

#include "tritonsim/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tritonsim {

namespace {

void check_hermitian(const Eigen::MatrixXcd& h, double tol) {
  if (h.rows() != h.cols())
    throw std::invalid_argument("diagonalize: matrix not square");
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("diagonalize: matrix not Hermitian");
}

// Householder similarity reduction of a Hermitian matrix to a real symmetric
// tridiagonal (diag, offdiag), accumulating the unitary into q. A diagonal
// phase similarity after each reflector keeps the subdiagonal real and
// non-negative.
void householder_tridiagonalize(Eigen::MatrixXcd a, Eigen::VectorXd& diag,
                                Eigen::VectorXd& offdiag, Eigen::MatrixXcd& q) {
  const Eigen::Index n = a.rows();
  q = Eigen::MatrixXcd::Identity(n, n);
  diag.resize(n);
  offdiag.resize(n > 0 ? n - 1 : 0);

  for (Eigen::Index k = 0; k + 2 <= n; ++k) {
    const Eigen::Index m = n - k - 1;  // column length below the diagonal
    Eigen::VectorXcd x = a.col(k).segment(k + 1, m);
    const double xnorm = x.norm();
    if (xnorm == 0.0) continue;

    // Reflector H = I - 2uu^dag with Hx = -phase*xnorm*e1.
    std::complex<double> phase(1.0, 0.0);
    if (std::abs(x[0]) > 0.0) phase = x[0] / std::abs(x[0]);
    Eigen::VectorXcd u = x;
    u[0] += phase * xnorm;
    const double unorm = u.norm();
    if (unorm == 0.0) continue;
    u /= unorm;

    // Trailing block <- H A H = A - 2uw^dag - 2wu^dag + 4 kappa uu^dag.
    auto block = a.block(k + 1, k + 1, m, m);
    const Eigen::VectorXcd w = block * u;
    const std::complex<double> kappa = u.dot(w);
    block.noalias() -= 2.0 * (u * w.adjoint() + w * u.adjoint());
    block.noalias() += (4.0 * kappa) * (u * u.adjoint());

    a.col(k).segment(k + 1, m).setZero();
    a.col(k)(k + 1) = -phase * xnorm;
    a.row(k).segment(k + 1, m).setZero();
    a.row(k)(k + 1) = std::conj(-phase * xnorm);

    // Accumulate Q <- Q H.
    auto qblock = q.block(0, k + 1, n, m);
    const Eigen::VectorXcd qu = qblock * u;
    qblock.noalias() -= 2.0 * qu * u.adjoint();

    // Diagonal similarity D = diag(..., fix at k+1, ...) with fix chosen so
    // the subdiagonal entry becomes +xnorm; Q absorbs D^dag.
    const std::complex<double> fix = -std::conj(phase);
    a.row(k + 1) *= fix;
    a.col(k + 1) *= std::conj(fix);
    q.col(k + 1) *= std::conj(fix);
  }

  for (Eigen::Index i = 0; i < n; ++i) diag[i] = a(i, i).real();
  for (Eigen::Index i = 0; i + 1 < n; ++i) offdiag[i] = a(i + 1, i).real();
}

// Implicit-shift QL on a real symmetric tridiagonal, rotations applied to the
// columns of q.
void tridiagonal_ql(Eigen::VectorXd& d, Eigen::VectorXd& e, Eigen::MatrixXcd& q) {
  const Eigen::Index n = d.size();
  if (n <= 1) return;
  Eigen::VectorXd ework(n);
  ework.setZero();
  ework.head(n - 1) = e;

  for (Eigen::Index l = 0; l < n; ++l) {
    int iterations = 0;
    while (true) {
      Eigen::Index m = l;
      for (; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(ework[m]) <= 1e-300 + 2.3e-16 * dd) break;
      }
      if (m == l) break;
      if (++iterations > 50)
        throw std::runtime_error("diagonalize: QL failed to converge");

      double g = (d[l + 1] - d[l]) / (2.0 * ework[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + ework[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (Eigen::Index i = m - 1; i >= l; --i) {
        double f = s * ework[i];
        const double b = c * ework[i];
        r = std::hypot(f, g);
        ework[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          ework[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        for (Eigen::Index row = 0; row < n; ++row) {
          const std::complex<double> qi1 = q(row, i + 1);
          const std::complex<double> qi = q(row, i);
          q(row, i + 1) = s * qi + c * qi1;
          q(row, i) = c * qi - s * qi1;
        }
      }
      if (underflow) continue;
      d[l] -= p;
      ework[l] = g;
      ework[m] = 0.0;
    }
  }
}

void sort_spectrum(Spectrum& s) {
  const Eigen::Index n = s.eigenvalues.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return s.eigenvalues[a] < s.eigenvalues[b];
  });
  Eigen::VectorXd vals(n);
  Eigen::MatrixXcd vecs(s.eigenvectors.rows(), n);
  for (Eigen::Index k = 0; k < n; ++k) {
    vals[k] = s.eigenvalues[order[static_cast<std::size_t>(k)]];
    vecs.col(k) = s.eigenvectors.col(order[static_cast<std::size_t>(k)]);
  }
  s.eigenvalues = std::move(vals);
  s.eigenvectors = std::move(vecs);
}

}  // namespace

Spectrum diagonalize_dense(const Eigen::MatrixXcd& h) {
  check_hermitian(h, 1e-10);
  Eigen::VectorXd diag, offdiag;
  Spectrum s;
  householder_tridiagonalize(h, diag, offdiag, s.eigenvectors);
  tridiagonal_ql(diag, offdiag, s.eigenvectors);
  s.eigenvalues = diag;
  sort_spectrum(s);
  return s;
}

Spectrum diagonalize(const PauliSum& h) {
  if (h.num_qubits > 12)
    throw std::invalid_argument("diagonalize: register too large");
  return diagonalize_dense(to_dense(h));
}

Spectrum diagonalize_power_iteration(const Eigen::MatrixXcd& h) {
  check_hermitian(h, 1e-10);
  const Eigen::Index n = h.rows();

  // Shift so the smallest eigenvalue of h is the dominant one of b,
  // then peel eigenpairs off in ascending order by deflation.
  double bound = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    bound = std::max(bound, h.row(i).cwiseAbs().sum());
  const double shift = bound + 1.0;
  Eigen::MatrixXcd b = shift * Eigen::MatrixXcd::Identity(n, n) - h;

  Spectrum s;
  s.eigenvalues.resize(n);
  s.eigenvectors.resize(n, n);

  Eigen::VectorXcd v(n), bv(n), residual(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index i = 0; i < n; ++i)
      v[i] = std::complex<double>(std::cos(0.7 * static_cast<double>(i + 3 * k + 1)),
                                  std::sin(0.3 * static_cast<double>(i + k + 2)));
    auto project_out_found = [&](Eigen::VectorXcd& w) {
      for (Eigen::Index j = 0; j < k; ++j)
        w -= s.eigenvectors.col(j).dot(w) * s.eigenvectors.col(j);
    };
    project_out_found(v);
    v.normalize();

    // Deflation against imperfect earlier vectors sets a residual floor, so
    // track the best iterate and stop once progress stalls.
    double lambda_b = 0.0;
    double best_residual = 1e300;
    double best_lambda = 0.0;
    Eigen::VectorXcd best_v = v;
    int stalled = 0;
    bv.noalias() = b * v;
    for (int iter = 0; iter < 100000; ++iter) {
      v = bv;
      project_out_found(v);
      const double vnorm = v.norm();
      if (vnorm == 0.0) break;
      v /= vnorm;
      bv.noalias() = b * v;
      lambda_b = v.dot(bv).real();
      residual = bv;
      residual -= lambda_b * v;
      const double res = residual.norm();
      if (res < 0.99 * best_residual) {
        best_residual = res;
        best_lambda = lambda_b;
        best_v = v;
        stalled = 0;
      } else if (++stalled > 400) {
        break;
      }
      if (res < 1e-11) break;
    }
    s.eigenvalues[k] = shift - best_lambda;
    s.eigenvectors.col(k) = best_v;
  }
  sort_spectrum(s);
  return s;
}

TransitionProbabilities exact_transition(const ExcitationCoefficients& coeffs) {
  const double lambda_norm = std::abs(coeffs.alpha) + std::abs(coeffs.beta) +
                             std::abs(coeffs.gamma) + std::abs(coeffs.delta);
  if (lambda_norm == 0.0)
    throw std::invalid_argument("exact_transition: zero operator");

  const Eigen::Matrix2cd m = subspace_matrix(coeffs);
  const Eigen::Vector2cd on_ground = m.col(0);  // O|g> in the (g, e) basis
  const double norm_sq = on_ground.squaredNorm();

  TransitionProbabilities out;
  out.p_success = norm_sq / (lambda_norm * lambda_norm);
  if (norm_sq == 0.0) {
    out.p_transition = 0.0;
    out.transition_defined = false;
  } else {
    out.p_transition = std::norm(on_ground[1]) / norm_sq;
  }
  return out;
}

}  // namespace tritonsim
