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

#include "tritonsim/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace tritonsim {

namespace {

constexpr double kFeasTol = 1e-6;

struct Sample {
  Eigen::VectorXd x;
  double f = 0.0;
  Eigen::VectorXd c;

  double violation() const {
    if (c.size() == 0) return 0.0;
    return std::max(0.0, -c.minCoeff());
  }
};

class Recorder {
 public:
  Recorder(const OptimizationProblem& problem, OptimizationTrace& trace)
      : problem_(problem), trace_(trace) {}

  Sample evaluate(const Eigen::VectorXd& x) {
    Sample s;
    s.x = x;
    s.f = problem_.objective(x);
    s.c.resize(static_cast<Eigen::Index>(problem_.inequality_constraints.size()));
    for (std::size_t k = 0; k < problem_.inequality_constraints.size(); ++k)
      s.c[static_cast<Eigen::Index>(k)] = problem_.inequality_constraints[k](x);
    trace_.records.push_back({s.x, s.f, s.c});
    consider_best(s);
    return s;
  }

  int count() const { return static_cast<int>(trace_.records.size()); }
  bool budget_left() const { return count() < problem_.max_iterations; }

  void finalize(Termination term) {
    trace_.termination = term;
    trace_.best_point = best_.x;
    trace_.best_objective = best_.f;
    trace_.best_constraints = best_.c;
  }

 private:
  void consider_best(const Sample& s) {
    if (!has_best_) {
      best_ = s;
      has_best_ = true;
      return;
    }
    const bool s_feasible = s.violation() <= kFeasTol;
    const bool best_feasible = best_.violation() <= kFeasTol;
    if (s_feasible != best_feasible) {
      if (s_feasible) best_ = s;
      return;
    }
    if (s_feasible) {
      if (s.f < best_.f) best_ = s;
    } else {
      if (s.violation() < best_.violation() ||
          (s.violation() == best_.violation() && s.f < best_.f))
        best_ = s;
    }
  }

  const OptimizationProblem& problem_;
  OptimizationTrace& trace_;
  Sample best_;
  bool has_best_ = false;
};

void check_problem(const OptimizationProblem& p) {
  if (!p.objective) throw std::invalid_argument("minimize: missing objective");
  if (p.initial_point.size() == 0)
    throw std::invalid_argument("minimize: empty initial point");
  if (p.max_iterations < 1)
    throw std::invalid_argument("minimize: max_iterations must be >= 1");
  if (p.initial_step <= 0.0)
    throw std::invalid_argument("minimize: initial_step must be positive");
  if (p.convergence_tolerance <= 0.0)
    throw std::invalid_argument("minimize: tolerance must be positive");
}

// Minimizes the linearized merit g.s + mu * max(0, max_k -(c_k + a_k.s))
// over |s| <= radius. With at most one constraint the KKT solution is
// closed-form (the workloads here have zero or one); more constraints fall
// back to projected subgradient on the exact penalty.
Eigen::VectorXd solve_subproblem(const Eigen::VectorXd& g,
                                 const Eigen::MatrixXd& a,
                                 const Eigen::VectorXd& c0, double mu,
                                 double radius) {
  const Eigen::Index n = g.size();
  const Eigen::Index m = a.rows();
  const double gnorm = g.norm();

  if (m == 0) {
    if (gnorm < 1e-300) return Eigen::VectorXd::Zero(n);
    return (-radius / gnorm) * g;
  }

  if (m == 1) {
    const Eigen::VectorXd arow = a.row(0).transpose();
    const double anorm = arow.norm();
    const double b = -c0[0];  // feasible when a.s >= b
    if (anorm < 1e-300) {
      if (gnorm < 1e-300) return Eigen::VectorXd::Zero(n);
      return (-radius / gnorm) * g;
    }
    // Plane unreachable inside the ball: move straight toward feasibility.
    if (b / anorm > radius) return (radius / anorm) * arow;

    Eigen::VectorXd cand = gnorm < 1e-300 ? Eigen::VectorXd::Zero(n)
                                          : Eigen::VectorXd((-radius / gnorm) * g);
    if (arow.dot(cand) >= b) return cand;

    // Active constraint: minimize g.s on the slice a.s = b of the ball.
    const Eigen::VectorXd base = (b / (anorm * anorm)) * arow;
    Eigen::VectorXd g_perp = g - (g.dot(arow) / (anorm * anorm)) * arow;
    const double pnorm = g_perp.norm();
    const double slack_sq = radius * radius - base.squaredNorm();
    if (pnorm < 1e-300 || slack_sq <= 0.0) return base;
    return base - (std::sqrt(slack_sq) / pnorm) * g_perp;
  }

  Eigen::VectorXd s = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd best_s = s;
  double best_val = std::numeric_limits<double>::infinity();

  auto value = [&](const Eigen::VectorXd& v) {
    double val = g.dot(v);
    const double worst = (c0 + a * v).minCoeff();
    if (worst < 0.0) val += mu * (-worst);
    return val;
  };

  for (int it = 0; it < 100; ++it) {
    const double cur = value(s);
    if (cur < best_val) {
      best_val = cur;
      best_s = s;
    }
    Eigen::VectorXd grad = g;
    Eigen::Index worst_k = 0;
    const double worst = (c0 + a * s).minCoeff(&worst_k);
    if (worst < 0.0) grad -= mu * a.row(worst_k).transpose();
    const double dnorm = grad.norm();
    if (dnorm < 1e-300) break;
    const double step = radius / (1.0 + it);
    s -= (step / dnorm) * grad;
    const double snorm = s.norm();
    if (snorm > radius) s *= radius / snorm;
  }
  if (value(s) < best_val) best_s = s;
  return best_s;
}

struct Simplex {
  std::vector<Sample> vertices;  // n+1 points

  Eigen::Index dim() const { return vertices.front().x.size(); }

  // Columns of the edge matrix from vertex `anchor`.
  Eigen::MatrixXd edges(std::size_t anchor) const {
    const Eigen::Index n = dim();
    Eigen::MatrixXd d(n, n);
    Eigen::Index col = 0;
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      if (j == anchor) continue;
      d.col(col++) = vertices[j].x - vertices[anchor].x;
    }
    return d;
  }
};

double merit(const Sample& s, double mu) { return s.f + mu * s.violation(); }

}  // namespace

OptimizationTrace minimize(const OptimizationProblem& problem, std::uint64_t /*seed*/) {
  check_problem(problem);
  OptimizationTrace trace;
  Recorder rec(problem, trace);

  const Eigen::Index n = problem.initial_point.size();
  const auto m = static_cast<Eigen::Index>(problem.inequality_constraints.size());
  double rho = problem.initial_step;
  const double rho_end = problem.convergence_tolerance;
  double mu = 0.0;

  Simplex sim;
  sim.vertices.push_back(rec.evaluate(problem.initial_point));
  for (Eigen::Index i = 0; i < n && rec.budget_left(); ++i) {
    Eigen::VectorXd xi = problem.initial_point;
    xi[i] += rho;
    sim.vertices.push_back(rec.evaluate(xi));
  }
  if (static_cast<Eigen::Index>(sim.vertices.size()) != n + 1) {
    rec.finalize(Termination::IterationCap);
    return trace;
  }

  auto best_vertex = [&]() {
    std::size_t best = 0;
    for (std::size_t j = 1; j < sim.vertices.size(); ++j)
      if (merit(sim.vertices[j], mu) < merit(sim.vertices[best], mu)) best = j;
    return best;
  };

  auto geometry_ok = [&](std::size_t anchor) {
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(sim.edges(anchor));
    const auto& sv = svd.singularValues();
    return sv[sv.size() - 1] > 0.05 * rho && sv[0] < 4.0 * rho;
  };

  auto quality_with = [&](std::size_t anchor, std::size_t slot,
                          const Eigen::VectorXd& point) {
    Eigen::MatrixXd edges(n, n);
    Eigen::Index col = 0;
    for (std::size_t k = 0; k < sim.vertices.size(); ++k) {
      if (k == anchor) continue;
      edges.col(col++) =
          (k == slot ? point : sim.vertices[k].x) - sim.vertices[anchor].x;
    }
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(edges);
    const auto& sv = svd.singularValues();
    return sv[sv.size() - 1] / std::max(sv[0], 1e-300);
  };

  // One evaluation that repairs the simplex at the current scale: vertices
  // stretched beyond 2 rho are pulled onto the trust sphere first; once all
  // edges are in range, a fresh point goes out along the least covered
  // direction, into whichever slot leaves the best-conditioned simplex.
  auto improve_geometry = [&](std::size_t anchor) {
    if (!rec.budget_left()) return;
    std::size_t far = anchor == 0 ? 1 : 0;
    double far_dist = -1.0;
    for (std::size_t j = 0; j < sim.vertices.size(); ++j) {
      if (j == anchor) continue;
      const double dist = (sim.vertices[j].x - sim.vertices[anchor].x).norm();
      if (dist > far_dist) {
        far_dist = dist;
        far = j;
      }
    }
    if (far_dist > 2.0 * rho) {
      const Eigen::VectorXd dir =
          (sim.vertices[far].x - sim.vertices[anchor].x) / far_dist;
      sim.vertices[far] = rec.evaluate(sim.vertices[anchor].x + rho * dir);
      return;
    }

    const Eigen::MatrixXd d = sim.edges(anchor);
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(d, Eigen::ComputeFullU);
    Eigen::VectorXd candidate =
        sim.vertices[anchor].x + rho * svd.matrixU().col(n - 1);
    for (const auto& v : sim.vertices) {
      if ((v.x - candidate).norm() < 1e-12 * (1.0 + candidate.norm())) {
        candidate = sim.vertices[anchor].x - rho * svd.matrixU().col(n - 1);
        break;
      }
    }
    std::size_t slot = far;
    double best_quality = -1.0;
    for (std::size_t j = 0; j < sim.vertices.size(); ++j) {
      if (j == anchor) continue;
      Eigen::MatrixXd trial_edges(n, n);
      Eigen::Index col = 0;
      for (std::size_t k = 0; k < sim.vertices.size(); ++k) {
        if (k == anchor) continue;
        trial_edges.col(col++) = (k == j ? candidate : sim.vertices[k].x) -
                                 sim.vertices[anchor].x;
      }
      const Eigen::JacobiSVD<Eigen::MatrixXd> tsvd(trial_edges);
      const auto& sv = tsvd.singularValues();
      const double quality = sv[sv.size() - 1] / std::max(sv[0], 1e-300);
      if (quality > best_quality) {
        best_quality = quality;
        slot = j;
      }
    }
    sim.vertices[slot] = rec.evaluate(candidate);
  };

  bool converged = false;
  auto shrink = [&] {
    if (rho <= rho_end * (1.0 + 1e-12)) {
      converged = true;
      return;
    }
    rho = std::max(0.5 * rho, rho_end);
  };
  auto farthest_from = [&](std::size_t anchor) {
    std::size_t far = anchor == 0 ? 1 : 0;
    double far_dist = -1.0;
    for (std::size_t j = 0; j < sim.vertices.size(); ++j) {
      if (j == anchor) continue;
      const double dist = (sim.vertices[j].x - sim.vertices[anchor].x).norm();
      if (dist > far_dist) {
        far_dist = dist;
        far = j;
      }
    }
    return far;
  };

  while (rec.budget_left() && !converged) {
    const std::size_t anchor = best_vertex();
    const Sample& base = sim.vertices[anchor];

    // Linear models around the anchor: objective gradient g, constraint rows a.
    const Eigen::MatrixXd d = sim.edges(anchor);
    Eigen::VectorXd df(n);
    Eigen::MatrixXd dc(m, n);
    Eigen::Index col = 0;
    for (std::size_t j = 0; j < sim.vertices.size(); ++j) {
      if (j == anchor) continue;
      df[col] = sim.vertices[j].f - base.f;
      if (m > 0) dc.col(col) = sim.vertices[j].c - base.c;
      ++col;
    }
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(d.transpose());
    if (!lu.isInvertible()) {
      improve_geometry(anchor);
      continue;
    }
    const Eigen::VectorXd g = lu.solve(df);
    Eigen::MatrixXd a(m, n);
    for (Eigen::Index k = 0; k < m; ++k)
      a.row(k) = lu.solve(dc.row(k).transpose()).transpose();

    const Eigen::VectorXd step =
        solve_subproblem(g, a, base.c, std::max(mu, 1.0), rho);

    const double pred_obj = -g.dot(step);
    double pred_viol = 0.0;
    if (m > 0) {
      const double v0 = std::max(0.0, -base.c.minCoeff());
      const double v1 = std::max(0.0, -(base.c + a * step).minCoeff());
      pred_viol = v0 - v1;
    }
    if (m > 0 && pred_obj + mu * pred_viol <= 0.0 && pred_viol > 0.0)
      mu = std::max(2.0 * mu, (std::abs(pred_obj) + 1e-6) / pred_viol) + 1.0;
    const double pred_merit = pred_obj + mu * pred_viol;

    if (step.norm() < 0.5 * rho || pred_merit <= 0.0) {
      if (geometry_ok(anchor)) {
        shrink();
      } else {
        improve_geometry(anchor);
      }
      continue;
    }

    const bool geo_ok_before = geometry_ok(anchor);
    const Sample trial = rec.evaluate(base.x + step);
    const bool improved = merit(trial, mu) < merit(base, mu);
    if (improved) {
      sim.vertices[farthest_from(anchor)] = trial;
      continue;
    }
    // A failed step may still carry information: keep it only in a slot
    // where it improves the simplex conditioning. The radius decision uses
    // the geometry as it was when the step was proposed.
    std::size_t best_slot = sim.vertices.size();
    double best_quality = quality_with(anchor, anchor, base.x);  // current
    for (std::size_t j = 0; j < sim.vertices.size(); ++j) {
      if (j == anchor) continue;
      const double q = quality_with(anchor, j, trial.x);
      if (q > best_quality) {
        best_quality = q;
        best_slot = j;
      }
    }
    if (best_slot < sim.vertices.size()) sim.vertices[best_slot] = trial;
    if (geo_ok_before) {
      shrink();
    } else {
      improve_geometry(best_vertex());
    }
  }

  rec.finalize(converged ? Termination::Converged : Termination::IterationCap);
  return trace;
}

OptimizationTrace minimize_nelder_mead(const OptimizationProblem& problem,
                                       std::uint64_t /*seed*/) {
  check_problem(problem);
  OptimizationTrace trace;
  Recorder rec(problem, trace);

  constexpr double kPenalty = 1e6;
  auto penalized = [&](const Sample& s) {
    double p = s.f;
    for (Eigen::Index k = 0; k < s.c.size(); ++k) {
      const double v = std::min(0.0, s.c[k]);
      p += kPenalty * v * v;
    }
    return p;
  };

  const Eigen::Index n = problem.initial_point.size();
  std::vector<Sample> simplex;
  simplex.push_back(rec.evaluate(problem.initial_point));
  for (Eigen::Index i = 0; i < n && rec.budget_left(); ++i) {
    Eigen::VectorXd xi = problem.initial_point;
    xi[i] += problem.initial_step;
    simplex.push_back(rec.evaluate(xi));
  }

  auto order = [&] {
    std::sort(simplex.begin(), simplex.end(),
              [&](const Sample& a, const Sample& b) {
                return penalized(a) < penalized(b);
              });
  };

  while (rec.budget_left() && static_cast<Eigen::Index>(simplex.size()) == n + 1) {
    order();
    double spread = 0.0;
    for (std::size_t j = 1; j < simplex.size(); ++j)
      spread = std::max(spread, (simplex[j].x - simplex[0].x).norm());
    if (spread < problem.convergence_tolerance) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (std::size_t j = 0; j + 1 < simplex.size(); ++j) centroid += simplex[j].x;
    centroid /= static_cast<double>(n);

    const Sample& worst = simplex.back();
    const Sample reflected = rec.evaluate(centroid + (centroid - worst.x));
    if (penalized(reflected) < penalized(simplex[0])) {
      if (!rec.budget_left()) {
        simplex.back() = reflected;
        break;
      }
      const Sample expanded = rec.evaluate(centroid + 2.0 * (centroid - worst.x));
      simplex.back() =
          penalized(expanded) < penalized(reflected) ? expanded : reflected;
    } else if (penalized(reflected) < penalized(simplex[simplex.size() - 2])) {
      simplex.back() = reflected;
    } else {
      if (!rec.budget_left()) break;
      const Sample contracted = rec.evaluate(centroid + 0.5 * (worst.x - centroid));
      if (penalized(contracted) < penalized(worst)) {
        simplex.back() = contracted;
      } else {
        for (std::size_t j = 1; j < simplex.size() && rec.budget_left(); ++j)
          simplex[j] = rec.evaluate(simplex[0].x + 0.5 * (simplex[j].x - simplex[0].x));
      }
    }
  }

  double spread = 0.0;
  for (std::size_t j = 1; j < simplex.size(); ++j)
    spread = std::max(spread, (simplex[j].x - simplex[0].x).norm());
  rec.finalize(spread < problem.convergence_tolerance ? Termination::Converged
                                                      : Termination::IterationCap);
  return trace;
}

std::string trace_to_csv(const OptimizationTrace& trace) {
  std::ostringstream os;
  os.precision(17);
  const Eigen::Index m =
      trace.records.empty() ? 0 : trace.records.front().constraints.size();
  const Eigen::Index n =
      trace.records.empty() ? 0 : trace.records.front().point.size();
  os << "iteration,objective";
  for (Eigen::Index k = 0; k < m; ++k) os << ",constraint" << k;
  for (Eigen::Index k = 0; k < n; ++k) os << ",theta" << k;
  os << "\n";
  for (std::size_t i = 0; i < trace.records.size(); ++i) {
    const auto& r = trace.records[i];
    os << i << "," << r.objective;
    for (Eigen::Index k = 0; k < m; ++k) os << "," << r.constraints[k];
    for (Eigen::Index k = 0; k < n; ++k) os << "," << r.point[k];
    os << "\n";
  }
  return os.str();
}

}  // namespace tritonsim
