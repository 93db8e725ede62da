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
#include "tritonsim/variational.hpp"

using namespace tritonsim;

namespace {

VariationalResult table1_ground() {
  VariationalResult g;
  g.algorithm = Algorithm::Vqe;
  g.theta = testdata::vqe_row();
  return g;
}

VariationalSettings fast_settings(int iterations = 1500) {
  VariationalSettings s;
  s.max_iterations = iterations;
  return s;
}

}  // namespace

TEST_CASE("flat landscape: identity offset only") {
  PauliSum h;
  h.num_qubits = 4;
  h.identity_offset = -1.25;
  const VariationalResult r = run_vqe(h, fast_settings(80), 1);
  CHECK(r.energy == doctest::Approx(-1.25));
  CHECK(r.loss == doctest::Approx(-1.25));
  for (const auto& rec : r.trace.records)
    CHECK(rec.objective == doctest::Approx(-1.25));
}

TEST_CASE("vqe respects the variational bound and recomputes energy") {
  const PauliSum h = build_triton_hamiltonian(1.0, -7.0);
  const VariationalResult r = run_vqe(h, fast_settings(400), 11);
  CHECK(r.energy >= testdata::kE0 - 1e-9);
  const double recomputed = expectation(h, ansatz_state(AnsatzSpec{}, r.theta));
  CHECK(std::abs(r.energy - recomputed) < 1e-9);
  CHECK(!r.overlap_with_ground.has_value());
}

TEST_CASE("vqd with lambda 0 reduces to vqe") {
  const PauliSum h = build_triton_hamiltonian(1.0, -7.0);
  const VariationalResult vqe = run_vqe(h, fast_settings(200), 21);
  const VariationalResult vqd =
      run_vqd(h, table1_ground(), 0.0, fast_settings(200), 21);
  REQUIRE(vqe.trace.records.size() == vqd.trace.records.size());
  for (std::size_t i = 0; i < vqe.trace.records.size(); ++i)
    CHECK(vqe.trace.records[i].objective ==
          doctest::Approx(vqd.trace.records[i].objective).epsilon(1e-12));
  CHECK(vqd.loss == doctest::Approx(vqd.energy));
}

TEST_CASE("deflation identity holds at every evaluated point") {
  const PauliSum h = build_triton_hamiltonian(1.0, -7.0);
  const double lambda = 2.5;
  const VariationalResult ground = table1_ground();
  const VariationalResult r =
      run_vqd(h, ground, lambda, fast_settings(150), 31);
  const StateVector g = ansatz_state(AnsatzSpec{}, ground.theta);
  for (std::size_t i = 0; i < r.trace.records.size(); i += 10) {
    const auto& rec = r.trace.records[i];
    const double e = expectation(h, ansatz_state(AnsatzSpec{}, rec.point));
    const double ov = overlap_sq(g, AnsatzSpec{}, rec.point);
    CHECK(std::abs(rec.objective - e - lambda * ov) < 1e-10);
  }
}

TEST_CASE("sub-gap lambda converges to E0 plus lambda") {
  const PauliSum h = build_triton_hamiltonian(1.0, -7.0);
  const double lambda = 0.75 * testdata::kGap;
  double best_loss = 1e300;
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const VariationalResult r =
        run_vqd(h, table1_ground(), lambda, fast_settings(), seed);
    best_loss = std::min(best_loss, r.loss);
  }
  CHECK(std::abs(best_loss - (testdata::kE0 + lambda)) < 0.05 * testdata::kGap);
}

TEST_CASE("vqd at lambda 4 finds the excited level") {
  const PauliSum h = build_triton_hamiltonian(1.0, -7.0);
  double best = 1e300;
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const VariationalResult r =
        run_vqd(h, table1_ground(), 4.0, fast_settings(), seed);
    CHECK(r.overlap_with_ground.has_value());
    if (std::abs(r.energy - testdata::kE1) <
        std::abs(best - testdata::kE1))
      best = r.energy;
  }
  CHECK(std::abs(best - testdata::kE1) / std::abs(testdata::kE1) <= 0.12);
}

TEST_CASE("vqeac with an inactive bound behaves like vqe") {
  const PauliSum h = build_triton_hamiltonian(1.0, -7.0);
  const VariationalResult ac = run_vqeac(h, table1_ground(), fast_settings(300),
                                         41, 1.0, 1.0);
  const VariationalResult vqe = run_vqe(h, fast_settings(300), 41);
  // Same start, one stage, constraint overlap <= 1 never binds: the search
  // visits the same points.
  REQUIRE(ac.trace.records.size() == vqe.trace.records.size());
  CHECK(ac.trace.records.back().objective ==
        doctest::Approx(vqe.trace.records.back().objective).epsilon(1e-12));
  CHECK(ac.feasible);
}

TEST_CASE("vqeac reaches the excited level orthogonally") {
  const PauliSum h = build_triton_hamiltonian(1.0, -7.0);
  double best_rel = 1e300;
  bool any_feasible = false;
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const VariationalResult r = run_vqeac(h, table1_ground(), fast_settings(), seed);
    if (!r.feasible) continue;
    any_feasible = true;
    CHECK(*r.overlap_with_ground <= 1e-3 + 1e-6);
    best_rel = std::min(best_rel,
                        std::abs(r.energy - testdata::kE1) / std::abs(testdata::kE1));
  }
  CHECK(any_feasible);
  CHECK(best_rel <= 0.12);
}

TEST_CASE("excited energies respect the leakage-adjusted bound") {
  const PauliSum h = build_triton_hamiltonian(1.0, -7.0);
  for (std::uint64_t seed = 0; seed < 2; ++seed) {
    const VariationalResult vqd =
        run_vqd(h, table1_ground(), 4.0, fast_settings(), seed);
    const VariationalResult ac =
        run_vqeac(h, table1_ground(), fast_settings(), seed);
    for (const VariationalResult* r : {&vqd, &ac}) {
      CHECK(r->energy >= testdata::kE0 - 1e-9);
      REQUIRE(r->overlap_with_ground.has_value());
      CHECK(*r->overlap_with_ground >= 0.0);
      CHECK(*r->overlap_with_ground <= 1.0 + 1e-10);
      if (*r->overlap_with_ground <= 0.02) {
        const double leakage =
            *r->overlap_with_ground * (testdata::kE1 - testdata::kE0) + 1e-9;
        CHECK(r->energy >= testdata::kE1 - leakage);
      }
    }
  }
}

TEST_CASE("reference rows give near-orthogonal excited states") {
  const PauliSum h = build_triton_hamiltonian(1.0, -7.0);
  const StateVector vqd_state = ansatz_state(AnsatzSpec{}, testdata::vqd_row());
  const StateVector ac_state = ansatz_state(AnsatzSpec{}, testdata::vqeac_row());
  const double mutual = std::norm(inner_product(vqd_state, ac_state));
  CHECK(mutual == doctest::Approx(0.98).epsilon(0.035));

  const double e_vqd = expectation(h, vqd_state);
  const double e_ac = expectation(h, ac_state);
  CHECK(std::abs(e_vqd - testdata::kE1) / std::abs(testdata::kE1) < 0.12);
  CHECK(std::abs(e_ac - testdata::kE1) / std::abs(testdata::kE1) < 0.12);
}

TEST_CASE("lambda sweep reproduces the two regimes") {
  const PauliSum h = build_triton_hamiltonian(1.0, -7.0);
  const std::vector<double> lambdas = {0.0, 0.5 * testdata::kGap,
                                       1.5 * testdata::kGap};
  const auto points =
      lambda_sweep(h, table1_ground(), lambdas, fast_settings(), 17, 3, 2);
  REQUIRE(points.size() == 3);
  CHECK(std::abs(points[0].loss - testdata::kE0) < 0.05 * testdata::kGap);
  CHECK(std::abs(points[1].loss - (testdata::kE0 + lambdas[1])) <
        0.05 * testdata::kGap);
  CHECK(std::abs(points[2].loss - testdata::kE1) < 0.25);
  CHECK(points[2].overlap < 0.05);
}

TEST_CASE("monte carlo at sigma zero is constant") {
  const PauliSum h = build_triton_hamiltonian(1.0, -7.0);
  const EnergyDistribution dist = monte_carlo_energy(
      testdata::vqe_row(), 0.0, 50, h, AnsatzSpec{}, 7);
  CHECK(dist.stddev == doctest::Approx(0.0));
  for (double e : dist.samples) CHECK(e == doctest::Approx(dist.mean));
}

TEST_CASE("monte carlo mean stays near the point estimate") {
  // The reference row sits at a converged optimum, so the mean carries a
  // curvature bias of order sigma^2 tr(H)/2 — about 1.5 distribution widths,
  // independent of the sample count.
  const PauliSum h = build_triton_hamiltonian(1.0, -7.0);
  const double point = expectation(h, ansatz_state(AnsatzSpec{}, testdata::vqe_row()));
  const EnergyDistribution dist = monte_carlo_energy(
      testdata::vqe_row(), 0.001, 4000, h, AnsatzSpec{}, 7, 2);
  CHECK(std::abs(dist.mean - point) <= 5.0 * dist.stddev + 1e-12);
}

TEST_CASE("monte carlo width scales linearly where the gradient dominates") {
  const PauliSum h = build_triton_hamiltonian(1.0, -7.0);
  const Eigen::VectorXd theta =
      testdata::vqe_row() + Eigen::VectorXd::Constant(16, 0.3);

  Eigen::VectorXd grad(16);
  for (int k = 0; k < 16; ++k) {
    Eigen::VectorXd dp = theta, dm = theta;
    dp[k] += 1e-6;
    dm[k] -= 1e-6;
    grad[k] = (expectation(h, ansatz_state(AnsatzSpec{}, dp)) -
               expectation(h, ansatz_state(AnsatzSpec{}, dm))) /
              2e-6;
  }

  const EnergyDistribution d1 =
      monte_carlo_energy(theta, 0.001, 4000, h, AnsatzSpec{}, 13, 2);
  const EnergyDistribution d2 =
      monte_carlo_energy(theta, 0.002, 4000, h, AnsatzSpec{}, 14, 2);
  CHECK(d1.stddev == doctest::Approx(grad.norm() * 0.001).epsilon(0.1));
  CHECK(d2.stddev == doctest::Approx(grad.norm() * 0.002).epsilon(0.1));
  CHECK(d2.stddev / d1.stddev == doctest::Approx(2.0).epsilon(0.2));
}

TEST_CASE("monte carlo width at the converged row is curvature dominated") {
  // First-order propagation vanishes at a critical point: the doubling ratio
  // lands between the linear (2) and quadratic (4) laws.
  const PauliSum h = build_triton_hamiltonian(1.0, -7.0);
  const EnergyDistribution d1 = monte_carlo_energy(
      testdata::vqe_row(), 0.001, 4000, h, AnsatzSpec{}, 13, 2);
  const EnergyDistribution d2 = monte_carlo_energy(
      testdata::vqe_row(), 0.002, 4000, h, AnsatzSpec{}, 14, 2);
  CHECK(d2.stddev / d1.stddev > 2.0);
  CHECK(d2.stddev / d1.stddev < 4.4);
}

TEST_CASE("shot-mode objectives are reproducible and unbiased") {
  const PauliSum h = build_triton_hamiltonian(1.0, -7.0);
  const Objective noisy = make_energy_objective(h, AnsatzSpec{}, 512, 99);
  const Objective noisy_again = make_energy_objective(h, AnsatzSpec{}, 512, 99);
  const Eigen::VectorXd theta = testdata::vqe_row();
  const double a = noisy(theta);
  const double b = noisy_again(theta);
  CHECK(a == b);  // same seed, same evaluation index
  const double second_eval = noisy(theta);
  CHECK(a != second_eval);  // evaluation counter advances

  const double exact = expectation(h, ansatz_state(AnsatzSpec{}, theta));
  double mean = 0.0;
  const Objective stream = make_energy_objective(h, AnsatzSpec{}, 512, 55);
  for (int k = 0; k < 50; ++k) mean += stream(theta);
  mean /= 50.0;
  CHECK(std::abs(mean - exact) < 0.2);
}

TEST_CASE("invalid arguments") {
  const PauliSum h = build_triton_hamiltonian(1.0, -7.0);
  CHECK_THROWS(run_vqd(h, table1_ground(), -1.0, fast_settings(50), 0));
  CHECK_THROWS(monte_carlo_energy(testdata::vqe_row(), -0.1, 10, h, AnsatzSpec{}, 0));
  CHECK_THROWS(monte_carlo_energy(testdata::vqe_row(), 0.1, 0, h, AnsatzSpec{}, 0));
  CHECK_THROWS(lambda_sweep(h, table1_ground(), {}, fast_settings(50), 0));
  CHECK_THROWS(lambda_sweep(h, table1_ground(), {-1.0}, fast_settings(50), 0));
}
