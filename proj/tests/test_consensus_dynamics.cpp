// Copyright 2026 The qcons Authors
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

#include "oracles.hpp"
#include "qcons/consensus_dynamics.hpp"
#include "qcons/quantum_laplacian.hpp"
#include "qcons/random_states.hpp"

using namespace qcons;

namespace {

CMatrix ket_projector(const std::string& bits) { return DensityState::basis(KetBits::parse(bits)).matrix(); }

DensityState sec54_state() {
  CVector psi = CVector::Zero(8);
  psi(4) = psi(5) = 1.0 / std::sqrt(2.0);
  return DensityState::from_ket(psi);
}

IntegratorOptions with_method(IntegratorOptions::Method m, double step = 0.0) {
  IntegratorOptions o;
  o.method = m;
  o.step = step;
  return o;
}

}  // namespace

TEST_CASE("DensityState validation") {
  CHECK_NOTHROW(DensityState::maximally_mixed(3));
  CMatrix bad = CMatrix::Identity(4, 4);
  CHECK_THROWS_AS(DensityState{bad}, std::invalid_argument);  // trace 4
  CMatrix nonherm = CMatrix::Identity(2, 2) / 2.0;
  nonherm(0, 1) = 0.3;
  CHECK_THROWS_AS(DensityState{nonherm}, std::invalid_argument);
  CMatrix negative = CMatrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityState{negative}, std::invalid_argument);
  CHECK_NOTHROW(DensityState{negative, false});
  CHECK_THROWS_AS(DensityState(CMatrix::Identity(3, 3) / 3.0), std::invalid_argument);
  CVector unnormalized = CVector::Ones(2);
  CHECK_THROWS_AS(DensityState::from_ket(unnormalized), std::invalid_argument);
}

TEST_CASE("quantum average examples") {
  const CMatrix mixed = DensityState::maximally_mixed(3).matrix();
  CHECK((quantum_average(mixed) - mixed).norm() <= 1e-15);

  const CMatrix avg = quantum_average(ket_projector("01"));
  CHECK((avg - 0.5 * (ket_projector("01") + ket_projector("10"))).norm() <= 1e-15);

  const CMatrix rho = sec54_state().matrix();
  CHECK((quantum_average(rho) - oracle::quantum_average(rho, 3)).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("quantum average equals the n!-term sum for n <= 4") {
  Rng rng(11);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const CMatrix rho = random_density(n, rng);
      REQUIRE((quantum_average(rho) - oracle::quantum_average(rho, n)).cwiseAbs().maxCoeff() <= 1e-13);
    }
  }
}

TEST_CASE("quantum average is idempotent and permutation invariant") {
  Rng rng(12);
  for (int n = 2; n <= 4; ++n) {
    const CMatrix avg = quantum_average(random_density(n, rng));
    CHECK((quantum_average(avg) - avg).cwiseAbs().maxCoeff() <= 1e-12);
    for (int j = 1; j < n; ++j) {
      const CMatrix u = oracle::swap_matrix(n, j, j + 1).cast<Complex>();
      CHECK((u * avg * u.adjoint() - avg).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("residual examples") {
  const CMatrix rho = ket_projector("01");
  CHECK(residual(rho, rho) == 0.0);
  CHECK(residual(rho, quantum_average(rho)) == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-14));

  Rng rng(5);
  const CMatrix a = random_density(3, rng);
  const CMatrix b = random_density(3, rng);
  const CMatrix u = oracle::perm_matrix(3, {2, 3, 1}).cast<Complex>();
  CHECK(residual(u * a * u.adjoint(), u * b * u.adjoint()) == doctest::Approx(residual(a, b)).epsilon(1e-13));
}

TEST_CASE("two-qubit closed form") {
  const auto schedule = SwitchingSchedule::constant(InteractionGraph::complete(2));
  const auto rho0 = DensityState::basis(KetBits::parse("01"));
  for (auto method : {IntegratorOptions::Method::kExact, IntegratorOptions::Method::kRk4}) {
    const auto traj = integrate(rho0, schedule, HamiltonianSpec::zero(), 6.0, 0.05, with_method(method));
    const double tol = method == IntegratorOptions::Method::kExact ? 1e-12 : 1e-7;
    CHECK(traj.times.size() == 121);
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
      const double e = std::exp(-2.0 * traj.times[i]);
      const CMatrix expected = 0.5 * (1 + e) * ket_projector("01") + 0.5 * (1 - e) * ket_projector("10");
      REQUIRE((traj.states[i] - expected).cwiseAbs().maxCoeff() <= tol);
    }
    const auto fit = estimate_rate(traj, quantum_average(rho0.matrix()));
    CHECK(std::abs(fit.rate - 2.0) <= 0.02 * 2.0);
  }
}

TEST_CASE("symmetric states are equilibria") {
  const auto mixed = DensityState::maximally_mixed(3);
  const auto schedule = SwitchingSchedule::periodic({InteractionGraph(3, {{1, 2}}), InteractionGraph(3, {{2, 3}})}, 0.7, 5);
  const auto traj = integrate(mixed, schedule, HamiltonianSpec::zero(), 3.0, 0.25);
  for (const auto& s : traj.states) CHECK((s - mixed.matrix()).norm() <= 1e-13);
}

TEST_CASE("exact and RK4 agree on n <= 3, t <= 5") {
  Rng rng(21);
  for (int n = 2; n <= 3; ++n) {
    const DensityState rho0(random_density(n, rng));
    for (const auto& g : {InteractionGraph::complete(n), InteractionGraph::path(n)}) {
      const auto schedule = SwitchingSchedule::constant(g);
      const auto a = integrate(rho0, schedule, HamiltonianSpec::zero(), 5.0, 0.5,
                               with_method(IntegratorOptions::Method::kExact));
      const auto b = integrate(rho0, schedule, HamiltonianSpec::zero(), 5.0, 0.5,
                               with_method(IntegratorOptions::Method::kRk4));
      CHECK(a.method == "exact");
      CHECK(b.method == "rk4");
      for (std::size_t i = 0; i < a.states.size(); ++i) REQUIRE((a.states[i] - b.states[i]).norm() <= 1e-7);
    }
  }
}

TEST_CASE("RK4 error shrinks at fourth order when the step is halved") {
  Rng rng(22);
  const DensityState rho0(random_density(3, rng));
  const auto schedule = SwitchingSchedule::constant(InteractionGraph::complete(3));
  const auto exact = integrate(rho0, schedule, HamiltonianSpec::zero(), 2.0, 1.0,
                               with_method(IntegratorOptions::Method::kExact));
  const auto coarse = integrate(rho0, schedule, HamiltonianSpec::zero(), 2.0, 1.0,
                                with_method(IntegratorOptions::Method::kRk4, 0.1));
  const auto fine = integrate(rho0, schedule, HamiltonianSpec::zero(), 2.0, 1.0,
                              with_method(IntegratorOptions::Method::kRk4, 0.05));
  const double e1 = (coarse.states.back() - exact.states.back()).norm();
  const double e2 = (fine.states.back() - exact.states.back()).norm();
  CHECK(e2 < e1);
  CHECK(e1 / e2 > 10.0);
  CHECK(e1 / e2 < 22.0);
}

TEST_CASE("commuting Hamiltonian: RK4 matches the rotating-frame oracle") {
  const auto spec = HamiltonianSpec::tensor_power(pauli_z());
  const CMatrix h = build_hamiltonian(spec, 3);
  Rng rng(23);
  const DensityState rho0(random_density(3, rng));
  const auto schedule = SwitchingSchedule::constant(InteractionGraph::complete(3));
  const auto lindblad = integrate(rho0, schedule, HamiltonianSpec::zero(), 4.0, 0.5);
  const auto full = integrate(rho0, schedule, spec, 4.0, 0.5);
  for (std::size_t i = 0; i < full.times.size(); ++i) {
    const CMatrix u = unitary_propagator(h, full.times[i]);
    REQUIRE((full.states[i] - u * lindblad.states[i] * u.adjoint()).norm() <= 1e-7);
  }
}

TEST_CASE("trace, Hermiticity and positivity hold along trajectories") {
  Rng rng(24);
  const DensityState rho0(random_density(3, rng));
  const CMatrix h = random_hermitian(8, rng);
  const auto schedule = SwitchingSchedule::periodic({InteractionGraph(3, {{1, 2}}), InteractionGraph(3, {{1, 3}, {2, 3}}, {0.5, 2.0})}, 0.3, 10);
  IntegratorOptions opts;
  opts.check_positivity = true;
  const auto traj = integrate(rho0, schedule, HamiltonianSpec::from_dense(h), 3.0, 0.1, opts);
  for (const auto& d : traj.diagnostics) {
    CHECK(d.trace_defect <= 1e-8);
    CHECK(d.hermiticity_defect <= 1e-8);
    CHECK(d.min_eigenvalue >= -1e-6);
  }
}

TEST_CASE("fixed connected graph: envelope and invariance of the average") {
  Rng rng(25);
  for (const auto& g : {InteractionGraph::complete(3), InteractionGraph::path(3),
                        InteractionGraph(3, {{1, 2}, {2, 3}}, {0.3, 1.7})}) {
    const DensityState rho0(random_density(3, rng));
    const CMatrix target = quantum_average(rho0.matrix());
    const double l2 = lambda2(build_laplacian(g));
    const double r0 = residual(rho0.matrix(), target);
    const auto traj = integrate(rho0, SwitchingSchedule::constant(g), HamiltonianSpec::zero(), 8.0, 0.1);
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
      REQUIRE(residual(traj.states[i], target) <= r0 * std::exp(-l2 * traj.times[i]) * (1 + 1e-6));
      REQUIRE((quantum_average(traj.states[i]) - target).norm() <= 1e-8);
    }
  }
}

TEST_CASE("fitted rate lands on a Laplacian eigenvalue at or above lambda2") {
  Rng rng(26);
  const auto g = InteractionGraph::complete(3);
  const auto lap = build_laplacian(g);
  Eigen::SelfAdjointEigenSolver<RMatrix> eig(lap.dense(), Eigen::EigenvaluesOnly);
  const double l2 = lambda2(lap);
  for (int trial = 0; trial < 5; ++trial) {
    const DensityState rho0(random_density(3, rng));
    const auto traj = integrate(rho0, SwitchingSchedule::constant(g), HamiltonianSpec::zero(), 8.0, 0.1);
    const auto fit = estimate_rate(traj, quantum_average(rho0.matrix()));
    CHECK(fit.rate >= 0.99 * l2);
    bool near = false;
    for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
      const double v = eig.eigenvalues()(i);
      if (v > 1e-9 && std::abs(fit.rate - v) <= 0.05 * v) near = true;
    }
    CHECK(near);
  }
}

TEST_CASE("constant trajectory has no decaying window") {
  const auto mixed = DensityState::maximally_mixed(2);
  const auto traj = integrate(mixed, SwitchingSchedule::constant(InteractionGraph::complete(2)),
                              HamiltonianSpec::zero(), 2.0, 0.1);
  CHECK_THROWS_AS(estimate_rate(traj, mixed.matrix()), std::invalid_argument);
}

TEST_CASE("switching with a connected union converges exponentially") {
  const auto schedule =
      SwitchingSchedule::periodic({InteractionGraph(3, {{1, 2}}), InteractionGraph(3, {{2, 3}})}, 1.0, 25);
  const auto rho0 = DensityState::basis(KetBits::parse("001"));
  const CMatrix target = quantum_average(rho0.matrix());
  const auto traj = integrate(rho0, schedule, HamiltonianSpec::zero(), 50.0, 2.0);
  std::vector<double> r;
  for (const auto& s : traj.states) r.push_back(residual(s, target));
  CHECK(r.back() <= 1e-6);
  for (std::size_t i = 1; i < r.size(); ++i) CHECK(r[i] <= r[i - 1] * (1 + 1e-9));
  const auto fit = fit_exponential_rate(traj.times, r);
  CHECK(fit.rate > 0.0);
  CHECK(fit.r_squared >= 0.9);
}

TEST_CASE("switching with a disconnected union stalls") {
  Rng rng(27);
  const DensityState rho0(random_density(3, rng));
  const auto schedule = SwitchingSchedule::constant(InteractionGraph(3, {{1, 2}}));
  const auto traj = integrate(rho0, schedule, HamiltonianSpec::zero(), 50.0, 5.0);
  CHECK(residual(traj.states.back(), quantum_average(rho0.matrix())) >= 1e-2);
}

TEST_CASE("integrate errors") {
  const auto rho0 = DensityState::maximally_mixed(2);
  const auto schedule = SwitchingSchedule::constant(InteractionGraph::complete(2));
  CHECK_THROWS_AS(integrate(rho0, schedule, HamiltonianSpec::zero(), 0.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(integrate(rho0, schedule, HamiltonianSpec::zero(), 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(integrate(rho0, SwitchingSchedule::constant(InteractionGraph::complete(3)),
                            HamiltonianSpec::zero(), 1.0, 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate(rho0, schedule, HamiltonianSpec::tensor_power(pauli_x()), 1.0, 0.1,
                            with_method(IntegratorOptions::Method::kExact)),
                  std::invalid_argument);
}
