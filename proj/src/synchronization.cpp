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

#include "qcons/synchronization.hpp"

#include <Eigen/Eigenvalues>

#include "qcons/consensus_dynamics.hpp"

namespace qcons {

ReducedState partial_trace_to_qubit(const CMatrix& rho, int qubit) {
  const int n = qubits_for_dimension(rho.rows());
  if (qubit < 1 || qubit > n) throw std::out_of_range("qubit index out of range");
  const auto mask = static_cast<Eigen::Index>(qubit_mask(n, qubit));
  CMatrix out = CMatrix::Zero(2, 2);
  for (Eigen::Index r = 0; r < rho.rows(); ++r) {
    if (r & mask) continue;
    // r enumerates settings of the other qubits with bit `qubit` cleared.
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        out(a, b) += rho(a ? (r | mask) : r, b ? (r | mask) : r);
      }
    }
  }
  return {out, qubit};
}

double trace_distance(const CMatrix& rho1, const CMatrix& rho2) {
  if (rho1.rows() != rho2.rows() || rho1.cols() != rho2.cols()) {
    throw std::invalid_argument("trace distance needs equal dimensions");
  }
  Eigen::JacobiSVD<CMatrix> svd(rho1 - rho2);
  return 0.5 * svd.singularValues().sum();
}

std::array<double, 3> bloch_vector(const CMatrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) throw std::invalid_argument("Bloch vector needs a 2x2 state");
  return {2.0 * rho(0, 1).real(), 2.0 * rho(1, 0).imag(), (rho(0, 0) - rho(1, 1)).real()};
}

CMatrix sync_orbit_general(const CMatrix& rho_star, const CMatrix& h, double t, int qubit) {
  const CMatrix u = unitary_propagator(h, t);
  return partial_trace_to_qubit(u * rho_star * u.adjoint(), qubit).matrix;
}

CMatrix sync_orbit_kron_sum(const CMatrix& rho_star, const CMatrix& h0, double t, int qubit) {
  const CMatrix u = unitary_propagator(h0, t);
  return u * partial_trace_to_qubit(rho_star, qubit).matrix * u.adjoint();
}

CMatrix sync_orbit(const CMatrix& rho_star, const HamiltonianSpec& spec, double t) {
  const int n = qubits_for_dimension(rho_star.rows());
  const CMatrix h = build_hamiltonian(spec, n);
  if (!commutes_with_all_permutations(h, n)) {
    throw std::invalid_argument("synchronization orbit undefined: H does not commute with all permutations");
  }
  if (spec.kind == HamiltonianSpec::Kind::kKronSum) return sync_orbit_kron_sum(rho_star, spec.h0, t);
  return sync_orbit_general(rho_star, h, t);
}

}  // namespace qcons
