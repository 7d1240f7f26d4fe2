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

#pragma once

#include <array>

#include "qcons/linalg.hpp"
#include "qcons/operators.hpp"

namespace qcons {

/// Local state of qubit `qubit` (1-based).
struct ReducedState {
  CMatrix matrix;  // 2x2
  int qubit = 0;
};

/// Traces out every qubit except `qubit`.
ReducedState partial_trace_to_qubit(const CMatrix& rho, int qubit);

/// Half the sum of singular values of rho1 - rho2.
double trace_distance(const CMatrix& rho1, const CMatrix& rho2);

/// (x, y, z) with x = 2 Re rho01, y = 2 Im rho10, z = rho00 - rho11.
std::array<double, 3> bloch_vector(const CMatrix& rho);

/// Tr_{others}(e^{-iHt} rho_star e^{iHt}) at qubit `qubit`, by dense conjugation.
CMatrix sync_orbit_general(const CMatrix& rho_star, const CMatrix& h, double t, int qubit = 1);

/// e^{-i h0 t} (Tr_{others} rho_star) e^{i h0 t}, valid for H = h0^{(+)n}.
CMatrix sync_orbit_kron_sum(const CMatrix& rho_star, const CMatrix& h0, double t, int qubit = 1);

/// Common trajectory the reduced states converge to. Throws when H does not
/// commute with every qubit permutation. Uses the 2x2 closed form for
/// Kronecker-sum Hamiltonians.
CMatrix sync_orbit(const CMatrix& rho_star, const HamiltonianSpec& spec, double t);

}  // namespace qcons
