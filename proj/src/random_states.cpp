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

#include "qcons/random_states.hpp"

namespace qcons {

CMatrix random_gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal;
  CMatrix m(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = Complex(normal(rng), normal(rng));
  }
  return m;
}

CMatrix random_density(int n, Rng& rng) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  const CMatrix a = random_gaussian_matrix(dim, dim, rng);
  CMatrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  // Exact Hermiticity after rounding.
  return 0.5 * (rho + rho.adjoint());
}

CMatrix random_hermitian(Eigen::Index dim, Rng& rng) {
  const CMatrix a = random_gaussian_matrix(dim, dim, rng);
  return 0.5 * (a + a.adjoint());
}

}  // namespace qcons
