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

#include <random>

#include "qcons/linalg.hpp"

namespace qcons {

using Rng = std::mt19937_64;

/// Entries with independent standard normal real and imaginary parts.
CMatrix random_gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// A A^dagger / tr(A A^dagger) with Gaussian A: full rank, generic.
CMatrix random_density(int n, Rng& rng);

/// (A + A^dagger) / 2 with Gaussian A.
CMatrix random_hermitian(Eigen::Index dim, Rng& rng);

}  // namespace qcons
