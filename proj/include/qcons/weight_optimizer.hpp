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

#include <vector>

#include "qcons/interaction_graph.hpp"

namespace qcons {

/// lambda2 of L_G(alpha) for the edge set of `g` with weights `alpha`
/// (entries may be zero).
double lambda2_at(const InteractionGraph& g, const std::vector<double>& alpha);

struct Supergradient {
  std::vector<double> components;  // one per edge of g
  double lambda2 = 0.0;
  double eigengap = 0.0;
  std::size_t multiplicity = 0;    // eigenvectors averaged
};

inline constexpr double kEigenTieTol = 1e-8;

/// For each edge, v^T (I - U_jk (x) U_jk) v averaged over an orthonormal basis
/// of the lambda2 eigenspace (eigenvalues within kEigenTieTol of lambda2).
Supergradient lambda2_supergradient(const InteractionGraph& g, const std::vector<double>& alpha);

/// Euclidean projection onto {x >= 0, sum x = budget}.
std::vector<double> project_onto_budget(const std::vector<double>& v, double budget);

struct OptimizerReport {
  double budget = 0.0;
  std::vector<double> initial_weights;
  std::vector<double> best_weights;
  double initial_lambda2 = 0.0;
  double best_lambda2 = 0.0;
  std::size_t best_iteration = 0;
  /// lambda2 of every iterate, index 0 being the uniform start.
  std::vector<double> lambda2_history;
  double final_eigengap = 0.0;
};

/// Projected supergradient ascent on lambda2 from uniform weights
/// budget / |E|, step 0.1 budget / (|E| sqrt(t)). Returns the best iterate.
OptimizerReport optimize_weights(const InteractionGraph& g, double budget, int iterations);

}  // namespace qcons
