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

#include "qcons/weight_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "qcons/errors.hpp"
#include "qcons/operators.hpp"
#include "qcons/quantum_laplacian.hpp"

namespace qcons {

double lambda2_at(const InteractionGraph& g, const std::vector<double>& alpha) {
  return lambda2(block_spectra(build_laplacian(g.with_weights(alpha)), false));
}

Supergradient lambda2_supergradient(const InteractionGraph& g, const std::vector<double>& alpha) {
  const auto lap = build_laplacian(g.with_weights(alpha));
  const auto spectra = block_spectra(lap, true);
  Supergradient out;
  out.lambda2 = lambda2(spectra);
  out.eigengap = eigengap(spectra, kEigenTieTol);
  out.components.assign(g.edge_count(), 0.0);

  const int n = g.n();
  double total_weight = 0.0;
  for (const auto& s : spectra) {
    if (s.eigenvalues.size() < 2) continue;
    const auto& members = lap.partition.components[s.representative()];
    const auto copies = static_cast<double>(s.members.size());
    for (Eigen::Index col = 1; col < s.eigenvalues.size(); ++col) {
      if (std::abs(s.eigenvalues(col) - out.lambda2) > kEigenTieTol) continue;
      const auto v = s.eigenvectors.col(col);
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edges()[e];
        double q = 0.0;
        for (std::size_t i = 0; i < members.size(); ++i) {
          const auto x = static_cast<std::uint64_t>(members[i]);
          const auto w = swap_node(n, edge.j, edge.k, x);
          if (w == x) continue;
          const auto li = static_cast<Eigen::Index>(i);
          q += v(li) * (v(li) - v(lap.local_index[static_cast<std::size_t>(w)]));
        }
        out.components[e] += copies * q;
      }
      total_weight += copies;
      out.multiplicity += s.members.size();
    }
  }
  if (total_weight == 0.0) throw std::invalid_argument("no eigenvector found at lambda2");
  for (auto& c : out.components) c /= total_weight;
  return out;
}

std::vector<double> project_onto_budget(const std::vector<double>& v, double budget) {
  if (v.empty()) throw std::invalid_argument("cannot project an empty vector");
  if (!(budget > 0.0)) throw std::invalid_argument("budget must be positive");
  std::vector<double> sorted = v;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    cumulative += sorted[i];
    const double candidate = (cumulative - budget) / static_cast<double>(i + 1);
    if (sorted[i] - candidate > 0.0) theta = candidate;
  }
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::max(v[i] - theta, 0.0);
  return out;
}

OptimizerReport optimize_weights(const InteractionGraph& g, double budget, int iterations) {
  if (!(budget > 0.0)) throw std::invalid_argument("budget must be positive");
  if (iterations < 0) throw std::invalid_argument("iteration count must be nonnegative");
  if (g.edge_count() == 0 || !is_connected(g)) {
    throw InfeasibleError("weight optimization needs a connected interaction graph");
  }
  const auto edges = static_cast<double>(g.edge_count());
  OptimizerReport report;
  report.budget = budget;
  report.initial_weights.assign(g.edge_count(), budget / edges);

  std::vector<double> alpha = report.initial_weights;
  auto grad = lambda2_supergradient(g, alpha);
  report.initial_lambda2 = grad.lambda2;
  report.best_lambda2 = grad.lambda2;
  report.best_weights = alpha;
  report.final_eigengap = grad.eigengap;
  report.lambda2_history.push_back(grad.lambda2);

  for (int t = 1; t <= iterations; ++t) {
    const double step = 0.1 * budget / (edges * std::sqrt(static_cast<double>(t)));
    for (std::size_t e = 0; e < alpha.size(); ++e) alpha[e] += step * grad.components[e];
    alpha = project_onto_budget(alpha, budget);
    grad = lambda2_supergradient(g, alpha);
    report.lambda2_history.push_back(grad.lambda2);
    if (grad.lambda2 > report.best_lambda2) {
      report.best_lambda2 = grad.lambda2;
      report.best_weights = alpha;
      report.best_iteration = static_cast<std::size_t>(t);
      report.final_eigengap = grad.eigengap;
    }
  }
  return report;
}

}  // namespace qcons
