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

#include "qcons/quantum_laplacian.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>

#include <Eigen/Eigenvalues>

#include "qcons/operators.hpp"

namespace qcons {

QuantumLaplacian build_laplacian(const InteractionGraph& g, int cap) {
  check_qubit_count(g.n(), std::min(cap, kMaxStructuralQubits));
  QuantumLaplacian lap;
  lap.graph = g;
  lap.partition = components(g);

  const int n = g.n();
  const Index dim = dim_nodes(n);
  lap.local_index.assign(static_cast<std::size_t>(dim), 0);
  for (const auto& members : lap.partition.components) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      lap.local_index[static_cast<std::size_t>(members[i])] = static_cast<std::int32_t>(i);
    }
  }

  // Duplicate triplets are summed by setFromTriplets, which is exactly the
  // accumulation over edges that map v to the same w.
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(dim) * (g.edge_count() + 1));
  for (Index v = 0; v < dim; ++v) {
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const auto& edge = g.edges()[e];
      const auto w = static_cast<Index>(swap_node(n, edge.j, edge.k, static_cast<std::uint64_t>(v)));
      if (w == v) continue;
      const double alpha = g.weights()[e];
      triplets.emplace_back(v, v, alpha);
      triplets.emplace_back(v, w, -alpha);
    }
  }
  lap.matrix.resize(dim, dim);
  lap.matrix.setFromTriplets(triplets.begin(), triplets.end());
  lap.matrix.makeCompressed();
  return lap;
}

RMatrix QuantumLaplacian::block(std::size_t component) const {
  const auto& members = partition.components.at(component);
  const auto size = static_cast<Eigen::Index>(members.size());
  RMatrix b = RMatrix::Zero(size, size);
  for (Eigen::Index i = 0; i < size; ++i) {
    for (SparseMatrix::InnerIterator it(matrix, members[static_cast<std::size_t>(i)]); it; ++it) {
      // Symmetric, so iterating column v gives row v.
      b(i, local_index[static_cast<std::size_t>(it.row())]) = it.value();
    }
  }
  return b;
}

RMatrix QuantumLaplacian::dense() const { return RMatrix(matrix); }

std::size_t kernel_dimension(const QuantumLaplacian& lap) { return lap.partition.count(); }

std::vector<BlockSpectrum> block_spectra(const QuantumLaplacian& lap, bool with_vectors,
                                         bool share_isomorphic) {
  const bool orbit_classes = share_isomorphic && is_connected(lap.graph);
  std::map<std::array<int, 4>, std::size_t> class_of;
  std::vector<BlockSpectrum> out;
  for (std::size_t id = 0; id < lap.partition.count(); ++id) {
    if (orbit_classes) {
      const auto tc = type_counts(lap.n(), lap.partition.components[id].front());
      std::array<int, 4> key{tc.a, tc.b, tc.c, tc.d};
      std::sort(key.begin(), key.end());
      auto [it, fresh] = class_of.emplace(key, out.size());
      if (!fresh) {
        out[it->second].members.push_back(id);
        continue;
      }
    }
    BlockSpectrum spec;
    spec.members.push_back(id);
    const RMatrix b = lap.block(id);
    if (b.rows() == 1) {
      spec.eigenvalues = RVector::Constant(1, b(0, 0));
      if (with_vectors) spec.eigenvectors = RMatrix::Ones(1, 1);
    } else {
      Eigen::SelfAdjointEigenSolver<RMatrix> eig(
          b, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
      spec.eigenvalues = eig.eigenvalues();
      if (with_vectors) spec.eigenvectors = eig.eigenvectors();
    }
    out.push_back(std::move(spec));
  }
  return out;
}

double zero_threshold(const QuantumLaplacian& lap) {
  const double max_diag = lap.dim() > 0 ? lap.matrix.diagonal().maxCoeff() : 0.0;
  return 1e-9 * max_diag;
}

double lambda2(const std::vector<BlockSpectrum>& spectra) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : spectra) {
    if (s.eigenvalues.size() > 1) best = std::min(best, s.eigenvalues(1));
  }
  if (!std::isfinite(best)) {
    throw std::invalid_argument("lambda2 undefined: induced graph has no non-singleton component");
  }
  return std::max(best, 0.0);
}

double lambda2(const QuantumLaplacian& lap) {
  if (lap.graph.edge_count() == 0) throw std::invalid_argument("lambda2 undefined: graph has no edges");
  return lambda2(block_spectra(lap, false));
}

double eigengap(const std::vector<BlockSpectrum>& spectra, double tie_tol) {
  const double l2 = lambda2(spectra);
  double next = std::numeric_limits<double>::infinity();
  for (const auto& s : spectra) {
    for (Eigen::Index i = 1; i < s.eigenvalues.size(); ++i) {
      const double v = s.eigenvalues(i);
      if (v > l2 + tie_tol) next = std::min(next, v);
    }
  }
  return next - l2;
}

void write_coo(std::ostream& out, const QuantumLaplacian& lap) {
  // Row-major order for stable diffs.
  const Eigen::SparseMatrix<double, Eigen::RowMajor> rows = lap.matrix;
  const auto old_precision = out.precision(17);
  for (Eigen::Index r = 0; r < rows.outerSize(); ++r) {
    for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(rows, r); it; ++it) {
      out << it.row() << ' ' << it.col() << ' ' << it.value() << '\n';
    }
  }
  out.precision(old_precision);
}

}  // namespace qcons
