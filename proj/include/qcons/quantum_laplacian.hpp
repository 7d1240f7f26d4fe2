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

#include <iosfwd>
#include <vector>

#include <Eigen/Sparse>

#include "qcons/induced_graph.hpp"
#include "qcons/interaction_graph.hpp"
#include "qcons/linalg.hpp"

namespace qcons {

using SparseMatrix = Eigen::SparseMatrix<double>;

/// L_G(alpha) = sum over edges of alpha_jk (I (x) I - U_jk (x) U_jk), acting on
/// column-major vec(rho). Block diagonal in the induced-graph components.
struct QuantumLaplacian {
  InteractionGraph graph;
  SparseMatrix matrix;
  ComponentPartition partition;
  /// Position of each node inside its component's member list.
  std::vector<std::int32_t> local_index;

  int n() const { return graph.n(); }
  Index dim() const { return dim_nodes(graph.n()); }

  /// Dense sub-block of one component, rows ordered like its member list.
  RMatrix block(std::size_t component) const;
  RMatrix dense() const;
};

QuantumLaplacian build_laplacian(const InteractionGraph& g, int cap = kDefaultDenseCap);

/// Number of induced-graph components (computed combinatorially).
std::size_t kernel_dimension(const QuantumLaplacian& lap);

/// Eigen-decomposition of one class of component blocks. When G is
/// connected, blocks whose sorted type counts agree are isomorphic, so one
/// representative is solved and `members` lists every component it covers.
struct BlockSpectrum {
  std::vector<std::size_t> members;
  RVector eigenvalues;   // ascending
  RMatrix eigenvectors;  // columns, in the representative's local ordering

  std::size_t representative() const { return members.front(); }
};

/// With `share_isomorphic` false every component gets its own solve, in its
/// own local ordering.
std::vector<BlockSpectrum> block_spectra(const QuantumLaplacian& lap, bool with_vectors,
                                         bool share_isomorphic = true);

/// Eigenvalues at or below this count as zero.
double zero_threshold(const QuantumLaplacian& lap);

/// Smallest eigenvalue above each block's trivial zero mode, minimized over
/// non-singleton blocks. For a block that stays connected this is its
/// smallest nonzero eigenvalue.
double lambda2(const QuantumLaplacian& lap);
double lambda2(const std::vector<BlockSpectrum>& spectra);

/// Distance from lambda2 to the next distinct eigenvalue level among the
/// non-trivial block eigenvalues (levels closer than `tie_tol` merge).
double eigengap(const std::vector<BlockSpectrum>& spectra, double tie_tol);

/// One "row col value" line per stored entry, 0-based, 17 significant digits.
void write_coo(std::ostream& out, const QuantumLaplacian& lap);

}  // namespace qcons
