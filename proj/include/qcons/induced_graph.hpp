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

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qcons/interaction_graph.hpp"
#include "qcons/qubit_basis.hpp"

namespace qcons {

/// Distinct neighbors of `node` in the induced graph, sorted by node index.
/// Adjacency is generated on demand from the swaps of `g`.
std::vector<Index> neighbors(const InteractionGraph& g, Index node);
std::vector<BasisNode> neighbors(const BasisNode& node, const InteractionGraph& g);

inline std::size_t degree(const InteractionGraph& g, Index node) {
  return neighbors(g, node).size();
}

/// Connected components of the induced graph. Ids follow breadth-first
/// discovery from the lowest unvisited node index.
struct ComponentPartition {
  int n = 0;
  std::vector<std::vector<Index>> components;
  std::vector<std::int32_t> lookup;

  std::size_t count() const { return components.size(); }
  int component_of(Index node) const { return lookup[static_cast<std::size_t>(node)]; }
  /// Multiset of component sizes: size -> count.
  std::map<std::size_t, std::size_t> size_histogram() const;
};

ComponentPartition components(const InteractionGraph& g);

/// True iff both partitions put every node in the same block (ids may differ).
bool same_partition(const ComponentPartition& a, const ComponentPartition& b);

/// n! / (a! b! c! d!).
std::uint64_t orbit_size(const TypeCounts& tc);

/// Number of distinct neighbors of any node with these type counts under K_n:
/// one neighbor per pair of positions carrying different types.
std::uint64_t complete_graph_degree(const TypeCounts& tc);

/// Every TypeCounts with a + b + c + d = n.
std::vector<TypeCounts> all_type_counts(int n);

std::uint64_t binomial(int n, int k);

/// max_k C(n, k) and its square.
std::pair<std::uint64_t, std::uint64_t> largest_component_bounds(int n);

/// Upper bound on induced-graph degree, attained under K_n.
std::uint64_t max_degree_bound(int n);

struct CensusReport {
  int n = 0;
  std::uint64_t total_components = 0;
  std::map<std::uint64_t, std::uint64_t> size_histogram;
  std::uint64_t largest = 0;
  std::pair<std::uint64_t, std::uint64_t> bounds;
  std::uint64_t max_degree = 0;
  std::uint64_t degree_bound = 0;
};

/// Orbit census from type counts alone (no traversal).
CensusReport component_census(int n);

struct ComponentRegularity {
  int component = 0;
  std::size_t size = 0;
  bool regular = true;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
};

/// Degree spread of every component of `partition` under `g`.
std::vector<ComponentRegularity> verify_component_regularity(const InteractionGraph& g,
                                                             const ComponentPartition& partition);

struct DiagonalPairViolation {
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  bool adjacent = false;
  int hamming = 0;
  int common = 0;
  int expected = 0;
};

struct DiagonalRegularityReport {
  int n = 0;
  std::uint64_t adjacent_pairs = 0;
  std::uint64_t nonadjacent_pairs = 0;
  /// Observed common-neighbor counts: adjacent pairs, and non-adjacent pairs
  /// keyed by Hamming distance.
  std::map<int, std::uint64_t> adjacent_common;
  std::map<int, std::map<int, std::uint64_t>> nonadjacent_common;
  bool adjacent_ok = true;
  bool nonadjacent_ok = true;
  std::vector<DiagonalPairViolation> violations;  // first few only

  bool ok() const { return adjacent_ok && nonadjacent_ok; }
};

/// Checks the diagonal induced graph of K_n against: adjacent pairs share
/// n - 2 neighbors; non-adjacent same-component pairs share 1 neighbor at
/// Hamming distance 4 and none beyond.
DiagonalRegularityReport verify_diagonal_strong_regularity(int n);

}  // namespace qcons
