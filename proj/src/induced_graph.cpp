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

#include "qcons/induced_graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>

#include "qcons/operators.hpp"

namespace qcons {

std::vector<Index> neighbors(const InteractionGraph& g, Index node) {
  const int n = g.n();
  if (node < 0 || node >= dim_nodes(n)) throw std::out_of_range("node index out of range");
  std::vector<Index> out;
  out.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    const auto w = static_cast<Index>(swap_node(n, e.j, e.k, static_cast<std::uint64_t>(node)));
    if (w != node) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<BasisNode> neighbors(const BasisNode& node, const InteractionGraph& g) {
  if (node.size() != g.n()) throw std::invalid_argument("node size does not match graph");
  std::vector<BasisNode> out;
  for (Index w : neighbors(g, node_index(node))) out.push_back(node_from_index(g.n(), w));
  return out;
}

std::map<std::size_t, std::size_t> ComponentPartition::size_histogram() const {
  std::map<std::size_t, std::size_t> hist;
  for (const auto& c : components) ++hist[c.size()];
  return hist;
}

ComponentPartition components(const InteractionGraph& g) {
  const int n = g.n();
  check_qubit_count(n, kMaxStructuralQubits);
  const Index total = dim_nodes(n);
  ComponentPartition part;
  part.n = n;
  part.lookup.assign(static_cast<std::size_t>(total), -1);
  std::queue<Index> frontier;
  for (Index start = 0; start < total; ++start) {
    if (part.lookup[static_cast<std::size_t>(start)] >= 0) continue;
    const auto id = static_cast<std::int32_t>(part.components.size());
    std::vector<Index> members{start};
    part.lookup[static_cast<std::size_t>(start)] = id;
    frontier.push(start);
    while (!frontier.empty()) {
      const Index v = frontier.front();
      frontier.pop();
      for (const auto& e : g.edges()) {
        const auto w = static_cast<Index>(swap_node(n, e.j, e.k, static_cast<std::uint64_t>(v)));
        auto& slot = part.lookup[static_cast<std::size_t>(w)];
        if (slot < 0) {
          slot = id;
          members.push_back(w);
          frontier.push(w);
        }
      }
    }
    part.components.push_back(std::move(members));
  }
  return part;
}

bool same_partition(const ComponentPartition& a, const ComponentPartition& b) {
  if (a.n != b.n || a.count() != b.count()) return false;
  // Blocks match iff the id map a -> b is a well-defined bijection.
  std::vector<std::int32_t> image(a.count(), -1);
  for (std::size_t v = 0; v < a.lookup.size(); ++v) {
    auto& slot = image[static_cast<std::size_t>(a.lookup[v])];
    if (slot < 0) {
      slot = b.lookup[v];
    } else if (slot != b.lookup[v]) {
      return false;
    }
  }
  std::vector<bool> used(b.count(), false);
  for (auto id : image) {
    if (used[static_cast<std::size_t>(id)]) return false;
    used[static_cast<std::size_t>(id)] = true;
  }
  return true;
}

namespace {

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

std::uint64_t orbit_size(const TypeCounts& tc) {
  return factorial(tc.total()) / (factorial(tc.a) * factorial(tc.b) * factorial(tc.c) * factorial(tc.d));
}

std::uint64_t complete_graph_degree(const TypeCounts& tc) {
  const std::uint64_t a = tc.a, b = tc.b, c = tc.c, d = tc.d;
  return a * (b + c + d) + b * (c + d) + c * d;
}

std::vector<TypeCounts> all_type_counts(int n) {
  std::vector<TypeCounts> out;
  for (int a = n; a >= 0; --a) {
    for (int b = n - a; b >= 0; --b) {
      for (int c = n - a - b; c >= 0; --c) out.push_back({a, b, c, n - a - b - c});
    }
  }
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::pair<std::uint64_t, std::uint64_t> largest_component_bounds(int n) {
  if (n < 2) throw std::invalid_argument("bounds need n >= 2");
  std::uint64_t best = 0;
  for (int k = 0; k <= n; ++k) best = std::max(best, binomial(n, k));
  return {best, best * best};
}

std::uint64_t max_degree_bound(int n) {
  if (n < 2) throw std::invalid_argument("degree bound needs n >= 2");
  const auto sq = 3 * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  switch (n % 4) {
    case 0:
      return sq / 8;
    case 2:
      return (sq - 4) / 8;
    default:
      return (sq - 3) / 8;
  }
}

CensusReport component_census(int n) {
  if (n < 2 || n > kMaxStructuralQubits) {
    throw std::invalid_argument("census needs 2 <= n <= " + std::to_string(kMaxStructuralQubits));
  }
  CensusReport report;
  report.n = n;
  for (const auto& tc : all_type_counts(n)) {
    const auto size = orbit_size(tc);
    ++report.size_histogram[size];
    ++report.total_components;
    report.largest = std::max(report.largest, size);
    report.max_degree = std::max(report.max_degree, complete_graph_degree(tc));
  }
  report.bounds = largest_component_bounds(n);
  report.degree_bound = max_degree_bound(n);
  return report;
}

std::vector<ComponentRegularity> verify_component_regularity(const InteractionGraph& g,
                                                             const ComponentPartition& partition) {
  std::vector<ComponentRegularity> out;
  out.reserve(partition.count());
  for (std::size_t id = 0; id < partition.count(); ++id) {
    const auto& members = partition.components[id];
    ComponentRegularity r;
    r.component = static_cast<int>(id);
    r.size = members.size();
    r.min_degree = r.max_degree = degree(g, members.front());
    for (Index v : members) {
      const auto d = degree(g, v);
      r.min_degree = std::min(r.min_degree, d);
      r.max_degree = std::max(r.max_degree, d);
    }
    r.regular = r.min_degree == r.max_degree;
    out.push_back(r);
  }
  return out;
}

DiagonalRegularityReport verify_diagonal_strong_regularity(int n) {
  if (n < 2 || n > kDefaultDenseCap) {
    throw std::invalid_argument("diagonal check needs 2 <= n <= " + std::to_string(kDefaultDenseCap));
  }
  const auto g = InteractionGraph::complete(n);
  const auto kets = static_cast<std::uint32_t>(dim_kets(n));
  auto diag_node = [n](std::uint32_t p) {
    return static_cast<Index>((std::uint64_t{p} << n) | p);
  };
  // Diagonal nodes only neighbor diagonal nodes, so the induced subgraph is
  // read straight off the full neighbor sets.
  std::vector<std::vector<Index>> nbrs(kets);
  for (std::uint32_t p = 0; p < kets; ++p) nbrs[p] = neighbors(g, diag_node(p));

  DiagonalRegularityReport report;
  report.n = n;
  auto record = [&report](DiagonalPairViolation v) {
    if (report.violations.size() < 16) report.violations.push_back(v);
  };
  for (std::uint32_t p = 0; p < kets; ++p) {
    for (std::uint32_t q = p + 1; q < kets; ++q) {
      // Same component iff equal bit sums.
      if (std::popcount(p) != std::popcount(q)) continue;
      std::vector<Index> shared;
      std::set_intersection(nbrs[p].begin(), nbrs[p].end(), nbrs[q].begin(), nbrs[q].end(),
                            std::back_inserter(shared));
      const int common = static_cast<int>(shared.size());
      const int hamming = std::popcount(p ^ q);
      const bool adjacent = std::binary_search(nbrs[p].begin(), nbrs[p].end(), diag_node(q));
      if (adjacent) {
        ++report.adjacent_pairs;
        ++report.adjacent_common[common];
        if (common != n - 2) {
          report.adjacent_ok = false;
          record({p, q, true, hamming, common, n - 2});
        }
      } else {
        ++report.nonadjacent_pairs;
        ++report.nonadjacent_common[hamming][common];
        const int expected = hamming == 4 ? 1 : 0;
        if (common != expected) {
          report.nonadjacent_ok = false;
          record({p, q, false, hamming, common, expected});
        }
      }
    }
  }
  return report;
}

}  // namespace qcons
