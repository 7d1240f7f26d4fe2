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

#include "qcons/verification.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "qcons/consensus_dynamics.hpp"
#include "qcons/induced_graph.hpp"
#include "qcons/operators.hpp"
#include "qcons/quantum_laplacian.hpp"
#include "qcons/random_states.hpp"

namespace qcons {

namespace {

CheckResult pass(std::string name, int n, std::string detail = {}) {
  return {std::move(name), n, true, std::move(detail), nullptr};
}

CheckResult fail(std::string name, int n, std::string detail, Json counterexample) {
  return {std::move(name), n, false, std::move(detail), std::move(counterexample)};
}

std::string node_str(int n, Index v) { return node_from_index(n, v).str(); }

CheckResult check_partition_independence(int n) {
  const auto reference = components(InteractionGraph::complete(n));
  for (const auto& [label, g] : {std::pair{"path", InteractionGraph::path(n)},
                                 std::pair{"star", InteractionGraph::star(n)}}) {
    if (!same_partition(reference, components(g))) {
      return fail("partition_independence", n, std::string(label) + " partition differs from K_n",
                  Json{{"graph", label}});
    }
  }
  return pass("partition_independence", n, "path, star and complete agree");
}

CheckResult check_orbit_characterization(int n, const ComponentPartition& part) {
  std::set<std::tuple<int, int, int, int>> seen;
  for (const auto& members : part.components) {
    const auto tc = type_counts(n, members.front());
    for (Index v : members) {
      if (type_counts(n, v) != tc) {
        return fail("type_counts_characterize_components", n, "component mixes type counts",
                    Json{{"node", node_str(n, v)}, {"first", node_str(n, members.front())}});
      }
    }
    if (!seen.insert({tc.a, tc.b, tc.c, tc.d}).second) {
      return fail("type_counts_characterize_components", n, "two components share type counts",
                  Json{{"node", node_str(n, members.front())}});
    }
    if (members.size() != orbit_size(tc)) {
      return fail("type_counts_characterize_components", n, "component size differs from n!/(a!b!c!d!)",
                  Json{{"node", node_str(n, members.front())}, {"size", members.size()},
                       {"formula", orbit_size(tc)}});
    }
  }
  if (seen.size() != all_type_counts(n).size()) {
    return fail("type_counts_characterize_components", n, "some type counts have no component", nullptr);
  }
  return pass("type_counts_characterize_components", n,
              std::to_string(part.count()) + " components, one per type count, sizes match orbit formula");
}

CheckResult check_isolated_nodes(int n, const ComponentPartition& part) {
  const auto ones = static_cast<std::uint64_t>(dim_kets(n) - 1);
  const std::set<Index> expected{0, static_cast<Index>(ones), static_cast<Index>(ones << n),
                                 static_cast<Index>((ones << n) | ones)};
  std::set<Index> singletons;
  for (const auto& members : part.components) {
    if (members.size() == 1) singletons.insert(members.front());
  }
  if (singletons != expected) {
    Json found = Json::array();
    for (Index v : singletons) found.push_back(node_str(n, v));
    return fail("four_isolated_nodes", n, "singleton components differ from the all-0/all-1 corners",
                Json{{"singletons", found}});
  }
  return pass("four_isolated_nodes", n, "exactly four singleton components");
}

CheckResult check_census(int n, const ComponentPartition& part) {
  const auto census = component_census(n);
  std::map<std::uint64_t, std::uint64_t> traversal;
  for (const auto& [size, count] : part.size_histogram()) traversal[size] = count;
  const auto closed_form = binomial(n + 3, 3);
  if (census.total_components != part.count() || census.size_histogram != traversal ||
      census.total_components != closed_form) {
    return fail("census_matches_traversal", n, "census, traversal and C(n+3,3) disagree",
                Json{{"census", census.total_components}, {"traversal", part.count()},
                     {"closed_form", closed_form}});
  }
  if (census.largest < census.bounds.first || census.largest > census.bounds.second) {
    return fail("census_matches_traversal", n, "largest component outside its bounds",
                Json{{"largest", census.largest}, {"bounds", {census.bounds.first, census.bounds.second}}});
  }
  return pass("census_matches_traversal", n,
              std::to_string(part.count()) + " components, largest " + std::to_string(census.largest));
}

CheckResult check_degree_bound(int n) {
  const auto g = InteractionGraph::complete(n);
  const auto bound = max_degree_bound(n);
  std::size_t best = 0;
  Index argmax = 0;
  for (Index v = 0; v < dim_nodes(n); ++v) {
    const auto d = degree(g, v);
    if (d > best) {
      best = d;
      argmax = v;
    }
  }
  if (best != bound) {
    return fail("degree_bound_attained", n, "max degree " + std::to_string(best) + " vs bound " +
                                                std::to_string(bound),
                Json{{"node", node_str(n, argmax)}, {"degree", best}, {"bound", bound}});
  }
  return pass("degree_bound_attained", n, "max degree " + std::to_string(best) + " at " + node_str(n, argmax));
}

CheckResult check_regularity(int n, const ComponentPartition& part) {
  const auto results = verify_component_regularity(InteractionGraph::complete(n), part);
  for (const auto& r : results) {
    if (!r.regular) {
      return fail("component_regularity", n, "irregular component",
                  Json{{"node", node_str(n, part.components[static_cast<std::size_t>(r.component)].front())},
                       {"min_degree", r.min_degree}, {"max_degree", r.max_degree}});
    }
  }
  return pass("component_regularity", n, "all " + std::to_string(results.size()) + " components regular");
}

CheckResult check_diagonal(int n) {
  const auto report = verify_diagonal_strong_regularity(n);
  if (report.ok()) {
    return pass("diagonal_strong_regularity", n,
                std::to_string(report.adjacent_pairs) + " adjacent and " +
                    std::to_string(report.nonadjacent_pairs) + " non-adjacent pairs match");
  }
  Json bad = Json::array();
  for (const auto& v : report.violations) {
    bad.push_back({{"p", KetBits(n, v.p).str()}, {"q", KetBits(n, v.q).str()}, {"adjacent", v.adjacent},
                   {"hamming", v.hamming}, {"common", v.common}, {"expected", v.expected}});
  }
  return fail("diagonal_strong_regularity", n,
              std::string(report.adjacent_ok ? "" : "adjacent pairs off; ") +
                  (report.nonadjacent_ok ? "" : "non-adjacent common-neighbor counts differ from 0/1"),
              Json{{"violations", bad}});
}

CheckResult check_kernel_rank(int n) {
  const auto lap = build_laplacian(InteractionGraph::complete(n));
  Eigen::FullPivLU<RMatrix> lu(lap.dense());
  lu.setThreshold(1e-10);
  const auto nullity = static_cast<std::size_t>(lap.dim() - lu.rank());
  if (nullity != kernel_dimension(lap)) {
    return fail("kernel_dimension_rank", n, "4^n - rank(L) differs from component count",
                Json{{"nullity", nullity}, {"components", kernel_dimension(lap)}});
  }
  Eigen::SelfAdjointEigenSolver<RMatrix> eig(lap.dense(), Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-10) {
    return fail("kernel_dimension_rank", n, "negative Laplacian eigenvalue",
                Json{{"min_eigenvalue", eig.eigenvalues().minCoeff()}});
  }
  return pass("kernel_dimension_rank", n, "nullity " + std::to_string(nullity));
}

CheckResult check_kernel_characterization(int n, Rng& rng) {
  const auto lap = build_laplacian(InteractionGraph::complete(n));
  const auto orbits = lap.partition;
  Eigen::SelfAdjointEigenSolver<RMatrix> eig(lap.dense());
  const auto dim = static_cast<Eigen::Index>(dim_kets(n));
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
    if (eig.eigenvalues()(i) > 1e-9) break;
    const CVector z = eig.eigenvectors().col(i).cast<Complex>();
    const CMatrix zm = Eigen::Map<const CMatrix>(z.data(), dim, dim);
    const double err = (quantum_average(zm, orbits) - zm).norm();
    if (err > 1e-10) {
      return fail("kernel_fixed_by_average", n, "kernel vector not fixed by the quantum average",
                  Json{{"error", err}});
    }
  }
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix avg = quantum_average(random_density(n, rng), orbits);
    const CVector v = Eigen::Map<const CVector>(avg.data(), avg.size());
    const double err = (lap.matrix.cast<Complex>() * v).norm();
    if (err > 1e-10) {
      return fail("kernel_fixed_by_average", n, "L vec(P*(rho)) is not zero", Json{{"error", err}});
    }
  }
  return pass("kernel_fixed_by_average", n, "kernel = fixed points of the quantum average");
}

CheckResult check_conjugation(int n, Rng& rng) {
  for (int trial = 0; trial < 5; ++trial) {
    const CMatrix rho = random_density(n, rng);
    for (const auto& pi : all_permutations(n)) {
      const CMatrix u = permutation_matrix(pi);
      const CMatrix dense = u * rho * u.adjoint();
      CMatrix relabeled(rho.rows(), rho.cols());
      for (Index v = 0; v < dim_nodes(n); ++v) {
        const auto w = node_index(permute_node(pi, node_from_index(n, v)));
        relabeled.data()[w] = rho.data()[v];
      }
      const double err = max_abs(dense - relabeled);
      if (err > 1e-12) {
        return fail("conjugation_is_relabeling", n, "U_pi rho U_pi^dagger differs from node relabeling",
                    Json{{"permutation", pi.images()}, {"error", err}});
      }
    }
  }
  return pass("conjugation_is_relabeling", n, "all n! permutations on random states");
}

CheckResult check_commuting_families(int n, Rng& rng) {
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix h0 = random_hermitian(2, rng);
    for (const auto& spec : {HamiltonianSpec::tensor_power(h0), HamiltonianSpec::kron_sum(h0)}) {
      if (!commutes_with_all_permutations(build_hamiltonian(spec, n), n)) {
        return fail("commuting_hamiltonian_families", n, "tensor power or Kronecker sum fails to commute",
                    Json{{"h0", complex_matrix_to_json(h0)}});
      }
    }
  }
  return pass("commuting_hamiltonian_families", n, "20 random h0, both families");
}

}  // namespace

std::vector<CheckResult> verify_all(int n, std::uint64_t seed) {
  if (n < 2 || n > kVerifyTraversalCap) {
    throw CapError("verify supports 2 <= n <= " + std::to_string(kVerifyTraversalCap));
  }
  Rng rng(seed + static_cast<std::uint64_t>(n));
  std::vector<CheckResult> out;
  const auto part = components(InteractionGraph::complete(n));
  out.push_back(check_partition_independence(n));
  out.push_back(check_orbit_characterization(n, part));
  out.push_back(check_isolated_nodes(n, part));
  out.push_back(check_census(n, part));
  out.push_back(check_degree_bound(n));
  if (n <= 6) out.push_back(check_regularity(n, part));
  out.push_back(check_diagonal(n));
  if (n <= 3) {
    out.push_back(check_kernel_rank(n));
    out.push_back(check_kernel_characterization(n, rng));
    out.push_back(check_conjugation(n, rng));
  }
  if (n <= 4) out.push_back(check_commuting_families(n, rng));
  return out;
}

Json check_to_json(const CheckResult& r) {
  Json j{{"check", r.name}, {"n", r.n}, {"passed", r.passed}, {"detail", r.detail}};
  if (!r.passed) j["counterexample"] = r.counterexample;
  return j;
}

}  // namespace qcons
