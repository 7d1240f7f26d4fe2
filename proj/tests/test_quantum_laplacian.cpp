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

#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "qcons/consensus_dynamics.hpp"
#include "qcons/quantum_laplacian.hpp"
#include "qcons/random_states.hpp"

using namespace qcons;

namespace {

std::vector<std::pair<int, int>> edge_pairs(const InteractionGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges()) out.emplace_back(e.j, e.k);
  return out;
}

std::vector<InteractionGraph> small_graphs(int n) {
  std::vector<InteractionGraph> out{InteractionGraph::complete(n), InteractionGraph::path(n),
                                    InteractionGraph::star(n)};
  if (n >= 3) out.push_back(InteractionGraph(n, {{1, 2}}, {0.7}));
  if (n >= 3) out.push_back(InteractionGraph(n, {{1, 3}, {2, 3}}, {0.4, 1.9}));
  return out;
}

}  // namespace

TEST_CASE("sparse build equals the dense Kronecker-product definition") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& g : n == 1 ? std::vector<InteractionGraph>{InteractionGraph(1)} : small_graphs(n)) {
      const auto lap = build_laplacian(g);
      const RMatrix expected = oracle::dense_laplacian(n, edge_pairs(g), g.weights());
      REQUIRE((lap.dense() - expected).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
    }
  }
}

TEST_CASE("single edge on two qubits: spectrum {0 x10, 2 x6}") {
  const auto lap = build_laplacian(InteractionGraph::complete(2));
  Eigen::SelfAdjointEigenSolver<RMatrix> eig(lap.dense(), Eigen::EigenvaluesOnly);
  int zeros = 0, twos = 0;
  for (Eigen::Index i = 0; i < 16; ++i) {
    const double v = eig.eigenvalues()(i);
    if (std::abs(v) < 1e-12) ++zeros;
    if (std::abs(v - 2.0) < 1e-12) ++twos;
  }
  CHECK(zeros == 10);
  CHECK(twos == 6);
}

TEST_CASE("Laplacian sign pattern, symmetry and zero row sums") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& g : small_graphs(n)) {
      const RMatrix l = build_laplacian(g).dense();
      CHECK((l - l.transpose()).cwiseAbs().maxCoeff() == 0.0);
      CHECK(l.rowwise().sum().cwiseAbs().maxCoeff() <= 1e-12);
      for (Eigen::Index r = 0; r < l.rows(); ++r) {
        CHECK(l(r, r) >= 0.0);
        for (Eigen::Index c = 0; c < l.cols(); ++c)
          if (r != c) REQUIRE(l(r, c) <= 0.0);
      }
    }
  }
}

TEST_CASE("single swap entry between |01><00| and |10><00|") {
  const auto lap = build_laplacian(InteractionGraph::complete(2));
  const auto a = node_index(BasisNode::parse("01|00"));
  const auto b = node_index(BasisNode::parse("10|00"));
  CHECK(lap.matrix.coeff(a, b) == -1.0);
  CHECK(lap.matrix.coeff(a, a) == 1.0);
}

TEST_CASE("kernel_dimension examples") {
  CHECK(kernel_dimension(build_laplacian(InteractionGraph::complete(3))) == 20);
  CHECK(kernel_dimension(build_laplacian(InteractionGraph::complete(2))) == 10);
  CHECK(kernel_dimension(build_laplacian(InteractionGraph(1))) == 4);
}

TEST_CASE("kernel_dimension equals the brute-force nullity for n <= 3") {
  for (int n = 2; n <= 3; ++n) {
    for (const auto& g : small_graphs(n)) {
      const auto lap = build_laplacian(g);
      const RMatrix dense = oracle::dense_laplacian(n, edge_pairs(g), g.weights());
      CHECK(kernel_dimension(lap) == static_cast<std::size_t>(oracle::nullity(dense)));
      Eigen::SelfAdjointEigenSolver<RMatrix> eig(dense, Eigen::EigenvaluesOnly);
      CHECK(eig.eigenvalues().minCoeff() >= -1e-10);
    }
  }
}

TEST_CASE("lambda2 examples") {
  CHECK(lambda2(build_laplacian(InteractionGraph::complete(2))) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(lambda2(build_laplacian(InteractionGraph::complete(2, 0.5))) == doctest::Approx(1.0).epsilon(1e-12));

  // K3 against a full 64x64 eigensolve.
  const auto g = InteractionGraph::complete(3);
  Eigen::SelfAdjointEigenSolver<RMatrix> eig(oracle::dense_laplacian(3, edge_pairs(g), g.weights()),
                                             Eigen::EigenvaluesOnly);
  double brute = 0.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
    if (eig.eigenvalues()(i) > 1e-9) {
      brute = eig.eigenvalues()(i);
      break;
    }
  }
  CHECK(brute == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(lambda2(build_laplacian(g)) == doctest::Approx(brute).epsilon(1e-12));
}

TEST_CASE("lambda2 matches brute force on weighted graphs") {
  Rng rng(3);
  std::uniform_real_distribution<double> w(0.2, 2.0);
  for (int trial = 0; trial < 10; ++trial) {
    const InteractionGraph g(3, {{1, 2}, {1, 3}, {2, 3}}, {w(rng), w(rng), w(rng)});
    Eigen::SelfAdjointEigenSolver<RMatrix> eig(oracle::dense_laplacian(3, edge_pairs(g), g.weights()),
                                               Eigen::EigenvaluesOnly);
    double brute = 0.0;
    for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
      if (eig.eigenvalues()(i) > 1e-9) {
        brute = eig.eigenvalues()(i);
        break;
      }
    }
    CHECK(lambda2(build_laplacian(g)) == doctest::Approx(brute).epsilon(1e-10));
    // Shared isomorphic blocks give the same answer as solving every block.
    CHECK(lambda2(block_spectra(build_laplacian(g), false, false)) ==
          doctest::Approx(lambda2(build_laplacian(g))).epsilon(1e-12));
  }
}

TEST_CASE("lambda2 scales linearly with uniform weight scaling") {
  Rng rng(9);
  std::uniform_real_distribution<double> w(0.1, 3.0);
  for (int trial = 0; trial < 10; ++trial) {
    const std::vector<double> alpha{w(rng), w(rng), w(rng)};
    const double c = w(rng);
    std::vector<double> scaled = alpha;
    for (auto& a : scaled) a *= c;
    const double base = lambda2(build_laplacian(InteractionGraph(3, {{1, 2}, {1, 3}, {2, 3}}, alpha)));
    const double big = lambda2(build_laplacian(InteractionGraph(3, {{1, 2}, {1, 3}, {2, 3}}, scaled)));
    CHECK(std::abs(big - c * base) <= 1e-10);
  }
}

TEST_CASE("L is exactly block diagonal in the component partition") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& g : small_graphs(n)) {
      const auto lap = build_laplacian(g);
      for (int k = 0; k < lap.matrix.outerSize(); ++k) {
        for (SparseMatrix::InnerIterator it(lap.matrix, k); it; ++it) {
          if (it.value() != 0.0) REQUIRE(lap.partition.component_of(it.row()) == lap.partition.component_of(it.col()));
        }
      }
    }
  }
}

TEST_CASE("kernel vectors are exactly the fixed points of the quantum average") {
  Rng rng(17);
  for (int n = 2; n <= 3; ++n) {
    for (const auto& g : {InteractionGraph::complete(n), InteractionGraph::path(n)}) {
      const RMatrix dense = oracle::dense_laplacian(n, edge_pairs(g), g.weights());
      const auto dim = static_cast<Eigen::Index>(dim_kets(n));
      Eigen::SelfAdjointEigenSolver<RMatrix> eig(dense);
      for (Eigen::Index i = 0; i < eig.eigenvalues().size() && eig.eigenvalues()(i) < 1e-9; ++i) {
        const CVector z = eig.eigenvectors().col(i).cast<Complex>();
        const CMatrix zm = Eigen::Map<const CMatrix>(z.data(), dim, dim);
        REQUIRE((oracle::quantum_average(zm, n) - zm).norm() <= 1e-10);
      }
      for (int trial = 0; trial < 20; ++trial) {
        const CMatrix avg = oracle::quantum_average(random_density(n, rng), n);
        const CVector v = Eigen::Map<const CVector>(avg.data(), avg.size());
        REQUIRE((dense.cast<Complex>() * v).norm() <= 1e-10);
      }
    }
  }
}

TEST_CASE("errors: cap and edgeless graphs") {
  CHECK_THROWS_AS(build_laplacian(InteractionGraph::complete(9)), CapError);
  CHECK_THROWS_AS(build_laplacian(InteractionGraph::complete(4), 3), CapError);
  CHECK_THROWS_AS(lambda2(build_laplacian(InteractionGraph(3))), std::invalid_argument);
}

TEST_CASE("COO export lists every stored entry with 0-based indices") {
  const auto lap = build_laplacian(InteractionGraph::complete(2));
  std::ostringstream out;
  write_coo(out, lap);
  std::istringstream in(out.str());
  long row, col;
  double value;
  long lines = 0;
  RMatrix rebuilt = RMatrix::Zero(16, 16);
  while (in >> row >> col >> value) {
    rebuilt(row, col) = value;
    ++lines;
  }
  CHECK(lines == lap.matrix.nonZeros());
  CHECK((rebuilt - lap.dense()).cwiseAbs().maxCoeff() == 0.0);
}
