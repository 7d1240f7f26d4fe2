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

#include "qcons/operators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qcons {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> hit(static_cast<std::size_t>(n + 1), false);
  for (int v : images_) {
    if (v < 1 || v > n || hit[v]) throw std::invalid_argument("permutation is not a bijection");
    hit[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int j, int k) {
  if (j == k || j < 1 || k < 1 || j > n || k > n) {
    throw std::invalid_argument("transposition needs two distinct qubits in range");
  }
  auto images = identity(n).images_;
  std::swap(images[j - 1], images[k - 1]);
  return Permutation(std::move(images));
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> images(images_.size());
  for (int i = 1; i <= size(); ++i) images[i - 1] = (*this)(next(i));
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  auto images = Permutation::identity(n).images();
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

KetBits swap_action(int j, int k, const KetBits& ket) {
  const int n = ket.size();
  if (j == k) throw std::invalid_argument("swap needs two distinct qubits");
  if (j < 1 || k < 1 || j > n || k > n) throw std::out_of_range("swap qubit out of range");
  return KetBits(n, swap_bits(n, j, k, ket.bits()));
}

KetBits permute_ket(const Permutation& pi, const KetBits& ket) {
  const int n = ket.size();
  if (pi.size() != n) throw std::invalid_argument("permutation size does not match ket");
  std::uint32_t bits = 0;
  for (int i = 1; i <= n; ++i) {
    if (ket.bits() & qubit_mask(n, pi(i))) bits |= qubit_mask(n, i);
  }
  return KetBits(n, bits);
}

BasisNode permute_node(const Permutation& pi, const BasisNode& node) {
  return BasisNode{permute_ket(pi, node.ket), permute_ket(pi, node.bra)};
}

namespace {

std::vector<Eigen::Index> ket_images(const Permutation& pi) {
  const int n = pi.size();
  std::vector<Eigen::Index> images(static_cast<std::size_t>(dim_kets(n)));
  for (Index q = 0; q < dim_kets(n); ++q) {
    images[static_cast<std::size_t>(q)] =
        static_cast<Eigen::Index>(permute_ket(pi, KetBits(n, static_cast<std::uint32_t>(q))).bits());
  }
  return images;
}

}  // namespace

CMatrix permutation_matrix(const Permutation& pi) {
  const auto images = ket_images(pi);
  const auto dim = static_cast<Eigen::Index>(images.size());
  CMatrix u = CMatrix::Zero(dim, dim);
  for (Eigen::Index q = 0; q < dim; ++q) u(images[static_cast<std::size_t>(q)], q) = 1.0;
  return u;
}

CMatrix conjugate_by_permutation(const Permutation& pi, const CMatrix& rho) {
  const auto images = ket_images(pi);
  const auto dim = static_cast<Eigen::Index>(images.size());
  if (rho.rows() != dim || rho.cols() != dim) {
    throw std::invalid_argument("matrix dimension does not match permutation");
  }
  CMatrix out(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      out(images[static_cast<std::size_t>(r)], images[static_cast<std::size_t>(c)]) = rho(r, c);
    }
  }
  return out;
}

HamiltonianSpec HamiltonianSpec::tensor_power(CMatrix h0) {
  HamiltonianSpec spec{Kind::kTensorPower, std::move(h0), {}};
  spec.validate();
  return spec;
}

HamiltonianSpec HamiltonianSpec::kron_sum(CMatrix h0) {
  HamiltonianSpec spec{Kind::kKronSum, std::move(h0), {}};
  spec.validate();
  return spec;
}

HamiltonianSpec HamiltonianSpec::from_dense(CMatrix h) {
  HamiltonianSpec spec{Kind::kDense, {}, std::move(h)};
  spec.validate();
  return spec;
}

void HamiltonianSpec::validate() const {
  const CMatrix* m = nullptr;
  switch (kind) {
    case Kind::kZero:
      return;
    case Kind::kTensorPower:
    case Kind::kKronSum:
      if (h0.rows() != 2 || h0.cols() != 2) throw std::invalid_argument("h0 must be 2x2");
      m = &h0;
      break;
    case Kind::kDense:
      if (dense.rows() != dense.cols() || dense.rows() < 2) {
        throw std::invalid_argument("dense Hamiltonian must be square");
      }
      m = &dense;
      break;
  }
  if (!m->allFinite()) throw std::invalid_argument("Hamiltonian has non-finite entries");
  if (hermiticity_defect(*m) > kHermitianTol) {
    throw std::invalid_argument("Hamiltonian is not Hermitian");
  }
}

CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

CMatrix pauli_y() {
  CMatrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}

CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

CMatrix build_hamiltonian(const HamiltonianSpec& spec, int n) {
  spec.validate();
  const auto dim = static_cast<Eigen::Index>(dim_kets(n));
  switch (spec.kind) {
    case HamiltonianSpec::Kind::kZero:
      return CMatrix::Zero(dim, dim);
    case HamiltonianSpec::Kind::kTensorPower: {
      CMatrix h = spec.h0;
      for (int i = 1; i < n; ++i) h = kron(h, spec.h0);
      return h;
    }
    case HamiltonianSpec::Kind::kKronSum: {
      CMatrix h = CMatrix::Zero(dim, dim);
      const CMatrix id2 = CMatrix::Identity(2, 2);
      for (int i = 1; i <= n; ++i) {
        CMatrix term = (i == 1) ? spec.h0 : id2;
        for (int m = 2; m <= n; ++m) term = kron(term, m == i ? spec.h0 : id2);
        h += term;
      }
      return h;
    }
    case HamiltonianSpec::Kind::kDense:
      if (spec.dense.rows() != dim) {
        throw std::invalid_argument("dense Hamiltonian is " + std::to_string(spec.dense.rows()) +
                                    "-dimensional, network needs " + std::to_string(dim));
      }
      return spec.dense;
  }
  return {};
}

bool commutes_with_all_permutations(const CMatrix& h, int n) {
  const auto dim = static_cast<Eigen::Index>(dim_kets(n));
  if (h.rows() != dim || h.cols() != dim) {
    throw std::invalid_argument("Hamiltonian dimension does not match qubit count");
  }
  for (int i = 1; i < n; ++i) {
    const CMatrix u = permutation_matrix(Permutation::transposition(n, i, i + 1));
    if (max_abs(h * u - u * h) > kCommutatorTol) return false;
  }
  return true;
}

}  // namespace qcons
