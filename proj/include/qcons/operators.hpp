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
#include <vector>

#include "qcons/linalg.hpp"
#include "qcons/qubit_basis.hpp"

namespace qcons {

/// Permutation of the qubit labels {1..n}. Acting on a ket, position i of the
/// result holds the old value at position pi(i): |q_pi(1) ... q_pi(n)>.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int j, int k);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  /// Relabel by `*this` first, then by `next`, so that
  /// permute_node(next, permute_node(*this, v)) == permute_node(then(next), v).
  Permutation then(const Permutation& next) const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// Every permutation of {1..n} in lexicographic order (n! entries).
std::vector<Permutation> all_permutations(int n);

/// U_jk on a computational-basis ket: exchanges qubits j and k.
KetBits swap_action(int j, int k, const KetBits& ket);

/// Raw-bit version used in inner loops; j, k are 1-based, unchecked.
inline std::uint32_t swap_bits(int n, int j, int k, std::uint32_t bits) {
  const int sj = n - j;
  const int sk = n - k;
  const std::uint32_t diff = ((bits >> sj) ^ (bits >> sk)) & 1u;
  return bits ^ ((diff << sj) | (diff << sk));
}

/// Node-index version: swaps the qubits on ket and bra simultaneously.
inline std::uint64_t swap_node(int n, int j, int k, std::uint64_t node) {
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  const auto ket = static_cast<std::uint32_t>(node & mask);
  const auto bra = static_cast<std::uint32_t>(node >> n);
  return (std::uint64_t{swap_bits(n, j, k, bra)} << n) | swap_bits(n, j, k, ket);
}

KetBits permute_ket(const Permutation& pi, const KetBits& ket);

/// Conjugation by U_pi on a basis element: |q><p| -> |pi q><pi p|.
BasisNode permute_node(const Permutation& pi, const BasisNode& node);

/// Dense 2^n x 2^n matrix of U_pi.
CMatrix permutation_matrix(const Permutation& pi);

/// U_pi rho U_pi^dagger computed by index relabeling (no matrix products).
CMatrix conjugate_by_permutation(const Permutation& pi, const CMatrix& rho);

struct HamiltonianSpec {
  enum class Kind { kZero, kTensorPower, kKronSum, kDense };

  Kind kind = Kind::kZero;
  CMatrix h0;     // 2x2, tensor_power / kron_sum
  CMatrix dense;  // 2^n x 2^n, dense

  static HamiltonianSpec zero() { return {}; }
  static HamiltonianSpec tensor_power(CMatrix h0);
  static HamiltonianSpec kron_sum(CMatrix h0);
  static HamiltonianSpec from_dense(CMatrix h);

  void validate() const;
};

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kCommutatorTol = 1e-10;

CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();

CMatrix build_hamiltonian(const HamiltonianSpec& spec, int n);

/// [H, U_pi] = 0 for every pi, tested on the adjacent transpositions that
/// generate the symmetric group.
bool commutes_with_all_permutations(const CMatrix& h, int n);

}  // namespace qcons
