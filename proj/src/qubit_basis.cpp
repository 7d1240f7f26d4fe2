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

#include "qcons/qubit_basis.hpp"

#include <bit>

namespace qcons {

KetBits::KetBits(int n, std::uint32_t bits) : n_(n), bits_(bits) {
  if (n < 1 || n > kMaxStructuralQubits) {
    throw std::invalid_argument("qubit count out of range: " + std::to_string(n));
  }
  if (bits >> n) {
    throw std::invalid_argument("ket bits exceed qubit count");
  }
}

KetBits KetBits::parse(std::string_view text) {
  std::uint32_t bits = 0;
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("ket must be a string of 0/1 digits: " + std::string(text));
    }
    bits = (bits << 1) | static_cast<std::uint32_t>(ch - '0');
  }
  return KetBits(static_cast<int>(text.size()), bits);
}

int KetBits::bit(int qubit) const {
  if (qubit < 1 || qubit > n_) throw std::out_of_range("qubit index out of range");
  return (bits_ & qubit_mask(n_, qubit)) ? 1 : 0;
}

KetBits KetBits::with_bit(int qubit, int value) const {
  if (qubit < 1 || qubit > n_) throw std::out_of_range("qubit index out of range");
  const std::uint32_t mask = qubit_mask(n_, qubit);
  return KetBits(n_, value ? (bits_ | mask) : (bits_ & ~mask));
}

std::string KetBits::str() const {
  std::string out(static_cast<std::size_t>(n_), '0');
  for (int q = 1; q <= n_; ++q) {
    if (bit(q)) out[static_cast<std::size_t>(q - 1)] = '1';
  }
  return out;
}

BasisNode BasisNode::parse(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) {
    throw std::invalid_argument("basis node must look like \"ket|bra\"");
  }
  BasisNode node{KetBits::parse(text.substr(0, bar)), KetBits::parse(text.substr(bar + 1))};
  if (node.ket.size() != node.bra.size()) {
    throw std::invalid_argument("ket and bra lengths differ");
  }
  return node;
}

std::string BasisNode::str() const { return ket.str() + "|" + bra.str(); }

Index ket_index(const KetBits& ket) { return static_cast<Index>(ket.bits()); }

KetBits ket_from_index(int n, Index index) {
  if (index < 0 || index >= dim_kets(n)) throw std::out_of_range("ket index out of range");
  return KetBits(n, static_cast<std::uint32_t>(index));
}

Index node_index(const BasisNode& node) {
  if (node.ket.size() != node.bra.size()) {
    throw std::invalid_argument("ket and bra lengths differ");
  }
  return ket_index(node.bra) * dim_kets(node.size()) + ket_index(node.ket);
}

BasisNode node_from_index(int n, Index index) {
  if (index < 0 || index >= dim_nodes(n)) throw std::out_of_range("node index out of range");
  const Index ket_dim = dim_kets(n);
  return BasisNode{ket_from_index(n, index % ket_dim), ket_from_index(n, index / ket_dim)};
}

TypeCounts type_counts(int n, Index node) {
  const auto mask = static_cast<std::uint32_t>(dim_kets(n) - 1);
  const auto q = static_cast<std::uint32_t>(node) & mask;
  const auto p = static_cast<std::uint32_t>(node >> n) & mask;
  TypeCounts tc;
  tc.d = std::popcount(q & p);
  tc.c = std::popcount(q & ~p & mask);
  tc.b = std::popcount(~q & p & mask);
  tc.a = n - tc.b - tc.c - tc.d;
  return tc;
}

TypeCounts type_counts(const BasisNode& node) {
  return type_counts(node.size(), node_index(node));
}

void check_qubit_count(int n, int cap) {
  if (n < 1) throw std::invalid_argument("network needs at least one qubit");
  if (n > cap) {
    throw CapError("n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace qcons
