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

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qcons/errors.hpp"

namespace qcons {

/// Hard ceiling for any path that enumerates the 4^n operator basis.
inline constexpr int kMaxStructuralQubits = 12;
/// Default ceiling for paths that build matrices over the operator basis.
inline constexpr int kDefaultDenseCap = 8;

using Index = std::int64_t;

/// Computational-basis ket |q_1 ... q_n>. Qubit 1 is the most significant
/// bit of `bits`, so the integer value equals the ket index.
class KetBits {
 public:
  KetBits() = default;
  KetBits(int n, std::uint32_t bits);

  /// Parses "101" style text.
  static KetBits parse(std::string_view text);

  int size() const { return n_; }
  std::uint32_t bits() const { return bits_; }

  /// Value of qubit `qubit` (1-based).
  int bit(int qubit) const;
  KetBits with_bit(int qubit, int value) const;

  std::string str() const;

  auto operator<=>(const KetBits&) const = default;

 private:
  int n_ = 0;
  std::uint32_t bits_ = 0;
};

/// Operator-basis element |ket><bra|; one node of the induced graph.
struct BasisNode {
  KetBits ket;
  KetBits bra;

  int size() const { return ket.size(); }

  /// Parses "100|101".
  static BasisNode parse(std::string_view text);
  std::string str() const;

  auto operator<=>(const BasisNode&) const = default;
};

/// Per-position pattern counts of (q_i, p_i): a=(0,0), b=(0,1), c=(1,0), d=(1,1).
struct TypeCounts {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;

  int total() const { return a + b + c + d; }
  auto operator<=>(const TypeCounts&) const = default;
};

inline Index dim_kets(int n) { return Index{1} << n; }
inline Index dim_nodes(int n) { return Index{1} << (2 * n); }

/// Sum_i q_i 2^(n-i).
Index ket_index(const KetBits& ket);
KetBits ket_from_index(int n, Index index);

/// Column-major vectorization position of entry (row = ket, col = bra):
/// ket_index(bra) * 2^n + ket_index(ket).
Index node_index(const BasisNode& node);
BasisNode node_from_index(int n, Index index);

TypeCounts type_counts(const BasisNode& node);
TypeCounts type_counts(int n, Index node);

/// Bit mask of qubit `qubit` (1-based) inside a ket integer.
inline std::uint32_t qubit_mask(int n, int qubit) {
  return std::uint32_t{1} << (n - qubit);
}

void check_qubit_count(int n, int cap);

}  // namespace qcons
