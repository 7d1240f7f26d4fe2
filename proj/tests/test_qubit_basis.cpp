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

#include <string>

#include "qcons/operators.hpp"
#include "qcons/qubit_basis.hpp"

using namespace qcons;

TEST_CASE("ket_index puts qubit 1 in the most significant bit") {
  CHECK(ket_index(KetBits::parse("000")) == 0);
  CHECK(ket_index(KetBits::parse("100")) == 4);
  CHECK(ket_index(KetBits::parse("101")) == 5);
  CHECK(KetBits::parse("101").bit(1) == 1);
  CHECK(KetBits::parse("101").bit(2) == 0);
}

TEST_CASE("node_index follows column-major vectorization") {
  CHECK(node_index(BasisNode::parse("000|000")) == 0);
  // Entry (row 4, column 5) of an 8x8 matrix: 5 * 8 + 4.
  CHECK(node_index(BasisNode::parse("100|101")) == 44);
  CHECK(node_index(BasisNode::parse("1|0")) == 1);
  CHECK(node_from_index(3, 44).str() == "100|101");
}

TEST_CASE("type_counts examples") {
  CHECK(type_counts(BasisNode::parse("000|000")) == TypeCounts{3, 0, 0, 0});
  CHECK(type_counts(BasisNode::parse("100|101")) == TypeCounts{1, 1, 0, 1});
  CHECK(type_counts(BasisNode::parse("01|10")) == TypeCounts{0, 1, 1, 0});
}

TEST_CASE("node_index and node_from_index are inverse bijections") {
  for (int n = 1; n <= 5; ++n) {
    for (Index v = 0; v < dim_nodes(n); ++v) {
      const auto node = node_from_index(n, v);
      REQUIRE(node_index(node) == v);
      REQUIRE(BasisNode::parse(node.str()) == node);
    }
  }
}

TEST_CASE("type counts are invariant under every qubit permutation") {
  for (int n = 1; n <= 4; ++n) {
    const auto perms = all_permutations(n);
    for (Index v = 0; v < dim_nodes(n); ++v) {
      const auto node = node_from_index(n, v);
      for (const auto& pi : perms) REQUIRE(type_counts(permute_node(pi, node)) == type_counts(node));
    }
  }
}

TEST_CASE("ket_index is monotone in lexicographic bit order") {
  const int n = 4;
  for (Index a = 0; a + 1 < dim_kets(n); ++a) {
    CHECK(ket_from_index(n, a).str() < ket_from_index(n, a + 1).str());
  }
}

TEST_CASE("malformed kets and nodes are rejected") {
  CHECK_THROWS_AS(KetBits::parse("102"), std::invalid_argument);
  CHECK_THROWS_AS(KetBits::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(BasisNode::parse("10|101"), std::invalid_argument);
  CHECK_THROWS_AS(BasisNode::parse("101"), std::invalid_argument);
  CHECK_THROWS_AS(KetBits(2, 4u), std::invalid_argument);
  CHECK_THROWS_AS(node_from_index(2, 16), std::out_of_range);
  CHECK_THROWS_AS(check_qubit_count(9, kDefaultDenseCap), CapError);
}
