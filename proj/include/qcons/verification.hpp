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
#include <string>
#include <vector>

#include "qcons/io.hpp"

namespace qcons {

struct CheckResult {
  std::string name;
  int n = 0;
  bool passed = false;
  std::string detail;
  Json counterexample;  // null unless the check failed
};

/// Largest n the traversal-based checks run at.
inline constexpr int kVerifyTraversalCap = 8;

/// Runs every structural and algebraic check that applies at this n:
/// partition independence, orbit characterization, isolated nodes, census
/// cross-checks, degree bound attainment, component regularity (n <= 6),
/// diagonal near-strong-regularity (n <= 8), kernel rank and kernel
/// characterization (n <= 3), conjugation relabeling (n <= 3), and the
/// commuting Hamiltonian families (n <= 4).
std::vector<CheckResult> verify_all(int n, std::uint64_t seed);

Json check_to_json(const CheckResult& r);

}  // namespace qcons
