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
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "qcons/io.hpp"

namespace qcons::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // verify found a failing check
  kParseError = 2,
  kCapExceeded = 3,
  kNumericFailure = 4,
  kInfeasible = 5,
};

struct AnalyzeOptions {
  int cap = kDefaultDenseCap;
  /// Skip the Laplacian and allow n up to the structural ceiling.
  bool structural_only = false;
};

/// Census, degree statistics, regularity, kernel dimension and lambda2.
Json analyze(const InteractionGraph& g, const AnalyzeOptions& options);

/// Integrates the scenario and writes trajectory.csv, bloch.csv, sync.csv
/// (when H commutes with all permutations) and summary.json into `out_dir`.
/// Returns the summary.
Json simulate(const Scenario& scenario, const std::filesystem::path& out_dir);

/// Runs verify_all for n in [n_min, n_max].
Json verify(int n_min, int n_max, std::uint64_t seed, bool& all_passed);

Json optimize(const InteractionGraph& g, double budget, int iterations);

/// Full command line: `qcons <analyze|simulate|verify|optimize> ...`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcons::cli
