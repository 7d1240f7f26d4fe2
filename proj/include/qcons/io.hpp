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

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "qcons/consensus_dynamics.hpp"
#include "qcons/interaction_graph.hpp"
#include "qcons/operators.hpp"

namespace qcons {

using Json = nlohmann::json;

/// Malformed input document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Complex matrices are row lists of [re, im] pairs.
CMatrix complex_matrix_from_json(const Json& j);
Json complex_matrix_to_json(const CMatrix& m);

/// {"n":3, "edges":[[1,2],[2,3]], "weights":[1.0,1.0]}; weights default to 1.
/// A schedule document is also accepted, in which case its first segment is used.
InteractionGraph graph_from_json(const Json& j);
Json graph_to_json(const InteractionGraph& g);

/// {"n":3, "segments":[{"t":0.0, "edges":[[1,2]], "weights":[1.0]}],
///  "dwell_floor":0.1}. Optional "repeat": k with "period": T expands the
/// segment list k times, shifting each copy by T.
SwitchingSchedule schedule_from_json(const Json& j);

/// {"kind":"zero"|"tensor_power"|"kron_sum"|"dense", "h0":..., "matrix":...}
HamiltonianSpec hamiltonian_from_json(const Json& j);

struct Scenario {
  SwitchingSchedule schedule;
  HamiltonianSpec hamiltonian;
  DensityState initial_state;
  double t_end = 0.0;
  double output_stride = 0.0;
  IntegratorOptions options;
};

/// Scenario document: "schedule" (schedule JSON), "hamiltonian", and
/// "initial_state" holding one of {"ket": [[re,im],...]},
/// {"density": matrix} or {"basis": "001"}; plus "t_end", "output_stride"
/// and optional "options": {"check_positivity": bool, "step": h}.
Scenario scenario_from_json(const Json& j);

Json load_json_file(const std::filesystem::path& path);

/// Writes through a temporary sibling file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

/// %.17g.
std::string format_double(double v);

}  // namespace qcons
