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

#include <limits>
#include <vector>

#include "qcons/qubit_basis.hpp"

namespace qcons {

/// Unordered qubit pair {j, k}, stored with j < k (1-based).
struct Edge {
  int j = 0;
  int k = 0;

  static Edge make(int a, int b);
  auto operator<=>(const Edge&) const = default;
};

/// Quantum interaction graph: n qubits, undirected edges, positive rates alpha_jk.
class InteractionGraph {
 public:
  InteractionGraph() = default;
  explicit InteractionGraph(int n);
  InteractionGraph(int n, std::vector<Edge> edges, std::vector<double> weights);
  /// Unit weights.
  InteractionGraph(int n, std::vector<Edge> edges);

  static InteractionGraph complete(int n, double weight = 1.0);
  static InteractionGraph path(int n, double weight = 1.0);
  static InteractionGraph star(int n, double weight = 1.0);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(const Edge& e) const;
  double total_weight() const;

  /// Same edge set, new weights. Zero weights are allowed here because the
  /// optimizer walks along the boundary of the budget simplex.
  InteractionGraph with_weights(std::vector<double> weights) const;

 private:
  void validate(bool allow_zero) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<double> weights_;
};

bool is_connected(const InteractionGraph& g);

/// Piecewise-constant switching signal. The last segment extends to +inf.
class SwitchingSchedule {
 public:
  struct Segment {
    double start = 0.0;
    InteractionGraph graph;
  };

  SwitchingSchedule() = default;
  SwitchingSchedule(std::vector<Segment> segments, double dwell_floor);

  static SwitchingSchedule constant(InteractionGraph g);
  /// Repeats `pattern` back to back `repeats` times, each entry lasting `dwell`.
  static SwitchingSchedule periodic(const std::vector<InteractionGraph>& pattern, double dwell,
                                    int repeats);

  int n() const { return segments_.front().graph.n(); }
  const std::vector<Segment>& segments() const { return segments_; }
  double dwell_floor() const { return dwell_floor_; }

  /// Index of the segment active at time t.
  std::size_t segment_at(double t) const;
  /// End of segment i (+inf for the last one).
  double segment_end(std::size_t i) const;

 private:
  std::vector<Segment> segments_;
  double dwell_floor_ = 0.0;
};

inline constexpr double kForever = std::numeric_limits<double>::infinity();

/// Union of every edge set active in [t0, t1); each edge keeps the largest
/// weight it attains in the window.
InteractionGraph union_graph(const SwitchingSchedule& schedule, double t0, double t1);

}  // namespace qcons
