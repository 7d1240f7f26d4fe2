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

#include "qcons/interaction_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>
#include <string>

namespace qcons {

Edge Edge::make(int a, int b) {
  if (a == b) throw std::invalid_argument("self-loop on qubit " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

InteractionGraph::InteractionGraph(int n) : n_(n) { validate(false); }

InteractionGraph::InteractionGraph(int n, std::vector<Edge> edges, std::vector<double> weights)
    : n_(n), edges_(std::move(edges)), weights_(std::move(weights)) {
  for (auto& e : edges_) e = Edge::make(e.j, e.k);
  validate(false);
}

InteractionGraph::InteractionGraph(int n, std::vector<Edge> edges)
    : InteractionGraph(n, edges, std::vector<double>(edges.size(), 1.0)) {}

InteractionGraph InteractionGraph::complete(int n, double weight) {
  std::vector<Edge> edges;
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) edges.push_back({j, k});
  }
  return InteractionGraph(n, edges, std::vector<double>(edges.size(), weight));
}

InteractionGraph InteractionGraph::path(int n, double weight) {
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j) edges.push_back({j, j + 1});
  return InteractionGraph(n, edges, std::vector<double>(edges.size(), weight));
}

InteractionGraph InteractionGraph::star(int n, double weight) {
  std::vector<Edge> edges;
  for (int k = 2; k <= n; ++k) edges.push_back({1, k});
  return InteractionGraph(n, edges, std::vector<double>(edges.size(), weight));
}

void InteractionGraph::validate(bool allow_zero) const {
  if (n_ < 1 || n_ > kMaxStructuralQubits) {
    throw std::invalid_argument("qubit count out of range: " + std::to_string(n_));
  }
  if (edges_.size() != weights_.size()) {
    throw std::invalid_argument("edge and weight lists differ in length");
  }
  std::set<Edge> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.j < 1 || e.k > n_ || e.j >= e.k) {
      throw std::invalid_argument("edge out of range: {" + std::to_string(e.j) + "," +
                                  std::to_string(e.k) + "}");
    }
    if (!seen.insert(e).second) {
      throw std::invalid_argument("duplicate edge {" + std::to_string(e.j) + "," +
                                  std::to_string(e.k) + "}");
    }
    const double w = weights_[i];
    if (!std::isfinite(w) || w < 0.0 || (!allow_zero && w == 0.0)) {
      throw std::invalid_argument("edge weights must be positive and finite");
    }
  }
}

bool InteractionGraph::has_edge(const Edge& e) const {
  return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

double InteractionGraph::total_weight() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

InteractionGraph InteractionGraph::with_weights(std::vector<double> weights) const {
  InteractionGraph g = *this;
  g.weights_ = std::move(weights);
  g.validate(true);
  return g;
}

bool is_connected(const InteractionGraph& g) {
  const int n = g.n();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n + 1));
  for (const auto& e : g.edges()) {
    adj[e.j].push_back(e.k);
    adj[e.k].push_back(e.j);
  }
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  std::queue<int> frontier;
  frontier.push(1);
  seen[1] = true;
  int reached = 1;
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        frontier.push(v);
      }
    }
  }
  return reached == n;
}

SwitchingSchedule::SwitchingSchedule(std::vector<Segment> segments, double dwell_floor)
    : segments_(std::move(segments)), dwell_floor_(dwell_floor) {
  if (segments_.empty()) throw std::invalid_argument("schedule has no segments");
  if (!(dwell_floor_ > 0.0)) throw std::invalid_argument("dwell floor must be positive");
  const int n = segments_.front().graph.n();
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (!std::isfinite(segments_[i].start)) {
      throw std::invalid_argument("segment start times must be finite");
    }
    if (segments_[i].graph.n() != n) {
      throw std::invalid_argument("all segments must share the same qubit count");
    }
    if (i > 0) {
      const double gap = segments_[i].start - segments_[i - 1].start;
      if (!(gap > 0.0)) throw std::invalid_argument("segment start times must increase");
      // Relative slack so that periodic expansions like k * 0.1 pass.
      if (gap < dwell_floor_ * (1.0 - 1e-12)) {
        throw std::invalid_argument("segment gap below the dwell-time floor");
      }
    }
  }
}

SwitchingSchedule SwitchingSchedule::constant(InteractionGraph g) {
  return SwitchingSchedule({Segment{0.0, std::move(g)}}, 1.0);
}

SwitchingSchedule SwitchingSchedule::periodic(const std::vector<InteractionGraph>& pattern,
                                              double dwell, int repeats) {
  if (pattern.empty() || repeats < 1) {
    throw std::invalid_argument("periodic schedule needs a pattern and repeats >= 1");
  }
  std::vector<Segment> segments;
  int slot = 0;
  for (int r = 0; r < repeats; ++r) {
    for (const auto& g : pattern) {
      segments.push_back({slot * dwell, g});
      ++slot;
    }
  }
  return SwitchingSchedule(std::move(segments), dwell);
}

std::size_t SwitchingSchedule::segment_at(double t) const {
  if (t < segments_.front().start) {
    throw std::out_of_range("time precedes the first schedule segment");
  }
  auto it = std::upper_bound(segments_.begin(), segments_.end(), t,
                             [](double value, const Segment& s) { return value < s.start; });
  return static_cast<std::size_t>(std::distance(segments_.begin(), it)) - 1;
}

double SwitchingSchedule::segment_end(std::size_t i) const {
  return i + 1 < segments_.size() ? segments_[i + 1].start : kForever;
}

InteractionGraph union_graph(const SwitchingSchedule& schedule, double t0, double t1) {
  if (!(t0 < t1)) throw std::invalid_argument("empty time window");
  const auto first = schedule.segment_at(t0);
  std::vector<Edge> edges;
  std::vector<double> weights;
  const auto& segs = schedule.segments();
  for (std::size_t i = first; i < segs.size() && segs[i].start < t1; ++i) {
    const auto& g = segs[i].graph;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      auto it = std::find(edges.begin(), edges.end(), g.edges()[e]);
      if (it == edges.end()) {
        edges.push_back(g.edges()[e]);
        weights.push_back(g.weights()[e]);
      } else {
        auto& w = weights[static_cast<std::size_t>(std::distance(edges.begin(), it))];
        w = std::max(w, g.weights()[e]);
      }
    }
  }
  return InteractionGraph(schedule.n(), std::move(edges), std::move(weights));
}

}  // namespace qcons
