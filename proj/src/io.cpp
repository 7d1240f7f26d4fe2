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

#include "qcons/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qcons {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  return j.get<double>();
}

int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw ParseError("complex entries must be [re, im] pairs");
  return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

InteractionGraph graph_body(int n, const Json& j) {
  const Json& edges_json = require(j, "edges");
  if (!edges_json.is_array()) throw ParseError("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto& e : edges_json) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edges must be [j, k] pairs");
    edges.push_back({integer(e[0], "edge endpoint"), integer(e[1], "edge endpoint")});
  }
  std::vector<double> weights(edges.size(), 1.0);
  if (j.contains("weights")) {
    const Json& w = j.at("weights");
    if (!w.is_array() || w.size() != edges.size()) {
      throw ParseError("\"weights\" must list one weight per edge");
    }
    for (std::size_t i = 0; i < w.size(); ++i) weights[i] = number(w[i], "edge weight");
  }
  // Normalize orientation here so bad edges surface as parse errors.
  for (auto& e : edges) {
    if (e.j == e.k) throw ParseError("self-loop in edge list");
    e = Edge::make(e.j, e.k);
  }
  try {
    return InteractionGraph(n, std::move(edges), std::move(weights));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
}

}  // namespace

CMatrix complex_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  CMatrix m(rows, rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != rows) {
      throw ParseError("matrix must be square");
    }
    for (Eigen::Index c = 0; c < rows; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

Json complex_matrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

InteractionGraph graph_from_json(const Json& j) {
  const int n = integer(require(j, "n"), "n");
  if (n < 1) throw ParseError("n must be positive");
  if (j.contains("segments")) {
    const Json& segs = j.at("segments");
    if (!segs.is_array() || segs.empty()) throw ParseError("\"segments\" must be a non-empty array");
    return graph_body(n, segs[0]);
  }
  return graph_body(n, j);
}

Json graph_to_json(const InteractionGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.j, e.k});
  return {{"n", g.n()}, {"edges", edges}, {"weights", g.weights()}};
}

SwitchingSchedule schedule_from_json(const Json& j) {
  const int n = integer(require(j, "n"), "n");
  if (n < 1) throw ParseError("n must be positive");
  const Json& segs = require(j, "segments");
  if (!segs.is_array() || segs.empty()) throw ParseError("\"segments\" must be a non-empty array");
  std::vector<SwitchingSchedule::Segment> base;
  for (const auto& s : segs) base.push_back({number(require(s, "t"), "segment time"), graph_body(n, s)});
  const double dwell = j.contains("dwell_floor") ? number(j.at("dwell_floor"), "dwell_floor") : 1.0;

  std::vector<SwitchingSchedule::Segment> segments;
  if (j.contains("repeat")) {
    const int repeat = integer(j.at("repeat"), "repeat");
    const double period = number(require(j, "period"), "period");
    if (repeat < 1 || !(period > 0.0)) throw ParseError("repeat must be >= 1 and period > 0");
    for (int r = 0; r < repeat; ++r) {
      for (const auto& s : base) segments.push_back({s.start + r * period, s.graph});
    }
  } else {
    segments = std::move(base);
  }
  try {
    return SwitchingSchedule(std::move(segments), dwell);
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
}

HamiltonianSpec hamiltonian_from_json(const Json& j) {
  const Json& kind_json = require(j, "kind");
  if (!kind_json.is_string()) throw ParseError("\"kind\" must be a string");
  const auto kind = kind_json.get<std::string>();
  try {
    if (kind == "zero") return HamiltonianSpec::zero();
    if (kind == "tensor_power") return HamiltonianSpec::tensor_power(complex_matrix_from_json(require(j, "h0")));
    if (kind == "kron_sum") return HamiltonianSpec::kron_sum(complex_matrix_from_json(require(j, "h0")));
    if (kind == "dense") return HamiltonianSpec::from_dense(complex_matrix_from_json(require(j, "matrix")));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
  throw ParseError("unknown Hamiltonian kind \"" + kind + "\"");
}

Scenario scenario_from_json(const Json& j) {
  Scenario sc;
  sc.schedule = schedule_from_json(j.contains("schedule") ? j.at("schedule") : j);
  const int n = sc.schedule.n();
  if (j.contains("n") && integer(j.at("n"), "n") != n) throw ParseError("scenario n disagrees with schedule");
  sc.hamiltonian = j.contains("hamiltonian") ? hamiltonian_from_json(j.at("hamiltonian")) : HamiltonianSpec::zero();

  const Json& init = require(j, "initial_state");
  try {
    if (init.contains("ket")) {
      const Json& amps = init.at("ket");
      if (!amps.is_array() || static_cast<Index>(amps.size()) != dim_kets(n)) {
        throw ParseError("ket needs 2^n amplitudes");
      }
      CVector psi(static_cast<Eigen::Index>(amps.size()));
      for (std::size_t i = 0; i < amps.size(); ++i) psi(static_cast<Eigen::Index>(i)) = complex_from_json(amps[i]);
      sc.initial_state = DensityState::from_ket(psi);
    } else if (init.contains("density")) {
      sc.initial_state = DensityState(complex_matrix_from_json(init.at("density")));
    } else if (init.contains("basis")) {
      sc.initial_state = DensityState::basis(KetBits::parse(init.at("basis").get<std::string>()));
    } else {
      throw ParseError("initial_state needs \"ket\", \"density\" or \"basis\"");
    }
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string("invalid initial state: ") + ex.what());
  }
  if (sc.initial_state.n() != n) throw ParseError("initial state size does not match n");

  sc.t_end = number(require(j, "t_end"), "t_end");
  sc.output_stride = number(require(j, "output_stride"), "output_stride");
  if (!(sc.t_end > 0.0) || !(sc.output_stride > 0.0)) throw ParseError("t_end and output_stride must be positive");
  if (j.contains("options")) {
    const Json& opt = j.at("options");
    if (opt.contains("check_positivity")) sc.options.check_positivity = opt.at("check_positivity").get<bool>();
    if (opt.contains("step")) sc.options.step = number(opt.at("step"), "step");
  }
  return sc;
}

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& ex) {
    throw ParseError(path.string() + ": " + ex.what());
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << contents;
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace qcons
