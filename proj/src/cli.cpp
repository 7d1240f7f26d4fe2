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

#include "qcons/cli.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qcons/consensus_dynamics.hpp"
#include "qcons/induced_graph.hpp"
#include "qcons/quantum_laplacian.hpp"
#include "qcons/synchronization.hpp"
#include "qcons/verification.hpp"
#include "qcons/weight_optimizer.hpp"

namespace qcons::cli {

namespace {

Json histogram_json(const std::map<std::size_t, std::size_t>& hist) {
  Json j = Json::object();
  for (const auto& [size, count] : hist) j[std::to_string(size)] = count;
  return j;
}

}  // namespace

Json analyze(const InteractionGraph& g, const AnalyzeOptions& options) {
  const int n = g.n();
  const int cap = options.structural_only ? kMaxStructuralQubits : std::min(options.cap, kMaxStructuralQubits);
  check_qubit_count(n, cap);

  const bool connected = is_connected(g);
  const auto part = components(g);
  Json report{{"n", n}, {"graph", graph_to_json(g)}, {"connected", connected}};
  report["total_components"] = part.count();
  report["size_histogram"] = histogram_json(part.size_histogram());
  std::size_t largest = 0;
  for (const auto& c : part.components) largest = std::max(largest, c.size());
  report["largest"] = largest;
  if (n >= 2) {
    const auto [lo, hi] = largest_component_bounds(n);
    report["bounds"] = {lo, hi};
    report["degree_bound"] = max_degree_bound(n);
  }

  std::size_t max_degree = 0;
  for (Index v = 0; v < dim_nodes(n); ++v) max_degree = std::max(max_degree, degree(g, v));
  report["max_degree"] = max_degree;

  const auto regularity = verify_component_regularity(g, part);
  report["all_components_regular"] =
      std::all_of(regularity.begin(), regularity.end(), [](const auto& r) { return r.regular; });

  if (connected && n >= 2) {
    const auto census = component_census(n);
    report["census_total"] = census.total_components;
    report["census_matches_traversal"] = census.total_components == part.count();
  }
  if (!connected) report["warning"] = "not connected";

  if (!options.structural_only) {
    const auto lap = build_laplacian(g, cap);
    report["kernel_dimension"] = kernel_dimension(lap);
    if (connected && g.edge_count() > 0) report["lambda2"] = lambda2(lap);
  }
  return report;
}

Json simulate(const Scenario& scenario, const std::filesystem::path& out_dir) {
  const int n = scenario.initial_state.n();
  const auto traj = integrate(scenario.initial_state, scenario.schedule, scenario.hamiltonian, scenario.t_end,
                              scenario.output_stride, scenario.options);
  const CMatrix h = build_hamiltonian(scenario.hamiltonian, n);
  const CMatrix rho_star = quantum_average(scenario.initial_state.matrix());
  const bool commuting = commutes_with_all_permutations(h, n);

  // Consensus target rotates with the Hamiltonian: e^{-iHt} P*(rho0) e^{iHt}.
  std::vector<double> residuals;
  std::vector<std::vector<double>> distances(static_cast<std::size_t>(n));
  std::ostringstream traj_csv, bloch_csv, sync_csv;
  traj_csv << "t,residual,trace_defect,min_eig";
  if (commuting) {
    for (int k = 1; k <= n; ++k) traj_csv << ",d" << k;
    sync_csv << "t";
    for (int k = 1; k <= n; ++k) sync_csv << ",D_" << k;
    sync_csv << '\n';
  }
  traj_csv << '\n';
  bloch_csv << "t,qubit,x,y,z\n";

  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const double t = traj.times[i];
    const CMatrix& rho = traj.states[i];
    const CMatrix u = unitary_propagator(h, t);
    residuals.push_back(residual(rho, u * rho_star * u.adjoint()));
    const auto& diag = traj.diagnostics[i];
    traj_csv << format_double(t) << ',' << format_double(residuals.back()) << ','
             << format_double(diag.trace_defect) << ',' << format_double(diag.min_eigenvalue);
    CMatrix orbit;
    if (commuting) {
      orbit = sync_orbit(rho_star, scenario.hamiltonian, t);
      sync_csv << format_double(t);
    }
    for (int k = 1; k <= n; ++k) {
      const auto reduced = partial_trace_to_qubit(rho, k).matrix;
      const auto b = bloch_vector(reduced);
      bloch_csv << format_double(t) << ',' << k << ',' << format_double(b[0]) << ',' << format_double(b[1])
                << ',' << format_double(b[2]) << '\n';
      if (commuting) {
        const double d = trace_distance(reduced, orbit);
        distances[static_cast<std::size_t>(k - 1)].push_back(d);
        traj_csv << ',' << format_double(d);
        sync_csv << ',' << format_double(d);
      }
    }
    traj_csv << '\n';
    if (commuting) sync_csv << '\n';
  }

  std::filesystem::create_directories(out_dir);
  write_file_atomic(out_dir / "trajectory.csv", traj_csv.str());
  write_file_atomic(out_dir / "bloch.csv", bloch_csv.str());

  Json summary{{"n", n},
               {"method", traj.method},
               {"step", traj.step},
               {"samples", traj.times.size()},
               {"t_end", traj.times.back()},
               {"initial_residual", residuals.front()},
               {"final_residual", residuals.back()}};
  double max_trace = 0.0, max_herm = 0.0, min_eig = 1.0;
  for (const auto& d : traj.diagnostics) {
    max_trace = std::max(max_trace, d.trace_defect);
    max_herm = std::max(max_herm, d.hermiticity_defect);
    min_eig = std::min(min_eig, d.min_eigenvalue);
  }
  summary["max_trace_defect"] = max_trace;
  summary["max_hermiticity_defect"] = max_herm;
  summary["min_eigenvalue"] = min_eig;

  const auto uni = union_graph(scenario.schedule, 0.0, scenario.t_end);
  summary["union_graph_connected"] = is_connected(uni);
  const auto& first_graph = scenario.schedule.segments().front().graph;
  if (scenario.schedule.segments().size() == 1 && is_connected(first_graph) && first_graph.edge_count() > 0) {
    summary["lambda2"] = lambda2(build_laplacian(first_graph));
  }
  try {
    const auto fit = fit_exponential_rate(traj.times, residuals);
    summary["rate"] = {{"rate", fit.rate}, {"r_squared", fit.r_squared}, {"t_first", fit.t_first},
                       {"t_last", fit.t_last}, {"samples", fit.samples}};
  } catch (const std::invalid_argument& ex) {
    summary["rate"] = nullptr;
    summary["rate_error"] = ex.what();
  }

  Json sync{{"available", commuting}};
  if (commuting) {
    write_file_atomic(out_dir / "sync.csv", sync_csv.str());
    Json final_d = Json::array();
    double final_max = 0.0;
    for (const auto& series : distances) {
      final_d.push_back(series.back());
      final_max = std::max(final_max, series.back());
    }
    sync["distance_at_t_end"] = final_d;
    sync["final_max_distance"] = final_max;
    Json pairs = Json::array();
    for (int k = 0; k < n; ++k) {
      for (int m = k + 1; m < n; ++m) {
        double gap = 0.0;
        for (std::size_t i = 0; i < traj.times.size(); ++i) {
          gap = std::max(gap, std::abs(distances[static_cast<std::size_t>(k)][i] -
                                       distances[static_cast<std::size_t>(m)][i]));
        }
        if (gap <= 1e-10) pairs.push_back({k + 1, m + 1});
      }
    }
    sync["coinciding_pairs"] = pairs;
  } else {
    sync["warning"] = "H does not commute with all qubit permutations; synchronization outputs skipped";
  }
  summary["sync"] = sync;
  write_file_atomic(out_dir / "summary.json", summary.dump(2) + "\n");
  return summary;
}

Json verify(int n_min, int n_max, std::uint64_t seed, bool& all_passed) {
  if (n_min > n_max) throw std::invalid_argument("empty n range");
  Json checks = Json::array();
  all_passed = true;
  for (int n = n_min; n <= n_max; ++n) {
    for (const auto& r : verify_all(n, seed)) {
      all_passed = all_passed && r.passed;
      checks.push_back(check_to_json(r));
    }
  }
  return {{"n_min", n_min}, {"n_max", n_max}, {"seed", seed}, {"all_passed", all_passed}, {"checks", checks}};
}

Json optimize(const InteractionGraph& g, double budget, int iterations) {
  const auto report = optimize_weights(g, budget, iterations);
  return {{"graph", graph_to_json(g)},
          {"budget", report.budget},
          {"iterations", iterations},
          {"initial_weights", report.initial_weights},
          {"final_weights", report.best_weights},
          {"initial_lambda2", report.initial_lambda2},
          {"final_lambda2", report.best_lambda2},
          {"best_iteration", report.best_iteration},
          {"lambda2_history", report.lambda2_history},
          {"eigengap", report.final_eigengap}};
}

namespace {

void emit(const Json& j, const std::string& out_path, std::ostream& out) {
  const auto text = j.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    write_file_atomic(out_path, text);
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Swap-operator quantum consensus network analyzer"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 0;
  int cap = kDefaultDenseCap;
  double step = 0.0;
  std::string out_path;
  app.add_option("--seed", seed, "Seed for every random draw");
  app.add_option("--cap", cap, "Largest n allowed for matrix-building paths");
  app.add_option("--step", step, "RK4 step override");
  app.add_option("--out", out_path, "Output file (analyze/verify/optimize) or directory (simulate)");

  std::string graph_file, scenario_file;
  bool structural = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Induced-graph census, degrees, regularity, lambda2");
  analyze_cmd->add_option("graph", graph_file, "Graph or schedule JSON")->required();
  analyze_cmd->add_flag("--structural-only", structural, "Skip the Laplacian; allows n up to 12");

  auto* simulate_cmd = app.add_subcommand("simulate", "Integrate a scenario and write CSV/JSON outputs");
  simulate_cmd->add_option("scenario", scenario_file, "Scenario JSON")->required();

  int n_min = 2, n_max = 4;
  auto* verify_cmd = app.add_subcommand("verify", "Run the structural property checks over a range of n");
  verify_cmd->add_option("--n-min", n_min, "Smallest n")->capture_default_str();
  verify_cmd->add_option("--n-max", n_max, "Largest n")->capture_default_str();

  double budget = 1.0;
  int iterations = 200;
  auto* optimize_cmd = app.add_subcommand("optimize", "Maximize lambda2 over edge weights under a budget");
  optimize_cmd->add_option("graph", graph_file, "Graph JSON")->required();
  optimize_cmd->add_option("--budget", budget, "Total weight budget W0")->capture_default_str();
  optimize_cmd->add_option("--iterations", iterations, "Supergradient iterations")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (analyze_cmd->parsed()) {
      AnalyzeOptions opts{cap, structural};
      emit(analyze(graph_from_json(load_json_file(graph_file)), opts), out_path, out);
    } else if (simulate_cmd->parsed()) {
      auto scenario = scenario_from_json(load_json_file(scenario_file));
      if (step > 0.0) scenario.options.step = step;
      check_qubit_count(scenario.initial_state.n(), std::min(cap, kDefaultDenseCap));
      const auto summary = simulate(scenario, std::filesystem::path(out_path.empty() ? "out" : out_path));
      out << summary.dump(2) << "\n";
    } else if (verify_cmd->parsed()) {
      bool all = false;
      emit(verify(n_min, n_max, seed, all), out_path, out);
      return all ? kOk : kCheckFailed;
    } else if (optimize_cmd->parsed()) {
      emit(optimize(graph_from_json(load_json_file(graph_file)), budget, iterations), out_path, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const Json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const CapError& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kNumericFailure;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kOk;
}

}  // namespace qcons::cli
