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

#include <string>
#include <vector>

#include "qcons/induced_graph.hpp"
#include "qcons/interaction_graph.hpp"
#include "qcons/linalg.hpp"
#include "qcons/operators.hpp"

namespace qcons {

inline constexpr double kHermitianStateTol = 1e-9;
inline constexpr double kTraceTol = 1e-9;
inline constexpr double kPsdTol = 1e-8;

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const CMatrix& m);

/// Density matrix on n qubits: Hermitian, unit trace, positive semidefinite.
class DensityState {
 public:
  DensityState() = default;
  explicit DensityState(CMatrix rho, bool check_positivity = true);

  /// |psi><psi| for a normalized amplitude vector.
  static DensityState from_ket(const CVector& psi);
  static DensityState maximally_mixed(int n);
  /// |ket><ket| for a computational basis ket such as "001".
  static DensityState basis(const KetBits& ket);

  const CMatrix& matrix() const { return rho_; }
  int n() const { return n_; }

 private:
  CMatrix rho_;
  int n_ = 0;
};

/// Number of qubits for a 2^n x 2^n matrix.
int qubits_for_dimension(Eigen::Index dim);

/// P*(rho) = (1/n!) sum_pi U_pi rho U_pi^dagger, evaluated as the mean of
/// vec(rho) over each orbit (= component of the K_n induced graph).
CMatrix quantum_average(const CMatrix& rho);
CMatrix quantum_average(const CMatrix& rho, const ComponentPartition& orbits);
DensityState quantum_average(const DensityState& rho);

/// Frobenius norm of rho - target.
double residual(const CMatrix& rho, const CMatrix& target);

struct StateDiagnostics {
  double trace_defect = 0.0;
  double hermiticity_defect = 0.0;
  double min_eigenvalue = 0.0;
};

StateDiagnostics diagnose(const CMatrix& rho);

struct IntegratorOptions {
  enum class Method { kAuto, kExact, kRk4 };

  Method method = Method::kAuto;
  /// RK4 step override; 0 selects the default heuristic.
  double step = 0.0;
  /// Throw if an output state has min eigenvalue below -1e-6.
  bool check_positivity = false;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<CMatrix> states;
  std::vector<StateDiagnostics> diagnostics;
  std::string method;  // "exact" or "rk4"
  double step = 0.0;   // nominal RK4 step, 0 for the exact path
};

/// Default RK4 step: min(stride, 0.01 / (max|H| 2^n + max_segment_total_alpha n)).
double default_rk4_step(const CMatrix& h, const SwitchingSchedule& schedule, double stride);

/// Solves d rho/dt = -i[H, rho] + sum_{jk in E_sigma(t)} alpha_jk (U_jk rho U_jk - rho)
/// from t = 0 to t_end, sampling every `stride`. With H = 0 each segment is
/// propagated exactly through the eigen-decomposition of its component
/// blocks; otherwise fixed-step RK4 with steps aligned to segment boundaries
/// and output times.
Trajectory integrate(const DensityState& rho0, const SwitchingSchedule& schedule,
                     const HamiltonianSpec& hamiltonian, double t_end, double stride,
                     const IntegratorOptions& options = {});

struct RateFit {
  double rate = 0.0;
  double r_squared = 0.0;
  double t_first = 0.0;
  double t_last = 0.0;
  std::size_t samples = 0;
};

/// Least-squares slope of -log(value) against t over the latter half of the
/// leading run of samples with value > 1e-12. Needs at least 10 such samples.
RateFit fit_exponential_rate(const std::vector<double>& times, const std::vector<double>& values);

RateFit estimate_rate(const Trajectory& traj, const CMatrix& target);

}  // namespace qcons
