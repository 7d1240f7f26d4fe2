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

#include "qcons/consensus_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include <Eigen/Eigenvalues>

#include "qcons/quantum_laplacian.hpp"

namespace qcons {

double min_eigenvalue(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(m, Eigen::EigenvaluesOnly);
  return eig.eigenvalues()(0);
}

int qubits_for_dimension(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim || n < 1) {
    throw std::invalid_argument("matrix dimension is not a power of two >= 2");
  }
  return n;
}

DensityState::DensityState(CMatrix rho, bool check_positivity) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols()) throw std::invalid_argument("density matrix must be square");
  n_ = qubits_for_dimension(rho_.rows());
  if (!rho_.allFinite()) throw std::invalid_argument("density matrix has non-finite entries");
  if (hermiticity_defect(rho_) > kHermitianStateTol) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(rho_.trace() - Complex(1.0)) > kTraceTol) {
    throw std::invalid_argument("density matrix trace differs from 1");
  }
  if (check_positivity && min_eigenvalue(rho_) < -kPsdTol) {
    throw std::invalid_argument("density matrix is not positive semidefinite");
  }
}

DensityState DensityState::from_ket(const CVector& psi) {
  if (std::abs(psi.norm() - 1.0) > 1e-9) throw std::invalid_argument("ket is not normalized");
  return DensityState(psi * psi.adjoint());
}

DensityState DensityState::maximally_mixed(int n) {
  const auto dim = static_cast<Eigen::Index>(dim_kets(n));
  return DensityState(CMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityState DensityState::basis(const KetBits& ket) {
  const auto dim = static_cast<Eigen::Index>(dim_kets(ket.size()));
  CMatrix rho = CMatrix::Zero(dim, dim);
  rho(ket_index(ket), ket_index(ket)) = 1.0;
  return DensityState(std::move(rho));
}

CMatrix quantum_average(const CMatrix& rho, const ComponentPartition& orbits) {
  const auto dim = rho.rows();
  if (rho.cols() != dim || static_cast<Index>(dim) * dim != dim_nodes(orbits.n)) {
    throw std::invalid_argument("state dimension does not match orbit partition");
  }
  CMatrix out(dim, dim);
  // Column-major storage is vec(rho), so node index == storage offset.
  const Complex* in = rho.data();
  Complex* dst = out.data();
  for (const auto& members : orbits.components) {
    Complex sum = 0.0;
    for (Index v : members) sum += in[v];
    const Complex mean = sum / static_cast<double>(members.size());
    for (Index v : members) dst[v] = mean;
  }
  return out;
}

CMatrix quantum_average(const CMatrix& rho) {
  const int n = qubits_for_dimension(rho.rows());
  check_qubit_count(n, kDefaultDenseCap);
  return quantum_average(rho, components(InteractionGraph::complete(n)));
}

DensityState quantum_average(const DensityState& rho) {
  return DensityState(quantum_average(rho.matrix()), false);
}

double residual(const CMatrix& rho, const CMatrix& target) {
  if (rho.rows() != target.rows() || rho.cols() != target.cols()) {
    throw std::invalid_argument("residual needs equal dimensions");
  }
  return (rho - target).norm();
}

StateDiagnostics diagnose(const CMatrix& rho) {
  return {std::abs(rho.trace() - Complex(1.0)), hermiticity_defect(rho), min_eigenvalue(rho)};
}

double default_rk4_step(const CMatrix& h, const SwitchingSchedule& schedule, double stride) {
  const int n = schedule.n();
  double max_alpha = 0.0;
  for (const auto& seg : schedule.segments()) max_alpha = std::max(max_alpha, seg.graph.total_weight());
  const double scale = max_abs(h) * static_cast<double>(dim_kets(n)) + max_alpha * n;
  return scale > 0.0 ? std::min(stride, 0.01 / scale) : stride;
}

namespace {

std::vector<double> sample_times(double t_end, double stride) {
  std::vector<double> times;
  const auto count = static_cast<long>(std::floor(t_end / stride + 1e-9));
  for (long k = 0; k <= count; ++k) times.push_back(static_cast<double>(k) * stride);
  if (t_end - times.back() > 1e-9 * stride) times.push_back(t_end);
  return times;
}

/// Exact H = 0 propagation over one fixed graph.
class ExactPropagator {
 public:
  ExactPropagator(const InteractionGraph& g, const CMatrix& rho_start)
      : lap_(build_laplacian(g)), spectra_(block_spectra(lap_, true, false)), start_(rho_start) {
    const Complex* x = start_.data();
    means_.resize(spectra_.size());
    coeffs_.resize(spectra_.size());
    for (std::size_t b = 0; b < spectra_.size(); ++b) {
      const auto& members = lap_.partition.components[spectra_[b].representative()];
      Complex sum = 0.0;
      for (Index v : members) sum += x[v];
      means_[b] = sum / static_cast<double>(members.size());
      CVector dev(static_cast<Eigen::Index>(members.size()));
      for (std::size_t i = 0; i < members.size(); ++i) dev(static_cast<Eigen::Index>(i)) = x[members[i]] - means_[b];
      coeffs_[b] = spectra_[b].eigenvectors.transpose().cast<Complex>() * dev;
    }
  }

  /// State a time `tau` after the segment start. The constant mode of each
  /// block is carried by the mean, so the deviation keeps full relative
  /// accuracy while it decays.
  CMatrix at(double tau) const {
    CMatrix out(start_.rows(), start_.cols());
    Complex* y = out.data();
    for (std::size_t b = 0; b < spectra_.size(); ++b) {
      const auto& s = spectra_[b];
      const auto& members = lap_.partition.components[s.representative()];
      CVector decay(s.eigenvalues.size());
      for (Eigen::Index i = 0; i < decay.size(); ++i) {
        decay(i) = i == 0 ? Complex(0.0) : coeffs_[b](i) * std::exp(-s.eigenvalues(i) * tau);
      }
      const CVector dev = s.eigenvectors.cast<Complex>() * decay;
      for (std::size_t i = 0; i < members.size(); ++i) y[members[i]] = means_[b] + dev(static_cast<Eigen::Index>(i));
    }
    return out;
  }

 private:
  QuantumLaplacian lap_;
  std::vector<BlockSpectrum> spectra_;
  CMatrix start_;
  std::vector<Complex> means_;
  std::vector<CVector> coeffs_;
};

/// Right-hand side of the master equation for one fixed graph.
class Generator {
 public:
  Generator(const CMatrix& h, const InteractionGraph& g) : h_(h), has_h_(max_abs(h) > 0.0) {
    const int n = g.n();
    const auto dim = dim_kets(n);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      std::vector<Eigen::Index> image(static_cast<std::size_t>(dim));
      for (Index q = 0; q < dim; ++q) {
        image[static_cast<std::size_t>(q)] =
            swap_bits(n, g.edges()[e].j, g.edges()[e].k, static_cast<std::uint32_t>(q));
      }
      swaps_.push_back(std::move(image));
      alphas_.push_back(g.weights()[e]);
    }
  }

  void operator()(const CMatrix& rho, CMatrix& out) const {
    const auto dim = rho.rows();
    if (has_h_) {
      out.noalias() = h_ * rho;
      out.noalias() -= rho * h_;
      out *= Complex(0.0, -1.0);
    } else {
      out.setZero(dim, dim);
    }
    for (std::size_t e = 0; e < swaps_.size(); ++e) {
      const auto& s = swaps_[e];
      const double a = alphas_[e];
      for (Eigen::Index c = 0; c < dim; ++c) {
        const auto sc = s[static_cast<std::size_t>(c)];
        for (Eigen::Index r = 0; r < dim; ++r) {
          out(r, c) += a * (rho(s[static_cast<std::size_t>(r)], sc) - rho(r, c));
        }
      }
    }
  }

 private:
  CMatrix h_;
  bool has_h_;
  std::vector<std::vector<Eigen::Index>> swaps_;
  std::vector<double> alphas_;
};

void rk4_advance(const Generator& f, CMatrix& rho, double span, double h_max) {
  if (span <= 0.0) return;
  const auto steps = static_cast<long>(std::ceil(span / h_max - 1e-9));
  const double h = span / static_cast<double>(std::max(steps, 1L));
  CMatrix k1, k2, k3, k4, tmp;
  for (long s = 0; s < std::max(steps, 1L); ++s) {
    f(rho, k1);
    tmp = rho + 0.5 * h * k1;
    f(tmp, k2);
    tmp = rho + 0.5 * h * k2;
    f(tmp, k3);
    tmp = rho + h * k3;
    f(tmp, k4);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
}

}  // namespace

Trajectory integrate(const DensityState& rho0, const SwitchingSchedule& schedule,
                     const HamiltonianSpec& hamiltonian, double t_end, double stride,
                     const IntegratorOptions& options) {
  if (!(t_end > 0.0) || !std::isfinite(t_end)) throw std::invalid_argument("t_end must be positive");
  if (!(stride > 0.0)) throw std::invalid_argument("output stride must be positive");
  if (schedule.segments().front().start > 0.0) {
    throw std::invalid_argument("schedule does not cover t = 0");
  }
  const int n = rho0.n();
  if (schedule.n() != n) throw std::invalid_argument("schedule and state disagree on qubit count");
  check_qubit_count(n, kDefaultDenseCap);

  const CMatrix h = build_hamiltonian(hamiltonian, n);
  const bool h_zero = max_abs(h) == 0.0;
  bool exact = false;
  switch (options.method) {
    case IntegratorOptions::Method::kAuto:
      exact = h_zero;
      break;
    case IntegratorOptions::Method::kExact:
      if (!h_zero) throw std::invalid_argument("exact propagation requires H = 0");
      exact = true;
      break;
    case IntegratorOptions::Method::kRk4:
      exact = false;
      break;
  }

  Trajectory traj;
  traj.method = exact ? "exact" : "rk4";
  traj.step = exact ? 0.0 : (options.step > 0.0 ? options.step : default_rk4_step(h, schedule, stride));
  const auto times = sample_times(t_end, stride);

  // Event grid: output times plus every switching instant inside (0, t_end).
  std::vector<double> events = times;
  for (const auto& seg : schedule.segments()) {
    if (seg.start > 0.0 && seg.start < t_end) events.push_back(seg.start);
  }
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end(),
                           [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)); }),
               events.end());

  auto emit = [&](double t, const CMatrix& rho) {
    if (!rho.allFinite()) throw NumericError("non-finite state at t = " + std::to_string(t));
    traj.times.push_back(t);
    traj.states.push_back(rho);
    traj.diagnostics.push_back(diagnose(rho));
    if (options.check_positivity && traj.diagnostics.back().min_eigenvalue < -1e-6) {
      throw NumericError("state lost positivity at t = " + std::to_string(t));
    }
  };

  CMatrix rho = rho0.matrix();
  std::size_t next_sample = 0;
  std::size_t active = std::numeric_limits<std::size_t>::max();
  std::unique_ptr<ExactPropagator> exact_prop;
  std::unique_ptr<Generator> generator;
  double segment_origin = 0.0;

  for (std::size_t i = 0; i + 1 <= events.size(); ++i) {
    const double t = events[i];
    const std::size_t seg = schedule.segment_at(t);
    if (seg != active) {
      active = seg;
      segment_origin = t;
      const auto& g = schedule.segments()[seg].graph;
      if (exact) {
        exact_prop = std::make_unique<ExactPropagator>(g, rho);
      } else {
        generator = std::make_unique<Generator>(h, g);
      }
    }
    if (next_sample < times.size() && std::abs(times[next_sample] - t) <= 1e-12 * std::max(1.0, t)) {
      emit(times[next_sample], rho);
      ++next_sample;
    }
    if (i + 1 == events.size()) break;
    const double t_next = events[i + 1];
    if (exact) {
      rho = exact_prop->at(t_next - segment_origin);
    } else {
      rk4_advance(*generator, rho, t_next - t, traj.step);
    }
    if (!rho.allFinite()) throw NumericError("integration produced non-finite values near t = " + std::to_string(t_next));
  }
  return traj;
}

RateFit fit_exponential_rate(const std::vector<double>& times, const std::vector<double>& values) {
  if (times.size() != values.size()) throw std::invalid_argument("times and values differ in length");
  std::size_t valid = 0;
  while (valid < values.size() && values[valid] > 1e-12 && std::isfinite(values[valid])) ++valid;
  if (valid < 10) {
    throw std::invalid_argument("no decaying window: fewer than 10 samples above 1e-12");
  }
  const std::size_t first = valid / 2;
  const auto m = static_cast<double>(valid - first);
  double st = 0.0, sy = 0.0;
  for (std::size_t i = first; i < valid; ++i) {
    st += times[i];
    sy += std::log(values[i]);
  }
  const double mt = st / m, my = sy / m;
  double stt = 0.0, sty = 0.0, syy = 0.0;
  for (std::size_t i = first; i < valid; ++i) {
    const double dt = times[i] - mt, dy = std::log(values[i]) - my;
    stt += dt * dt;
    sty += dt * dy;
    syy += dy * dy;
  }
  RateFit fit;
  fit.rate = -sty / stt;
  fit.r_squared = syy > 0.0 ? (sty * sty) / (stt * syy) : 1.0;
  fit.t_first = times[first];
  fit.t_last = times[valid - 1];
  fit.samples = valid - first;
  return fit;
}

RateFit estimate_rate(const Trajectory& traj, const CMatrix& target) {
  std::vector<double> res;
  res.reserve(traj.states.size());
  for (const auto& s : traj.states) res.push_back(residual(s, target));
  return fit_exponential_rate(traj.times, res);
}

}  // namespace qcons
