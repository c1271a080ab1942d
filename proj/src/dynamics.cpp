// Copyright 2026 The opencoh Authors
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

#include "opencoh/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include <fftw3.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "opencoh/linalg.hpp"

namespace opencoh {

namespace {

// Dormand–Prince 5(4) coefficients.

constexpr double kA[6][6] = {
    {1.0 / 5, 0, 0, 0, 0},
    {3.0 / 40, 9.0 / 40, 0, 0, 0},
    {44.0 / 45, -56.0 / 15, 32.0 / 9, 0, 0},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729, 0},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
// Fifth minus embedded fourth order weights.
constexpr std::array<double, 7> kE{-71.0 / 57600,   0, 71.0 / 16695, -71.0 / 1920,
                                   17253.0 / 339200, -22.0 / 525, 1.0 / 40};
// Dense-output polynomial: y(t + θh) = y + h Σ_i K_i Σ_j P[i][j] θ^(j+1).
constexpr double kP[7][4] = {
    {1.0, -8048581381.0 / 2820520608, 8663915743.0 / 2820520608, -12715105075.0 / 11282082432},
    {0, 0, 0, 0},
    {0, 131558114200.0 / 32700410799, -68118460800.0 / 10900136933, 87487479700.0 / 32700410799},
    {0, -1754552775.0 / 470086768, 14199869525.0 / 1410260304, -10690763975.0 / 1880347072},
    {0, 127303824393.0 / 49829197408, -318862633887.0 / 49829197408, 701980252875.0 / 199316789632},
    {0, -282668133.0 / 205662961, 2019193451.0 / 616988883, -1453857185.0 / 822651844},
    {0, 40617522.0 / 29380423, -110615467.0 / 29380423, 69997945.0 / 29380423},
};

void check_grid(const std::vector<double>& t_grid) {
  if (t_grid.empty()) throw std::invalid_argument("time grid is empty");
  if (t_grid.front() < 0.0) throw std::invalid_argument("time grid must start at t >= 0");
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > t_grid[i - 1])) throw std::invalid_argument("time grid must be strictly ascending");
  }
}

void check_initial_state(const DenseMatrix& rho0, Eigen::Index d) {
  if (rho0.rows() != d || rho0.cols() != d) throw DimensionError("initial state has the wrong dimension");
  if ((rho0 - rho0.adjoint()).norm() > 1e-10) throw std::invalid_argument("initial state is not Hermitian");
  if (std::abs(rho0.trace() - Complex(1.0)) > 1e-10) throw std::invalid_argument("initial state is not trace one");
  Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(0.5 * (rho0 + rho0.adjoint()), Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-10) {
    throw std::invalid_argument("initial state is not positive semidefinite");
  }
}

void record(Trajectory& traj, double t, DenseMatrix rho, double invariant_tol) {
  const double trace_drift = std::abs(rho.trace() - Complex(1.0));
  const double herm_drift = (rho - rho.adjoint()).norm();
  traj.max_trace_drift = std::max(traj.max_trace_drift, trace_drift);
  traj.max_hermiticity_drift = std::max(traj.max_hermiticity_drift, herm_drift);
  if (trace_drift > invariant_tol || herm_drift > invariant_tol) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "evolve: invariant violated at t = %.6g (trace drift %.3e, hermiticity %.3e)",
                  t, trace_drift, herm_drift);
    throw std::runtime_error(buf);
  }
  traj.times.push_back(t);
  traj.states.push_back(std::move(rho));
}

}  // namespace

Trajectory evolve(const SparseOperator& hamiltonian, const LindbladSet& jumps, const DenseMatrix& rho0,
                  const std::vector<double>& t_grid, const EvolveOptions& opts) {
  if (!(opts.rel_tol > 0.0) || opts.abs_tol < 0.0) throw std::invalid_argument("evolve: tolerances must be positive");
  check_grid(t_grid);
  const Eigen::Index d = hamiltonian.dim();
  check_initial_state(rho0, d);
  const Lindbladian generator(hamiltonian, jumps);

  Trajectory traj;
  traj.rel_tol = opts.rel_tol;
  traj.abs_tol = opts.abs_tol;
  std::size_t next = 0;
  double t = 0.0;
  DenseMatrix y = rho0;
  if (t_grid.front() == 0.0) {
    record(traj, 0.0, y, opts.invariant_tol);
    ++next;
  }
  if (next == t_grid.size()) return traj;

  const double t_end = t_grid.back();
  std::array<DenseMatrix, 7> k;
  k[0] = generator(y);
  const double fnorm = k[0].norm();
  double h = fnorm > 0.0 ? 0.01 * std::max(y.norm(), 1e-3) / fnorm : t_end;
  h = std::min(h, t_end);

  DenseMatrix stage(d, d);
  while (next < t_grid.size()) {
    const double h_min = 1e-12 * std::max(1.0, std::abs(t));
    if (h < h_min) {
      throw std::runtime_error("evolve: step size underflow at t = " + std::to_string(t) +
                               "; the problem looks stiff, use the exact propagation path");
    }
    h = std::min(h, t_end - t);
    for (int s = 1; s < 7; ++s) {
      stage = y;
      for (int j = 0; j < s; ++j) {
        if (kA[s - 1][j] != 0.0) stage.noalias() += (h * kA[s - 1][j]) * k[j];
      }
      k[s] = generator(stage);
    }
    // Stage 7 is evaluated at the fifth-order solution (first-same-as-last).
    const DenseMatrix& y_new = stage;
    DenseMatrix err = DenseMatrix::Zero(d, d);
    for (int i = 0; i < 7; ++i) {
      if (kE[i] != 0.0) err.noalias() += (h * kE[i]) * k[i];
    }
    const double scale = opts.rel_tol * std::max(y.norm(), y_new.norm()) + opts.abs_tol;
    const double err_norm = err.norm() / scale;
    if (err_norm > 1.0) {
      ++traj.rejected_steps;
      h *= std::max(0.2, 0.9 * std::pow(err_norm, -0.2));
      continue;
    }
    ++traj.accepted_steps;
    const double t_new = (t_end - t - h) <= 1e-14 * std::max(1.0, t_end) ? t_end : t + h;
    while (next < t_grid.size() && t_grid[next] <= t_new) {
      const double theta = (t_grid[next] - t) / h;
      DenseMatrix out = y;
      for (int i = 0; i < 7; ++i) {
        double w = 0.0;
        double p = theta;
        for (int j = 0; j < 4; ++j) {
          w += kP[i][j] * p;
          p *= theta;
        }
        if (w != 0.0) out.noalias() += (h * w) * k[i];
      }
      record(traj, t_grid[next], std::move(out), opts.invariant_tol);
      ++next;
    }
    t = t_new;
    y = y_new;
    k[0] = k[6];
    const double grow = err_norm == 0.0 ? 10.0 : std::min(10.0, 0.9 * std::pow(err_norm, -0.2));
    h *= grow;
  }
  return traj;
}

Trajectory propagate_exact(const SparseOperator& hamiltonian, const LindbladSet& jumps, const DenseMatrix& rho0,
                           const std::vector<double>& t_grid) {
  check_grid(t_grid);
  const Eigen::Index d = hamiltonian.dim();
  if (d > 16) throw DimensionError("propagate_exact: limited to d <= 16");
  check_initial_state(rho0, d);
  const Superoperator s = assemble_superoperator(hamiltonian, jumps, {.explicit_dim_cap = 16, .require_matrix = true});
  const DenseMatrix sm(s.explicit_matrix());
  linalg::GeneralEigen eig = linalg::eig_general(sm, true);
  const ComplexVector v0 = vectorize(rho0);
  const auto lu = eig.vectors.fullPivLu();
  const ComplexVector c = lu.solve(v0);
  const double recon = (eig.vectors * c - v0).norm();
  Trajectory traj;
  if (recon > 1e-10 * v0.norm()) {
    // Defective generator (exceptional point): no eigenbasis exists, so use
    // the Padé exponential of S t instead.
    for (double t : t_grid) {
      const DenseMatrix step = (sm * t).exp();
      traj.times.push_back(t);
      traj.states.push_back(devectorize(step * v0, d));
    }
    return traj;
  }
  for (double t : t_grid) {
    ComplexVector weights(c.size());
    for (Eigen::Index j = 0; j < c.size(); ++j) weights(j) = c(j) * std::exp(eig.values[static_cast<std::size_t>(j)] * t);
    traj.times.push_back(t);
    traj.states.push_back(devectorize(eig.vectors * weights, d));
  }
  return traj;
}

ObservableSeries observable_series(const Trajectory& traj, const SparseOperator& op) {
  if (!traj.states.empty() && traj.states.front().rows() != op.dim()) {
    throw DimensionError("observable_series: operator dimension does not match the trajectory");
  }
  if (!op.is_hermitian(1e-12)) throw std::invalid_argument("observable_series: operator must be Hermitian");
  ObservableSeries s;
  s.times = traj.times;
  s.values.reserve(traj.states.size());
  for (const auto& rho : traj.states) {
    const Complex v = (op.matrix() * rho).trace();
    s.values.push_back(v.real());
    s.max_imaginary = std::max(s.max_imaginary, std::abs(v.imag()));
  }
  return s;
}

double purity_rate(const DenseMatrix& rho, const SparseOperator& hamiltonian, const LindbladSet& jumps) {
  const DenseMatrix lr = apply_lindbladian(hamiltonian, jumps, rho);
  return 2.0 * (rho * lr).trace().real();
}

DenseMatrix random_density_matrix(Eigen::Index dim, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("random_density_matrix: dim must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  DenseMatrix g(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex(re, im);
    }
  }
  DenseMatrix rho = g * g.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return rho / rho.trace().real();
}

std::vector<double> uniform_grid(double t0, double t1, double dt) {
  if (!(dt > 0.0) || t1 < t0) throw std::invalid_argument("uniform_grid: need dt > 0 and t1 >= t0");
  const auto n = static_cast<std::size_t>(std::floor((t1 - t0) / dt + 1e-3));
  std::vector<double> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out.push_back(t0 + static_cast<double>(i) * dt);
  return out;
}

double peak_to_peak(const ObservableSeries& s, double t0, double t1) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < s.times.size(); ++i) {
    if (s.times[i] < t0 || s.times[i] > t1) continue;
    lo = std::min(lo, s.values[i]);
    hi = std::max(hi, s.values[i]);
  }
  if (hi < lo) throw std::invalid_argument("peak_to_peak: no samples in the window");
  return hi - lo;
}

DftPeaks dft_peaks(const ObservableSeries& s, double t0, double t1, double rel_threshold) {
  std::vector<double> x;
  double first = 0.0;
  double last = 0.0;
  for (std::size_t i = 0; i < s.times.size(); ++i) {
    if (s.times[i] < t0 || s.times[i] > t1) continue;
    if (x.empty()) first = s.times[i];
    last = s.times[i];
    x.push_back(s.values[i]);
  }
  if (x.size() < 4) throw std::invalid_argument("dft_peaks: too few samples in the window");
  const int n = static_cast<int>(x.size());
  const double dt = (last - first) / (n - 1);
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= n;
  for (int i = 0; i < n; ++i) {
    const double hann = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * i / (n - 1)));
    x[static_cast<std::size_t>(i)] = (x[static_cast<std::size_t>(i)] - mean) * hann;
  }
  const int nbins = n / 2 + 1;
  std::vector<fftw_complex> spectrum(static_cast<std::size_t>(nbins));
  fftw_plan plan = fftw_plan_dft_r2c_1d(n, x.data(), spectrum.data(), FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  std::vector<double> mag(static_cast<std::size_t>(nbins));
  for (int k = 0; k < nbins; ++k) mag[k] = std::hypot(spectrum[k][0], spectrum[k][1]);

  DftPeaks out;
  out.bin_width = 2.0 * std::numbers::pi / (n * dt);
  const double top = *std::max_element(mag.begin() + 1, mag.end());
  for (int k = 1; k < nbins; ++k) {
    const bool left = mag[k] > mag[k - 1];
    const bool right = k + 1 == nbins || mag[k] >= mag[k + 1];
    if (left && right && mag[k] >= rel_threshold * top && top > 0.0) {
      out.omegas.push_back(k * out.bin_width);
      out.magnitudes.push_back(mag[k]);
    }
  }
  return out;
}

}  // namespace opencoh
