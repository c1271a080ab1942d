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

#pragma once

#include <cstdint>
#include <vector>

#include "opencoh/liouvillian.hpp"
#include "opencoh/models.hpp"

namespace opencoh {

struct EvolveOptions {
  double rel_tol = 1e-9;
  /// Absolute floor added to rel_tol·‖ρ‖ in the step acceptance test.
  double abs_tol = 1e-14;
  /// Tolerance on |tr ρ − 1| and ‖ρ − ρ†‖ at stored times.
  double invariant_tol = 1e-8;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<DenseMatrix> states;
  double rel_tol = 0.0;
  double abs_tol = 0.0;
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
  double max_trace_drift = 0.0;
  double max_hermiticity_drift = 0.0;
};

struct ObservableSeries {
  std::vector<double> times;
  std::vector<double> values;
  double max_imaginary = 0.0;  // largest |Im tr(Oρ)| encountered
};

/// Dormand–Prince 5(4) with step control on ‖err‖_F ≤ rel_tol·‖ρ‖_F + abs_tol
/// and fifth-order dense output at the grid times. `t_grid` must be
/// ascending and start at or after 0, with ρ0 given at t = 0. Throws
/// std::runtime_error on step-size underflow or an invariant violation.
Trajectory evolve(const SparseOperator& hamiltonian, const LindbladSet& jumps, const DenseMatrix& rho0,
                  const std::vector<double>& t_grid, const EvolveOptions& opts = {});

/// Reference propagation ρ(t) = Σ_j c_j e^{λ_j t} R_j from the eigendecomposition
/// of the explicit superoperator. Limited to d ≤ 16. When the eigenvectors
/// cannot reproduce ρ0 to 1e-10 (a defective generator), exp(S t) is
/// evaluated by scaling and squaring instead.
Trajectory propagate_exact(const SparseOperator& hamiltonian, const LindbladSet& jumps, const DenseMatrix& rho0,
                           const std::vector<double>& t_grid);

ObservableSeries observable_series(const Trajectory& traj, const SparseOperator& op);

/// d/dt tr ρ² = 2 Re tr(ρ L(ρ)).
double purity_rate(const DenseMatrix& rho, const SparseOperator& hamiltonian, const LindbladSet& jumps);

/// G G† / tr(G G†) with G filled column-major from a seeded mt19937_64 and
/// standard normal real and imaginary parts.
DenseMatrix random_density_matrix(Eigen::Index dim, std::uint64_t seed);

/// Evenly spaced grid t0, t0 + dt, ..., t1 (inclusive within dt/1000).
std::vector<double> uniform_grid(double t0, double t1, double dt);

/// max − min of `values` over samples with t in [t0, t1].
double peak_to_peak(const ObservableSeries& s, double t0, double t1);

struct DftPeaks {
  std::vector<double> omegas;      // angular frequencies of the peaks
  std::vector<double> magnitudes;
  double bin_width = 0.0;          // 2π / T
};

/// Hann-windowed DFT of the mean-removed samples with t in [t0, t1] (uniform
/// spacing assumed). Returns the local maxima whose magnitude is at least
/// rel_threshold times the largest one.
DftPeaks dft_peaks(const ObservableSeries& s, double t0, double t1, double rel_threshold = 0.1);

}  // namespace opencoh
