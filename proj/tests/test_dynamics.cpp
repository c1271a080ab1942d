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

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "opencoh/dynamics.hpp"

namespace opencoh {
namespace {

DenseMatrix projector(Eigen::Index d, Eigen::Index i) {
  DenseMatrix p = DenseMatrix::Zero(d, d);
  p(i, i) = 1.0;
  return p;
}

TEST(Evolve, ClosedQubitPrecession) {
  const HilbertSpace s(1, 2);
  const DenseMatrix plus = DenseMatrix::Constant(2, 2, 0.5);
  const Trajectory traj = evolve(site_operator(LocalOp::kSz, 1, s), {}, plus, uniform_grid(0.0, 10.0, 0.1));
  const ObservableSeries sx = observable_series(traj, site_operator(LocalOp::kSx, 1, s));
  ASSERT_EQ(sx.times.size(), 101u);
  for (std::size_t i = 0; i < sx.times.size(); ++i) EXPECT_NEAR(sx.values[i], std::cos(2.0 * sx.times[i]), 1e-6);
  EXPECT_LT(sx.max_imaginary, 1e-12);
}

TEST(Evolve, DampedQubitDecay) {
  const HilbertSpace s(1, 2);
  const Trajectory traj =
      evolve(SparseOperator::zero(s), {{site_operator(LocalOp::kSm, 1, s)}}, projector(2, 0), uniform_grid(0.0, 5.0, 0.25));
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    EXPECT_NEAR(traj.states[i](0, 0).real(), std::exp(-2.0 * traj.times[i]), 1e-8);
  }
  EXPECT_LT(traj.max_trace_drift, 1e-10);
  EXPECT_LT(traj.max_hermiticity_drift, 1e-10);
  EXPECT_GT(traj.accepted_steps, 0u);
}

TEST(Evolve, MatchesEigendecomposition) {
  XxzRingParams p;
  p.n = 4;
  p.delta = 2.0;
  p.loss_sites = {1};
  p.gammas = {1.0};
  const XxzModel m = build_xxz_ring(p);
  const DenseMatrix rho0 = random_density_matrix(16, 7);
  const auto grid = uniform_grid(0.0, 20.0, 1.0);
  const Trajectory a = evolve(m.hamiltonian, m.jumps, rho0, grid);
  const Trajectory b = propagate_exact(m.hamiltonian, m.jumps, rho0, grid);
  ASSERT_EQ(a.states.size(), b.states.size());
  for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_LT((a.states[i] - b.states[i]).norm(), 1e-7) << grid[i];

  const ObservableSeries one = observable_series(a, SparseOperator::identity(m.hamiltonian.space()));
  for (double v : one.values) EXPECT_NEAR(v, 1.0, 1e-8);
}

TEST(PropagateExact, ExceptionalPoint) {
  // H = σx with σz dephasing has the double eigenvalue −2 with a single
  // eigenvector; ⟨σz⟩ = (1 + 2t) e^{−2t} from |↑⟩.
  const HilbertSpace s(1, 2);
  const SparseOperator h = site_operator(LocalOp::kSx, 1, s);
  const LindbladSet ls{{site_operator(LocalOp::kSz, 1, s)}};
  const auto grid = uniform_grid(0.0, 5.0, 0.5);
  const Trajectory exact = propagate_exact(h, ls, projector(2, 0), grid);
  const Trajectory numeric = evolve(h, ls, projector(2, 0), grid);
  const ObservableSeries sz = observable_series(exact, site_operator(LocalOp::kSz, 1, s));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    EXPECT_NEAR(sz.values[i], (1.0 + 2.0 * t) * std::exp(-2.0 * t), 1e-12);
    EXPECT_LT((exact.states[i] - numeric.states[i]).norm(), 1e-7);
  }
}

TEST(Evolve, MagnetizationStartsFromAllDown) {
  XxzRingParams p;
  p.n = 3;
  p.loss_sites = {1};
  p.gammas = {1.0};
  const XxzModel m = build_xxz_ring(p);
  const Trajectory traj = evolve(m.hamiltonian, m.jumps, projector(8, 7), {0.0, 1.0});
  const ObservableSeries mz = observable_series(traj, total_magnetization(m.hamiltonian.space()));
  // all-down is dark, so it stays put.
  EXPECT_NEAR(mz.values[0], -3.0, 1e-12);
  EXPECT_NEAR(mz.values[1], -3.0, 1e-9);
}

TEST(Evolve, RejectsBadInput) {
  const HilbertSpace s(1, 2);
  const SparseOperator h = SparseOperator::zero(s);
  const DenseMatrix rho = projector(2, 0);
  EXPECT_THROW(evolve(h, {}, rho, {}), std::invalid_argument);
  EXPECT_THROW(evolve(h, {}, rho, {1.0, 0.5}), std::invalid_argument);
  EXPECT_THROW(evolve(h, {}, rho, {-1.0}), std::invalid_argument);
  EXPECT_THROW(evolve(h, {}, 2.0 * rho, {0.0}), std::invalid_argument);
  EXPECT_THROW(evolve(h, {}, DenseMatrix::Identity(4, 4) / 4.0, {0.0}), DimensionError);
  DenseMatrix negative = DenseMatrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  EXPECT_THROW(evolve(h, {}, negative, {0.0}), std::invalid_argument);
}

TEST(Evolve, StepUnderflowIsReported) {
  const HilbertSpace s(1, 2);
  EvolveOptions opts;
  opts.rel_tol = 1e-300;
  opts.abs_tol = 0.0;
  EXPECT_THROW(evolve(site_operator(LocalOp::kSx, 1, s), {{site_operator(LocalOp::kSm, 1, s)}}, projector(2, 0),
                      {0.0, 1.0}, opts),
               std::runtime_error);
}

TEST(ObservableSeries, RequiresHermitianOperator) {
  const HilbertSpace s(1, 2);
  const Trajectory traj = evolve(SparseOperator::zero(s), {}, projector(2, 0), {0.0});
  EXPECT_THROW(observable_series(traj, site_operator(LocalOp::kSp, 1, s)), std::invalid_argument);
}

TEST(PurityRate, Oracles) {
  const HilbertSpace s(1, 2);
  const SparseOperator zero = SparseOperator::zero(s);
  const LindbladSet damping{{site_operator(LocalOp::kSm, 1, s)}};
  const LindbladSet dephasing{{site_operator(LocalOp::kSz, 1, s)}};
  EXPECT_NEAR(purity_rate(projector(2, 1), zero, damping), 0.0, 1e-15);
  EXPECT_NEAR(purity_rate(DenseMatrix::Identity(2, 2) / 2.0, zero, dephasing), 0.0, 1e-15);
  EXPECT_NEAR(purity_rate(projector(2, 0), zero, damping), -4.0, 1e-14);
}

TEST(RandomDensityMatrix, DeterministicAndValid) {
  const DenseMatrix a = random_density_matrix(6, 42);
  EXPECT_TRUE(a == random_density_matrix(6, 42));
  EXPECT_GT((a - random_density_matrix(6, 43)).norm(), 1e-3);
  EXPECT_NEAR(a.trace().real(), 1.0, 1e-14);
  EXPECT_LT((a - a.adjoint()).norm(), 1e-15);
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(a);
  EXPECT_GT(es.eigenvalues().minCoeff(), 0.0);
  EXPECT_THROW(random_density_matrix(0, 1), std::invalid_argument);
}

TEST(Grid, InclusiveEndpoints) {
  const auto g = uniform_grid(50.0, 150.0, 0.05);
  EXPECT_EQ(g.size(), 2001u);
  EXPECT_DOUBLE_EQ(g.front(), 50.0);
  EXPECT_NEAR(g.back(), 150.0, 1e-9);
  EXPECT_THROW(uniform_grid(0.0, 1.0, 0.0), std::invalid_argument);
}

TEST(SeriesAnalysis, PeakToPeakAndDft) {
  ObservableSeries s;
  s.times = uniform_grid(0.0, 200.0, 0.05);
  for (double t : s.times) s.values.push_back(0.3 + 0.5 * std::cos(3.0 * t) + 0.1 * std::sin(7.0 * t));
  const double ptp = peak_to_peak(s, 50.0, 150.0);
  EXPECT_GE(ptp, 1.0);
  EXPECT_LE(ptp, 1.2);
  EXPECT_THROW(peak_to_peak(s, 300.0, 400.0), std::invalid_argument);

  const DftPeaks peaks = dft_peaks(s, 50.0, 150.0);
  EXPECT_NEAR(peaks.bin_width, 2.0 * std::numbers::pi / 100.0, 1e-3);
  ASSERT_EQ(peaks.omegas.size(), 2u);
  EXPECT_NEAR(peaks.omegas[0], 3.0, peaks.bin_width);
  EXPECT_NEAR(peaks.omegas[1], 7.0, peaks.bin_width);
  EXPECT_GT(peaks.magnitudes[0], peaks.magnitudes[1]);
}

}  // namespace
}  // namespace opencoh
