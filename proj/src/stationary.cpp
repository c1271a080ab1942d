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

#include "opencoh/stationary.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "opencoh/linalg.hpp"

namespace opencoh {

StationaryBasis stationary_states(const Superoperator& s, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("stationary_states: tol must be positive");
  const Eigen::Index d = s.dim();
  const Eigen::Index d2 = d * d;
  if (d2 > kDenseDimCap) {
    throw DimensionError("stationary_states: superoperator dim " + std::to_string(d2) + " exceeds the dense cap " +
                         std::to_string(kDenseDimCap));
  }
  const DenseMatrix sm(s.explicit_matrix());
  linalg::Svd svd = linalg::svd(sm);
  const Eigen::VectorXd& sv = svd.singular_values;
  const double cut = tol * sv(0);
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cut / 10.0 && sv(i) < cut * 10.0) {
      char buf[200];
      std::snprintf(buf, sizeof(buf),
                    "stationary_states: ambiguous numerical rank, singular value %.3e lies within a factor 10 of "
                    "the cut %.3e (sigma_max %.3e)",
                    sv(i), cut, sv(0));
      throw std::runtime_error(buf);
    }
  }
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > cut) ++rank;
  const Eigen::Index nullity = d2 - rank;
  if (nullity == 0) throw std::runtime_error("stationary_states: the superoperator has a trivial null space");

  StationaryBasis out;
  out.dims = static_cast<std::size_t>(nullity);
  out.sigma_max = sv(0);
  out.largest_null_singular = sv(rank);
  out.smallest_kept_singular = rank > 0 ? sv(rank - 1) : 0.0;
  const DenseMatrix right = svd.v.rightCols(nullity);  // S X = 0
  const DenseMatrix left = svd.u.rightCols(nullity);   // J† S = 0
  for (Eigen::Index k = 0; k < nullity; ++k) out.modes.push_back(devectorize(right.col(k), d));

  // Spectral projection of 1/d onto ker S along the range of S:
  // P₀ = X (J†X)⁻¹ J†, well defined because the zero eigenvalue is semisimple.
  const ComplexVector mixed = vectorize(DenseMatrix::Identity(d, d) / static_cast<double>(d));
  const DenseMatrix overlap = left.adjoint() * right;
  const ComplexVector coeff = overlap.partialPivLu().solve(left.adjoint() * mixed);
  DenseMatrix rho = devectorize(right * coeff, d);
  rho = 0.5 * (rho + rho.adjoint()).eval();
  rho /= rho.trace().real();
  out.canonical = std::move(rho);
  out.canonical_residual = s.generator(out.canonical).norm();
  return out;
}

DenseMatrix grand_canonical_state(const std::array<double, 3>& betas, const SymmetrySet& sym) {
  for (double b : betas) {
    if (!std::isfinite(b) || std::abs(b) > 50.0) {
      throw std::invalid_argument("grand_canonical_state: |beta| must not exceed 50 (got " + std::to_string(b) + ")");
    }
  }
  if (sym.n_total.space().local_dim() != 4) {
    throw DimensionError("grand_canonical_state: expects a Hubbard space (local_dim 4)");
  }
  const Eigen::Index d = sym.n_total.dim();
  if (d > kDenseDimCap) throw DimensionError("grand_canonical_state: dimension exceeds the dense cap");
  DenseMatrix exponent = betas[0] * sym.eta_z.dense() + betas[1] * (sym.eta_plus * sym.eta_minus).dense() +
                         betas[2] * sym.s_z.dense();
  exponent = 0.5 * (exponent + exponent.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(exponent);
  const Eigen::VectorXd& w = eig.eigenvalues();
  const Eigen::VectorXd weights = (w.array() - w.maxCoeff()).exp();
  DenseMatrix rho = eig.eigenvectors() * weights.cast<Complex>().asDiagonal() * eig.eigenvectors().adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return rho / rho.trace().real();
}

}  // namespace opencoh
