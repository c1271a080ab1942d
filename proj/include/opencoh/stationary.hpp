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

#include <array>
#include <vector>

#include "opencoh/liouvillian.hpp"
#include "opencoh/models.hpp"

namespace opencoh {

struct StationaryBasis {
  /// Hilbert–Schmidt orthonormal matrices spanning ker L.
  std::vector<DenseMatrix> modes;
  std::size_t dims = 0;
  /// Positive semidefinite, trace-one element of ker L: the long-time limit
  /// of the evolution started from 1/d.
  DenseMatrix canonical;
  /// ‖L(canonical)‖ and the singular values bracketing the rank cut.
  double canonical_residual = 0.0;
  double sigma_max = 0.0;  // largest singular value of the superoperator
  double largest_null_singular = 0.0;
  double smallest_kept_singular = 0.0;
};

/// Numerical null space of the explicit superoperator by dense SVD. A
/// singular value within a factor 10 of tol·σ_max on either side makes the
/// rank ambiguous and raises std::runtime_error with the offending values.
StationaryBasis stationary_states(const Superoperator& s, double tol = 1e-9);

/// ρ = exp(β₀ η^z + β₁ η⁺η⁻ + β₂ S^z) / tr(·). Throws std::invalid_argument
/// if any |β_i| > 50.
DenseMatrix grand_canonical_state(const std::array<double, 3>& betas, const SymmetrySet& sym);

}  // namespace opencoh
