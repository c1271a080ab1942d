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

#include <optional>

#include "opencoh/hilbert.hpp"
#include "opencoh/models.hpp"

namespace opencoh {

/// Matrix-free Lindblad generator
///   L(ρ) = −i[H, ρ] + Σ_μ (2 L_μ ρ L_μ† − {L_μ† L_μ, ρ}).
/// Note the factor 2 on the jump term and the absence of a 1/2 on the
/// anticommutator: rates are γ² times those of the 1/2-normalised form.
class Lindbladian {
 public:
  Lindbladian(SparseOperator hamiltonian, LindbladSet jumps);

  const SparseOperator& hamiltonian() const { return hamiltonian_; }
  const LindbladSet& jumps() const { return jumps_; }
  const HilbertSpace& space() const { return hamiltonian_.space(); }
  Eigen::Index dim() const { return hamiltonian_.dim(); }

  DenseMatrix operator()(const DenseMatrix& rho) const;

 private:
  SparseOperator hamiltonian_;
  LindbladSet jumps_;
  SparseMatrix effective_;  // H − i Σ L†L
  SparseMatrix effective_adjoint_;
  std::vector<SparseMatrix> jump_adjoints_;
};

struct AssemblyOptions {
  /// Largest Hilbert dimension for which the explicit d² x d² matrix is built.
  Eigen::Index explicit_dim_cap = 256;
  /// Throw instead of falling back to matrix-free when over the cap.
  bool require_matrix = false;
};

/// Vectorised Liouvillian. Column-stacking: vec(ρ)[i + d·j] = ρ(i, j), so
/// vec(A X B) = (Bᵀ ⊗ A) vec(X) and
///   S = −i(1⊗H − Hᵀ⊗1) + Σ_μ [2 L_μ*⊗L_μ − 1⊗L_μ†L_μ − (L_μ†L_μ)ᵀ⊗1].
struct Superoperator {
  Lindbladian generator;
  std::optional<SparseMatrix> matrix;

  const HilbertSpace& space() const { return generator.space(); }
  Eigen::Index dim() const { return generator.dim(); }
  bool has_matrix() const { return matrix.has_value(); }
  /// Explicit matrix, or std::logic_error if it was not assembled.
  const SparseMatrix& explicit_matrix() const;
};

Superoperator assemble_superoperator(const SparseOperator& hamiltonian, const LindbladSet& jumps,
                                     const AssemblyOptions& opts = {});

/// Matrix-free application to a density matrix.
DenseMatrix apply_lindbladian(const SparseOperator& hamiltonian, const LindbladSet& jumps,
                              const DenseMatrix& rho);

/// S · vec(ρ) without touching the explicit matrix.
ComplexVector apply_matrix_free(const Superoperator& s, const ComplexVector& vec_rho);

ComplexVector vectorize(const DenseMatrix& rho);
DenseMatrix devectorize(const ComplexVector& v, Eigen::Index dim);

}  // namespace opencoh
