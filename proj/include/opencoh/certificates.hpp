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
#include <optional>
#include <string>
#include <vector>

#include "opencoh/liouvillian.hpp"
#include "opencoh/models.hpp"
#include "opencoh/spectral.hpp"

namespace opencoh {

/// Pure state annihilated by every jump operator that is also an
/// eigenvector of H.
struct DarkState {
  ComplexVector vector;
  double energy = 0.0;
  double residual_h = 0.0;  // ‖Hv − ωv‖
  double residual_l = 0.0;  // max_k ‖L_k v‖
};

struct Condition {
  std::string name;
  double residual = 0.0;
  bool pass = false;
  std::string note;
};

struct Prediction {
  std::string label;
  Complex eigenvalue;       // predicted Liouvillian eigenvalue
  double residual = 0.0;    // eigen-relation residual of the constructed mode
  std::string note;
};

struct TheoremReport {
  std::string theorem;
  std::vector<Condition> conditions;
  std::vector<Prediction> predictions;
  double tolerance = 0.0;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> notes;

  bool passed() const;
  void add(std::string name, double residual, double tol, std::string note = {});
};

/// Joint kernel K of the stacked jump operators (relative SVD threshold
/// `tol`), shrunk to its largest H-invariant subspace, then diagonalised.
/// Energies ascend; degenerate clusters are re-spanned by Gram–Schmidt over
/// the projected standard basis so that the output is run-to-run stable.
std::vector<DarkState> find_dark_states(const SparseOperator& hamiltonian, const LindbladSet& jumps,
                                        double tol = 1e-8);

/// Orthonormal basis (columns) of the span of the dark states.
DenseMatrix dark_basis(const std::vector<DarkState>& darks, Eigen::Index dim);

/// Per-state λ_n from (iH + Σ L†L)|φ_n⟩ = λ_n|φ_n⟩ and λ_{k,n} from
/// L_k|φ_n⟩ = λ_{k,n}|φ_n⟩ (Rayleigh quotients).
struct Lambdas {
  std::vector<Complex> lambda_n;
  std::vector<std::vector<Complex>> lambda_kn;  // [k][n]
};

/// Conditions (a)–(c) of the dark-Hamiltonian criterion plus, for each
/// ordered pair (n, m), the predicted eigenvalue
///   μ_nm = 2 Σ_k λ_{k,n} λ*_{k,m} − λ_n − λ*_m
/// of |φ_n⟩⟨φ_m| and the residual ‖L(|φ_n⟩⟨φ_m|) − μ_nm |φ_n⟩⟨φ_m|‖. For
/// dark states μ_nm = −i(ω_n − ω_m). Throws std::invalid_argument when the
/// states are not orthonormal within `tol`.
TheoremReport check_theorem1(const std::vector<DarkState>& states, const SparseOperator& hamiltonian,
                             const LindbladSet& jumps, double tol = 1e-8, Lambdas* lambdas = nullptr);

/// Stationary-state commutant test: fits λ from [H,A]ρ∞ = λAρ∞, checks
/// [L_k,A]ρ∞ = 0 and [L_k†,A]L_kρ∞ = 0, and that Aρ∞ is an eigenmode with
/// eigenvalue −iλ. A vanishing Aρ∞ yields a "vacuous" failing report.
TheoremReport check_theorem3(const SparseOperator& a, const DenseMatrix& rho_inf, const SparseOperator& hamiltonian,
                             const LindbladSet& jumps, double tol = 1e-8);

struct CorollaryMode {
  int n = 0;
  int m = 0;
  DenseMatrix rho;
  Complex eigenvalue;  // −iλ(n − m)
  double lambda = 0.0;
  double residual = 0.0;  // ‖L(ρ) − eigenvalue·ρ‖ / ‖ρ‖
  bool annihilated = false;
};

struct CorollaryPremise {
  Complex lambda;  // Hilbert–Schmidt fit of [H, A] = λ A
  double commutator_h = 0.0;
  double commutator_l = 0.0;      // max_k ‖[L_k, A]‖
  double commutator_ldag = 0.0;   // max_k ‖[L_k†, A]‖
  double stationarity = 0.0;      // ‖L(ρ∞)‖
};

CorollaryPremise corollary1_premise(const SparseOperator& a, const DenseMatrix& rho_inf,
                                    const SparseOperator& hamiltonian, const LindbladSet& jumps);

/// ρ_nm = Aⁿ ρ∞ (A†)ᵐ with eigenvalue −iλ(n − m). Throws std::runtime_error
/// when the operator premise fails at `tol`.
CorollaryMode build_corollary1_modes(const SparseOperator& a, const DenseMatrix& rho_inf, int n, int m,
                                     const SparseOperator& hamiltonian, const LindbladSet& jumps,
                                     double tol = 1e-10);

struct BlockWeight {
  double row_label = 0.0;
  double col_label = 0.0;
  double weight = 0.0;  // relative to ‖mode‖
};

struct MultiblockReport {
  std::vector<double> spin_labels;    // eigenvalues of S⁺S⁻
  std::vector<double> number_labels;  // eigenvalues of N
  double spin_completeness = 0.0;     // ‖Σ P_μ − 1‖
  double number_completeness = 0.0;
  /// Diagonal (μ, ν) blocks ‖P_μP_ν ρ P_μP_ν‖ above tolerance.
  struct Block {
    double spin = 0.0;
    double number = 0.0;
    double weight = 0.0;
  };
  std::vector<Block> diagonal_blocks;
  std::vector<BlockWeight> spin_offdiagonal;    // ‖P_μ ρ P_μ'‖, μ ≠ μ'
  std::vector<BlockWeight> number_offdiagonal;  // ‖P_ν ρ P_ν'‖, ν ≠ ν'
  bool single_block = false;       // exactly one diagonal block, nothing off-diagonal
  bool single_spin_block = false;  // all weight in one (μ, μ) sector
};

MultiblockReport verify_multiblock(const DenseMatrix& mode, const SymmetrySet& sym, double tol = 1e-8);

/// Each oscillating eigenmode is checked for numerical rank one and for
/// both singular factors lying in the dark span. Requires retained
/// eigenvectors.
TheoremReport verify_theorem2_conclusion(const SpectrumResult& spec, const ClassifiedSpectrum& cls,
                                         const std::vector<DarkState>& darks, double tol = 1e-7);

/// Same test on an explicit list of spectrum indices (any class).
TheoremReport verify_theorem2_modes(const SpectrumResult& spec, const std::vector<std::size_t>& indices,
                                    const std::vector<DarkState>& darks, double tol = 1e-7);

enum class InvarianceSet {
  kJumpsOnly,             // L_k S ⊂ S for all k
  kJumpsAndEffective,     // additionally (iH + Σ L†L) S ⊂ S
};

struct InvariantSearchResult {
  std::optional<DenseMatrix> subspace;  // orthonormal columns, orthogonal to the dark span
  double invariance_residual = 0.0;
  int trials_run = 0;
  std::string verdict;  // "found" or "not falsified"
};

/// Randomised semi-decision search for a subspace S ⟂ D with L_k S ⊂ S.
/// A negative answer is not a proof of nonexistence.
InvariantSearchResult search_invariant_subspace(const SparseOperator& hamiltonian, const LindbladSet& jumps,
                                                const std::vector<DarkState>& darks, int trials,
                                                std::uint64_t seed, InvarianceSet set, double tol = 1e-8);

/// Hilbert–Schmidt inner product tr(a† b).
Complex hs_inner(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace opencoh
