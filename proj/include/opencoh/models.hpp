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
#include <utility>
#include <vector>

#include "opencoh/hilbert.hpp"

namespace opencoh {

/// Jump operators with their rates already folded in (L = γ σ⁻, not σ⁻).
struct LindbladSet {
  std::vector<SparseOperator> ops;

  bool empty() const { return ops.empty(); }
  std::size_t size() const { return ops.size(); }
  /// Throws DimensionError unless every operator lives on `space`.
  void check_space(const HilbertSpace& space) const;
};

struct XxzRingParams {
  int n = 4;
  double delta = 1.0;
  std::vector<int> loss_sites;  // 1-based
  std::vector<double> gammas;   // one per loss site
  /// Next-nearest-neighbour σᶻσᶻ coupling; breaks integrability, zero by default.
  double nnn_zz = 0.0;

  bool operator==(const XxzRingParams&) const = default;
};

struct XxzModel {
  SparseOperator hamiltonian;
  LindbladSet jumps;
};

/// H = Σ_j σ⁺_j σ⁻_{j+1} + σ⁻_j σ⁺_{j+1} + Δ σᶻ_j σᶻ_{j+1} on a periodic ring,
/// with one loss operator γ σ⁻ per listed site.
XxzModel build_xxz_ring(const XxzRingParams& p);

/// Σ_j σᶻ_j.
SparseOperator total_magnetization(const HilbertSpace& space);

enum class DephasingKind { kNone, kSpin, kCharge };
enum class Spin { kUp = 0, kDown = 1 };

struct HubbardChainParams {
  int l_sites = 2;
  double tau = 1.0;
  double u = 0.0;
  double mu = 0.0;
  std::vector<double> epsilon;  // empty means all zero
  DephasingKind dephasing_kind = DephasingKind::kNone;
  std::vector<double> dephasing_gammas;  // one per site, or a single shared rate
  /// (γ₁, γ₂) for L₁ = γ₁ η⁺_1 and L₂ = γ₂ η⁻_L.
  std::optional<std::pair<double, double>> doublon_drive;

  bool operator==(const HubbardChainParams&) const = default;
};

/// Global spin and η-pairing generators plus the particle number.
struct SymmetrySet {
  SparseOperator s_plus;
  SparseOperator s_minus;
  SparseOperator s_z;
  SparseOperator eta_plus;
  SparseOperator eta_minus;
  SparseOperator eta_z;
  SparseOperator n_total;
};

struct HubbardModel {
  SparseOperator hamiltonian;
  LindbladSet jumps;
  SymmetrySet symmetries;
};

/// Open-boundary Hubbard chain,
///   H = −τ Σ_{j,σ} (c†_{jσ} c_{j+1,σ} + h.c.) + U Σ_j n_{j↑} n_{j↓} + Σ_j (ε_j − μ) n_j.
/// Local basis per site: 0 = empty, 1 = ↑, 2 = ↓, 3 = ↑↓. Fermion signs come
/// from a Jordan–Wigner string over the mode order (1↑, 1↓, 2↑, 2↓, ...).
HubbardModel build_hubbard_chain(const HubbardChainParams& p);

/// Parameter checks run by the builders; std::invalid_argument on failure.
void validate(const XxzRingParams& p);
void validate(const HubbardChainParams& p);

SymmetrySet symmetry_operators(const HilbertSpace& space);

HilbertSpace hubbard_space(int l_sites);

SparseOperator annihilator(const HilbertSpace& space, int site, Spin spin);
SparseOperator creator(const HilbertSpace& space, int site, Spin spin);
SparseOperator number_operator(const HilbertSpace& space, int site, Spin spin);
/// n_{j↑} n_{j↓}
SparseOperator doublon_number(const HilbertSpace& space, int site);
/// (−1)^j c†_{j↑} c†_{j↓}
SparseOperator eta_plus_site(const HilbertSpace& space, int site);
/// ½ (n_{j↑} − n_{j↓})
SparseOperator spin_z_site(const HilbertSpace& space, int site);

/// Doublon current across bond (j, j+1): (i/2)[H_bond, D_{j+1} − D_j], where
/// H_bond is the hopping across that bond. Derived from the continuity
/// relation dD_j/dt = i[H, D_j].
SparseOperator doublon_current(const HubbardChainParams& p, int bond);

}  // namespace opencoh
