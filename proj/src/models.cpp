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

#include "opencoh/models.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace opencoh {

namespace {

constexpr int kHubbardLocalDim = 4;

DenseMatrix fermion_parity_local() {
  DenseMatrix p = DenseMatrix::Zero(4, 4);
  p.diagonal() << 1.0, -1.0, -1.0, 1.0;
  return p;
}

DenseMatrix annihilator_local(Spin spin) {
  DenseMatrix a = DenseMatrix::Zero(4, 4);
  if (spin == Spin::kUp) {
    a(0, 1) = 1.0;  // |↑⟩  -> |0⟩
    a(2, 3) = 1.0;  // |↑↓⟩ -> |↓⟩
  } else {
    a(0, 2) = 1.0;   // |↓⟩  -> |0⟩
    a(1, 3) = -1.0;  // |↑↓⟩ -> −|↑⟩, the ↑ mode precedes ↓ in the string
  }
  return a;
}

void require_hubbard_space(const HilbertSpace& space, const char* what) {
  if (space.local_dim() != kHubbardLocalDim) {
    throw DimensionError(std::string(what) + ": expected a Hubbard space (local_dim 4), got local_dim " +
                         std::to_string(space.local_dim()));
  }
}

void require_site(const HilbertSpace& space, int site, const char* what) {
  if (site < 1 || site > space.n_sites()) {
    throw DimensionError(std::string(what) + ": site " + std::to_string(site) + " outside 1.." +
                         std::to_string(space.n_sites()));
  }
}

SparseOperator bond_hopping(const HilbertSpace& space, double tau, int j) {
  SparseOperator h = SparseOperator::zero(space);
  for (Spin s : {Spin::kUp, Spin::kDown}) {
    SparseOperator hop = creator(space, j, s) * annihilator(space, j + 1, s);
    h += Complex(-tau) * (hop + hop.adjoint());
  }
  return h;
}

}  // namespace

void LindbladSet::check_space(const HilbertSpace& space) const {
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (!(ops[k].space() == space)) {
      throw DimensionError("jump operator " + std::to_string(k) + " has dim " +
                           std::to_string(ops[k].dim()) + ", expected " + std::to_string(space.dim()));
    }
  }
}

void validate(const XxzRingParams& p) {
  if (p.n < 3) {
    throw std::invalid_argument("XXZ ring needs n >= 3 sites (n = " + std::to_string(p.n) +
                                "); a 2-site periodic ring would count its single bond twice");
  }
  if (p.loss_sites.size() != p.gammas.size()) {
    throw std::invalid_argument("XXZ ring: loss_sites and gammas must have the same length");
  }
  std::set<int> seen;
  for (std::size_t k = 0; k < p.loss_sites.size(); ++k) {
    const int s = p.loss_sites[k];
    if (s < 1 || s > p.n) {
      throw std::invalid_argument("XXZ ring: loss site " + std::to_string(s) + " outside 1.." +
                                  std::to_string(p.n));
    }
    if (!seen.insert(s).second) {
      throw std::invalid_argument("XXZ ring: loss site " + std::to_string(s) + " listed twice");
    }
    if (!(p.gammas[k] >= 0.0)) throw std::invalid_argument("XXZ ring: loss rates must be >= 0");
  }
}

XxzModel build_xxz_ring(const XxzRingParams& p) {
  validate(p);
  const HilbertSpace space(p.n, 2);
  std::vector<SparseOperator> sp;
  std::vector<SparseOperator> sm;
  std::vector<SparseOperator> sz;
  for (int j = 1; j <= p.n; ++j) {
    sp.push_back(site_operator(LocalOp::kSp, j, space));
    sm.push_back(site_operator(LocalOp::kSm, j, space));
    sz.push_back(site_operator(LocalOp::kSz, j, space));
  }
  SparseOperator h = SparseOperator::zero(space);
  for (int j = 0; j < p.n; ++j) {
    const int k = (j + 1) % p.n;
    h += sp[j] * sm[k] + sm[j] * sp[k] + Complex(p.delta) * (sz[j] * sz[k]);
    if (p.nnn_zz != 0.0) h += Complex(p.nnn_zz) * (sz[j] * sz[(j + 2) % p.n]);
  }

  LindbladSet jumps;
  for (std::size_t k = 0; k < p.loss_sites.size(); ++k) {
    jumps.ops.push_back(Complex(p.gammas[k]) * sm[p.loss_sites[k] - 1]);
  }
  return {std::move(h), std::move(jumps)};
}

SparseOperator total_magnetization(const HilbertSpace& space) {
  SparseOperator m = SparseOperator::zero(space);
  for (int j = 1; j <= space.n_sites(); ++j) m += site_operator(LocalOp::kSz, j, space);
  return m;
}

HilbertSpace hubbard_space(int l_sites) {
  if (l_sites < 1) throw std::invalid_argument("Hubbard chain needs at least one site");
  return HilbertSpace(l_sites, kHubbardLocalDim);
}

SparseOperator annihilator(const HilbertSpace& space, int site, Spin spin) {
  require_hubbard_space(space, "annihilator");
  require_site(space, site, "annihilator");
  std::vector<DenseMatrix> locals;
  locals.reserve(space.n_sites());
  for (int i = 1; i <= space.n_sites(); ++i) {
    if (i < site) {
      locals.push_back(fermion_parity_local());
    } else if (i == site) {
      locals.push_back(annihilator_local(spin));
    } else {
      locals.push_back(DenseMatrix::Identity(4, 4));
    }
  }
  return site_chain(locals, space);
}

SparseOperator creator(const HilbertSpace& space, int site, Spin spin) {
  return annihilator(space, site, spin).adjoint();
}

SparseOperator number_operator(const HilbertSpace& space, int site, Spin spin) {
  return creator(space, site, spin) * annihilator(space, site, spin);
}

SparseOperator doublon_number(const HilbertSpace& space, int site) {
  return number_operator(space, site, Spin::kUp) * number_operator(space, site, Spin::kDown);
}

SparseOperator eta_plus_site(const HilbertSpace& space, int site) {
  const double sign = (site % 2 == 0) ? 1.0 : -1.0;
  return Complex(sign) * (creator(space, site, Spin::kUp) * creator(space, site, Spin::kDown));
}

SparseOperator spin_z_site(const HilbertSpace& space, int site) {
  return Complex(0.5) * (number_operator(space, site, Spin::kUp) -
                         number_operator(space, site, Spin::kDown));
}

SymmetrySet symmetry_operators(const HilbertSpace& space) {
  require_hubbard_space(space, "symmetry_operators");
  SparseOperator s_plus = SparseOperator::zero(space);
  SparseOperator s_z = SparseOperator::zero(space);
  SparseOperator eta_plus = SparseOperator::zero(space);
  SparseOperator n_total = SparseOperator::zero(space);
  for (int j = 1; j <= space.n_sites(); ++j) {
    s_plus += creator(space, j, Spin::kUp) * annihilator(space, j, Spin::kDown);
    s_z += spin_z_site(space, j);
    eta_plus += eta_plus_site(space, j);
    n_total += number_operator(space, j, Spin::kUp) + number_operator(space, j, Spin::kDown);
  }
  SparseOperator eta_z =
      Complex(0.5) * (n_total - Complex(static_cast<double>(space.n_sites())) * SparseOperator::identity(space));
  SparseOperator s_minus = s_plus.adjoint();
  SparseOperator eta_minus = eta_plus.adjoint();
  return {std::move(s_plus), std::move(s_minus), std::move(s_z), std::move(eta_plus),
          std::move(eta_minus), std::move(eta_z), std::move(n_total)};
}

void validate(const HubbardChainParams& p) {
  if (p.l_sites < 1) throw std::invalid_argument("Hubbard chain needs at least one site");
  if (!p.epsilon.empty() && static_cast<int>(p.epsilon.size()) != p.l_sites) {
    throw std::invalid_argument("Hubbard chain: epsilon has " + std::to_string(p.epsilon.size()) +
                                " entries for " + std::to_string(p.l_sites) + " sites");
  }
  if (p.dephasing_kind != DephasingKind::kNone) {
    const auto& g = p.dephasing_gammas;
    if (g.size() != 1 && static_cast<int>(g.size()) != p.l_sites) {
      throw std::invalid_argument("Hubbard chain: dephasing_gammas needs one rate per site (or one shared rate)");
    }
    for (double x : g) {
      if (!(x >= 0.0)) throw std::invalid_argument("Hubbard chain: dephasing rates must be >= 0");
    }
  } else if (!p.dephasing_gammas.empty()) {
    throw std::invalid_argument("Hubbard chain: dephasing_gammas given but dephasing kind is none");
  }
  if (p.doublon_drive) {
    const auto [g1, g2] = *p.doublon_drive;
    if (!(g1 >= 0.0) || !(g2 >= 0.0)) throw std::invalid_argument("Hubbard chain: drive rates must be >= 0");
  }
}

HubbardModel build_hubbard_chain(const HubbardChainParams& p) {
  validate(p);
  const HilbertSpace space = hubbard_space(p.l_sites);
  std::vector<double> eps = p.epsilon;
  if (eps.empty()) eps.assign(p.l_sites, 0.0);

  SparseOperator h = SparseOperator::zero(space);
  for (int j = 1; j < p.l_sites; ++j) h += bond_hopping(space, p.tau, j);
  for (int j = 1; j <= p.l_sites; ++j) {
    h += Complex(p.u) * doublon_number(space, j);
    h += Complex(eps[j - 1] - p.mu) *
         (number_operator(space, j, Spin::kUp) + number_operator(space, j, Spin::kDown));
  }

  LindbladSet jumps;
  if (p.dephasing_kind != DephasingKind::kNone) {
    std::vector<double> g = p.dephasing_gammas;
    if (g.size() == 1) g.assign(p.l_sites, g.front());
    for (int j = 1; j <= p.l_sites; ++j) {
      SparseOperator local = p.dephasing_kind == DephasingKind::kSpin
                                 ? spin_z_site(space, j)
                                 : number_operator(space, j, Spin::kUp) + number_operator(space, j, Spin::kDown);
      jumps.ops.push_back(Complex(g[j - 1]) * local);
    }
  }
  if (p.doublon_drive) {
    const auto [g1, g2] = *p.doublon_drive;
    jumps.ops.push_back(Complex(g1) * eta_plus_site(space, 1));
    jumps.ops.push_back(Complex(g2) * eta_plus_site(space, p.l_sites).adjoint());
  }

  return {std::move(h), std::move(jumps), symmetry_operators(space)};
}

SparseOperator doublon_current(const HubbardChainParams& p, int bond) {
  const HilbertSpace space = hubbard_space(p.l_sites);
  if (bond < 1 || bond >= p.l_sites) {
    throw std::invalid_argument("doublon_current: bond " + std::to_string(bond) + " outside 1.." +
                                std::to_string(p.l_sites - 1));
  }
  const SparseOperator h_bond = bond_hopping(space, p.tau, bond);
  const SparseOperator imbalance = doublon_number(space, bond + 1) - doublon_number(space, bond);
  return Complex(0.0, 0.5) * commutator(h_bond, imbalance);
}

}  // namespace opencoh
