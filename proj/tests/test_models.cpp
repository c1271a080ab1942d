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

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "opencoh/models.hpp"

namespace opencoh {
namespace {

XxzModel xxz(int n, double delta, std::vector<int> losses = {1}) {
  XxzRingParams p;
  p.n = n;
  p.delta = delta;
  p.gammas.assign(losses.size(), 1.0);
  p.loss_sites = std::move(losses);
  return build_xxz_ring(p);
}

// Basis index of the state with a single up spin on `site` (index 0 = up,
// site 1 most significant).
Eigen::Index single_up(int n, int site) { return ((Eigen::Index{1} << n) - 1) - (Eigen::Index{1} << (n - site)); }

TEST(XxzRing, AllDownHasEnergyNDelta) {
  const XxzModel m = xxz(4, 2.0);
  ComplexVector down = ComplexVector::Unit(16, 15);
  EXPECT_LE((m.hamiltonian.apply(down) - 8.0 * down).norm(), 1e-14);
}

TEST(XxzRing, HamiltonianIsHermitian) {
  for (double delta : {0.0, 1.1, 2.0}) {
    const XxzModel m = xxz(5, delta, {1, 3});
    EXPECT_EQ((m.hamiltonian - m.hamiltonian.adjoint()).norm(), 0.0);
  }
}

TEST(XxzRing, NodeMagnonHasZeroEnergy) {
  const XxzModel m = xxz(4, 2.0);
  ComplexVector v = ComplexVector::Zero(16);
  v(single_up(4, 2)) = 1.0 / std::sqrt(2.0);
  v(single_up(4, 4)) = -1.0 / std::sqrt(2.0);
  EXPECT_LE(m.hamiltonian.apply(v).norm(), 1e-14);
}

TEST(XxzRing, ConservesMagnetization) {
  const XxzModel m = xxz(5, 1.3);
  EXPECT_LT(commutator(m.hamiltonian, total_magnetization(m.hamiltonian.space())).norm(), 1e-12);
}

TEST(XxzRing, LossOperatorsCarryTheRate) {
  XxzRingParams p;
  p.n = 3;
  p.loss_sites = {2};
  p.gammas = {0.5};
  const XxzModel m = build_xxz_ring(p);
  ASSERT_EQ(m.jumps.size(), 1u);
  EXPECT_EQ(m.jumps.ops[0].dense(), 0.5 * site_operator(LocalOp::kSm, 2, m.hamiltonian.space()).dense());
}

TEST(XxzRing, RejectsInvalidParameters) {
  try {
    xxz(2, 1.0);
    FAIL() << "n = 2 accepted";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("n >= 3"), std::string::npos) << e.what();
  }
  XxzRingParams p;
  p.n = 4;
  p.loss_sites = {1, 1};
  p.gammas = {1.0, 1.0};
  EXPECT_THROW(build_xxz_ring(p), std::invalid_argument);
  p.loss_sites = {5};
  p.gammas = {1.0};
  EXPECT_THROW(build_xxz_ring(p), std::invalid_argument);
  p.loss_sites = {1};
  p.gammas = {-1.0};
  EXPECT_THROW(build_xxz_ring(p), std::invalid_argument);
  p.gammas = {};
  EXPECT_THROW(build_xxz_ring(p), std::invalid_argument);
}

HubbardChainParams hubbard(int l, double u, double mu) {
  HubbardChainParams p;
  p.l_sites = l;
  p.tau = 1.0;
  p.u = u;
  p.mu = mu;
  p.dephasing_kind = DephasingKind::kSpin;
  p.dephasing_gammas = {1.0};
  return p;
}

TEST(HubbardChain, SingleSiteSpectrum) {
  HubbardChainParams p = hubbard(1, 4.0, 1.2);
  p.epsilon = {0.3};
  const HubbardModel m = build_hubbard_chain(p);
  Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(m.hamiltonian.dense());
  const double e = 0.3 - 1.2;
  std::vector<double> expected{0.0, e, e, 4.0 + 2.0 * e};
  std::sort(expected.begin(), expected.end());
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(eig.eigenvalues()(i), expected[static_cast<std::size_t>(i)], 1e-14);
}

TEST(HubbardChain, HamiltonianIsHermitian) {
  HubbardChainParams p = hubbard(3, 2.5, 0.4);
  p.epsilon = {0.1, -0.2, 0.3};
  const HubbardModel m = build_hubbard_chain(p);
  EXPECT_EQ((m.hamiltonian - m.hamiltonian.adjoint()).norm(), 0.0);
}

TEST(HubbardChain, CanonicalAnticommutation) {
  const HilbertSpace s = hubbard_space(2);
  const SparseOperator one = SparseOperator::identity(s);
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      for (Spin a : {Spin::kUp, Spin::kDown}) {
        for (Spin b : {Spin::kUp, Spin::kDown}) {
          const SparseOperator ac = anticommutator(annihilator(s, i, a), creator(s, j, b));
          const SparseOperator expected = (i == j && a == b) ? one : SparseOperator::zero(s);
          EXPECT_EQ((ac - expected).norm(), 0.0) << i << j;
          EXPECT_EQ(anticommutator(annihilator(s, i, a), annihilator(s, j, b)).norm(), 0.0);
        }
      }
    }
  }
}

TEST(HubbardSymmetries, SpinAlgebraAndSectorsCommute) {
  const SymmetrySet sym = symmetry_operators(hubbard_space(2));
  EXPECT_EQ((commutator(sym.s_plus, sym.s_minus) - Complex(2.0) * sym.s_z).norm(), 0.0);
  EXPECT_EQ((commutator(sym.eta_plus, sym.eta_minus) - Complex(2.0) * sym.eta_z).norm(), 0.0);
  EXPECT_EQ(commutator(sym.eta_plus, sym.s_plus).norm(), 0.0);
  EXPECT_EQ((sym.s_minus - sym.s_plus.adjoint()).norm(), 0.0);
  EXPECT_EQ((sym.eta_minus - sym.eta_plus.adjoint()).norm(), 0.0);
  EXPECT_TRUE(sym.n_total.is_hermitian());
  EXPECT_TRUE(sym.eta_z.is_hermitian());
  EXPECT_THROW(symmetry_operators(HilbertSpace(2, 2)), DimensionError);
}

TEST(HubbardSymmetries, EtaPlusIsAnEigenoperatorOfH) {
  const HubbardModel m = build_hubbard_chain(hubbard(2, 4.0, 1.0));
  const SparseOperator& eta = m.symmetries.eta_plus;
  const SparseOperator c = commutator(m.hamiltonian, eta);
  const DenseMatrix ed = eta.dense();
  const Complex lambda = (ed.adjoint() * c.dense()).trace() / (ed.norm() * ed.norm());
  EXPECT_LT((c - lambda * eta).norm(), 1e-12);
  EXPECT_LT(std::abs(lambda.imag()), 1e-12);
  // Under this Hamiltonian convention a doublon costs U + 2(eps - mu).
  EXPECT_NEAR(lambda.real(), 4.0 - 2.0 * 1.0, 1e-12);
}

TEST(HubbardSymmetries, ConservedQuantities) {
  const HubbardModel m = build_hubbard_chain(hubbard(3, 3.0, 0.7));
  EXPECT_LT(commutator(m.hamiltonian, m.symmetries.n_total).norm(), 1e-12);
  EXPECT_LT(commutator(m.hamiltonian, m.symmetries.s_z).norm(), 1e-12);
  for (const auto& l : m.jumps.ops) EXPECT_LT(commutator(l, m.symmetries.eta_plus).norm(), 1e-12);
}

TEST(HubbardChain, LocalEtaSquaresToZero) {
  const HilbertSpace s = hubbard_space(3);
  for (int j = 1; j <= 3; ++j) EXPECT_EQ((eta_plus_site(s, j) * eta_plus_site(s, j)).norm(), 0.0);
  // Staggering: η⁺_j = (−1)^j c†_{j↑} c†_{j↓}.
  const SparseOperator pair = creator(s, 2, Spin::kUp) * creator(s, 2, Spin::kDown);
  EXPECT_EQ((eta_plus_site(s, 2) - pair).norm(), 0.0);
  EXPECT_EQ((eta_plus_site(s, 1) + creator(s, 1, Spin::kUp) * creator(s, 1, Spin::kDown)).norm(), 0.0);
}

TEST(HubbardChain, DephasingAndDriveOperators) {
  HubbardChainParams p = hubbard(2, 1.0, 0.0);
  p.dephasing_gammas = {0.5, 2.0};
  HubbardModel m = build_hubbard_chain(p);
  ASSERT_EQ(m.jumps.size(), 2u);
  EXPECT_EQ((m.jumps.ops[1] - Complex(2.0) * spin_z_site(m.hamiltonian.space(), 2)).norm(), 0.0);

  p.dephasing_kind = DephasingKind::kCharge;
  m = build_hubbard_chain(p);
  const HilbertSpace& s = m.hamiltonian.space();
  const SparseOperator n1 = number_operator(s, 1, Spin::kUp) + number_operator(s, 1, Spin::kDown);
  EXPECT_EQ((m.jumps.ops[0] - Complex(0.5) * n1).norm(), 0.0);

  p.dephasing_kind = DephasingKind::kNone;
  p.dephasing_gammas.clear();
  p.doublon_drive = std::make_pair(0.3, 0.7);
  m = build_hubbard_chain(p);
  ASSERT_EQ(m.jumps.size(), 2u);
  EXPECT_EQ((m.jumps.ops[0] - Complex(0.3) * eta_plus_site(s, 1)).norm(), 0.0);
  EXPECT_EQ((m.jumps.ops[1] - Complex(0.7) * eta_plus_site(s, 2).adjoint()).norm(), 0.0);
}

TEST(HubbardChain, RejectsInvalidParameters) {
  HubbardChainParams p = hubbard(2, 1.0, 0.0);
  p.epsilon = {1.0};
  EXPECT_THROW(build_hubbard_chain(p), std::invalid_argument);
  p.epsilon.clear();
  p.dephasing_gammas = {-1.0};
  EXPECT_THROW(build_hubbard_chain(p), std::invalid_argument);
  p = hubbard(9, 1.0, 0.0);
  EXPECT_THROW(build_hubbard_chain(p), DimensionError);
}

TEST(HubbardChain, DoublonCurrentIsHermitian) {
  HubbardChainParams p = hubbard(3, 2.0, 0.5);
  for (int bond = 1; bond <= 2; ++bond) EXPECT_TRUE(doublon_current(p, bond).is_hermitian(1e-14));
  EXPECT_THROW(doublon_current(p, 3), std::invalid_argument);
}

}  // namespace
}  // namespace opencoh
