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

#include <gtest/gtest.h>

#include "opencoh/certificates.hpp"
#include "opencoh/stationary.hpp"

namespace opencoh {
namespace {

XxzModel xxz(double delta, std::vector<int> losses) {
  XxzRingParams p;
  p.n = 4;
  p.delta = delta;
  p.gammas.assign(losses.size(), 1.0);
  p.loss_sites = std::move(losses);
  return build_xxz_ring(p);
}

Eigen::Index single_up(int n, int site) { return ((Eigen::Index{1} << n) - 1) - (Eigen::Index{1} << (n - site)); }

double overlap_with_span(const ComplexVector& v, const DenseMatrix& basis) {
  return (basis.adjoint() * v).norm() / v.norm();
}

HubbardModel dephased_hubbard() {
  HubbardChainParams p;
  p.l_sites = 2;
  p.u = 4.0;
  p.mu = 1.0;
  p.dephasing_kind = DephasingKind::kSpin;
  p.dephasing_gammas = {0.5};
  return build_hubbard_chain(p);
}

TEST(DarkStates, XxzRingWithSingleLoss) {
  const XxzModel m = xxz(2.0, {1});
  const auto darks = find_dark_states(m.hamiltonian, m.jumps);
  // 5 stationary plus 4 oscillating modes in the spectrum are 3² outer products.
  ASSERT_EQ(darks.size(), 3u);
  const DenseMatrix basis = dark_basis(darks, 16);
  ComplexVector all_down = ComplexVector::Zero(16);
  all_down(15) = 1.0;
  ComplexVector magnon = ComplexVector::Zero(16);
  magnon(single_up(4, 2)) = 1.0;
  magnon(single_up(4, 4)) = -1.0;
  EXPECT_NEAR(overlap_with_span(all_down, basis), 1.0, 1e-10);
  EXPECT_NEAR(overlap_with_span(magnon, basis), 1.0, 1e-10);
  bool saw_eight = false;
  for (const auto& s : darks) {
    EXPECT_LT(s.residual_l, 1e-10);
    EXPECT_LT(s.residual_h, 1e-10);
    if (std::abs(s.energy - 8.0) < 1e-10) {
      saw_eight = true;
      EXPECT_NEAR(std::abs(s.vector(15)), 1.0, 1e-10);
    }
  }
  EXPECT_TRUE(saw_eight);
  for (std::size_t i = 1; i < darks.size(); ++i) EXPECT_LE(darks[i - 1].energy, darks[i].energy);
}

TEST(DarkStates, DampedQubit) {
  const HilbertSpace s(1, 2);
  const auto darks = find_dark_states(site_operator(LocalOp::kSz, 1, s), {{site_operator(LocalOp::kSm, 1, s)}});
  ASSERT_EQ(darks.size(), 1u);
  EXPECT_NEAR(darks[0].energy, -1.0, 1e-12);
  EXPECT_NEAR(std::abs(darks[0].vector(1)), 1.0, 1e-12);
}

TEST(DarkStates, NoneWhenKernelNotInvariant) {
  const HilbertSpace s(1, 2);
  const auto darks = find_dark_states(site_operator(LocalOp::kSx, 1, s), {{site_operator(LocalOp::kSm, 1, s)}});
  EXPECT_TRUE(darks.empty());
}

TEST(DarkStateFrequencies, XxzPredictionsUseMinusI) {
  const XxzModel m = xxz(2.0, {1});
  const auto darks = find_dark_states(m.hamiltonian, m.jumps);
  Lambdas lam;
  const TheoremReport r = check_theorem1(darks, m.hamiltonian, m.jumps, 1e-8, &lam);
  EXPECT_TRUE(r.passed());
  ASSERT_EQ(r.predictions.size(), darks.size() * darks.size());
  std::size_t idx = 0;
  for (std::size_t a = 0; a < darks.size(); ++a) {
    for (std::size_t b = 0; b < darks.size(); ++b, ++idx) {
      const Complex expected = -kI * (darks[a].energy - darks[b].energy);
      EXPECT_LT(std::abs(r.predictions[idx].eigenvalue - expected), 1e-9);
      EXPECT_LT(r.predictions[idx].residual, 1e-9);
    }
  }
  for (const auto& row : lam.lambda_kn) {
    for (Complex z : row) EXPECT_LT(std::abs(z), 1e-10);
  }
  EXPECT_TRUE(check_theorem1({darks.back()}, m.hamiltonian, m.jumps).passed());
}

TEST(DarkStateFrequencies, NonDarkStateFails) {
  const HilbertSpace s(1, 2);
  DarkState up;
  up.vector = ComplexVector::Zero(2);
  up.vector(0) = 1.0;
  up.energy = 1.0;
  const TheoremReport r =
      check_theorem1({up}, site_operator(LocalOp::kSz, 1, s), {{site_operator(LocalOp::kSm, 1, s)}});
  EXPECT_FALSE(r.passed());
  bool b_failed = false;
  for (const auto& c : r.conditions) b_failed |= c.name.rfind("b:", 0) == 0 && !c.pass;
  EXPECT_TRUE(b_failed);
}

TEST(SymmetryCommutant, IdentityIsTrivial) {
  const HubbardModel m = dephased_hubbard();
  const DenseMatrix rho = DenseMatrix::Identity(16, 16) / 16.0;
  EXPECT_TRUE(check_theorem3(SparseOperator::identity(m.hamiltonian.space()), rho, m.hamiltonian, m.jumps).passed());
}

TEST(SymmetryCommutant, EtaPairingOnDephasedHubbard) {
  const HubbardModel m = dephased_hubbard();
  const StationaryBasis st = stationary_states(assemble_superoperator(m.hamiltonian, m.jumps));
  const TheoremReport r = check_theorem3(m.symmetries.eta_plus, st.canonical, m.hamiltonian, m.jumps);
  EXPECT_TRUE(r.passed());
  for (const auto& c : r.conditions) EXPECT_LT(c.residual, 1e-9) << c.name;
  ASSERT_FALSE(r.predictions.empty());
  // λ = U − 2μ for ε = 0.
  EXPECT_LT(std::abs(r.predictions.front().eigenvalue - Complex(0.0, -2.0)), 1e-9);
}

TEST(SymmetryCommutant, NonCommutingOperatorFails) {
  const HilbertSpace s(1, 2);
  DenseMatrix rho = DenseMatrix::Zero(2, 2);
  rho(1, 1) = 1.0;
  const TheoremReport r = check_theorem3(site_operator(LocalOp::kSx, 1, s), rho, SparseOperator::zero(s),
                                         {{site_operator(LocalOp::kSm, 1, s)}});
  EXPECT_FALSE(r.passed());
}

TEST(PairingModes, EtaModes) {
  const HubbardModel m = dephased_hubbard();
  const DenseMatrix rho = DenseMatrix::Identity(16, 16) / 16.0;
  const SparseOperator& eta = m.symmetries.eta_plus;
  const CorollaryPremise premise = corollary1_premise(eta, rho, m.hamiltonian, m.jumps);
  EXPECT_LT(std::abs(premise.lambda - 2.0), 1e-12);
  EXPECT_LT(premise.commutator_h, 1e-12);
  struct Case {
    int n, m;
    Complex expected;
  };
  for (const Case c : {Case{1, 0, {0, -2}}, Case{2, 0, {0, -4}}, Case{1, 1, {0, 0}}, Case{0, 2, {0, 4}}}) {
    const CorollaryMode mode = build_corollary1_modes(eta, rho, c.n, c.m, m.hamiltonian, m.jumps);
    EXPECT_FALSE(mode.annihilated);
    EXPECT_LT(std::abs(mode.eigenvalue - c.expected), 1e-12);
    EXPECT_LT(mode.residual, 1e-10);
  }
  // Three pairs on two sites cannot fit.
  EXPECT_TRUE(build_corollary1_modes(eta, rho, 3, 0, m.hamiltonian, m.jumps).annihilated);
}

TEST(PairingModes, RejectsBrokenPremise) {
  const HilbertSpace s(1, 2);
  DenseMatrix rho = DenseMatrix::Zero(2, 2);
  rho(1, 1) = 1.0;
  EXPECT_THROW(build_corollary1_modes(site_operator(LocalOp::kSx, 1, s), rho, 1, 0, SparseOperator::zero(s),
                                      {{site_operator(LocalOp::kSm, 1, s)}}),
               std::runtime_error);
}

TEST(Multiblock, ProjectorsAndBlocks) {
  const HubbardModel m = dephased_hubbard();
  DenseMatrix vacuum = DenseMatrix::Zero(16, 16);
  vacuum(0, 0) = 1.0;
  const MultiblockReport a = verify_multiblock(vacuum, m.symmetries);
  EXPECT_LT(a.spin_completeness, 1e-12);
  EXPECT_LT(a.number_completeness, 1e-12);
  EXPECT_TRUE(a.single_block);
  EXPECT_TRUE(a.single_spin_block);

  const DenseMatrix mode = m.symmetries.eta_plus.dense() / 16.0;
  const MultiblockReport b = verify_multiblock(mode, m.symmetries);
  EXPECT_TRUE(b.spin_offdiagonal.empty());
  EXPECT_FALSE(b.number_offdiagonal.empty());
  EXPECT_FALSE(b.single_block);
  for (const auto& w : b.number_offdiagonal) EXPECT_NEAR(w.row_label - w.col_label, 2.0, 1e-9);
}

TEST(OscillatingModeStructure, OscillatingModesAreDarkOuterProducts) {
  const XxzModel m = xxz(2.0, {1});
  const SpectrumResult spec = full_spectrum(assemble_superoperator(m.hamiltonian, m.jumps));
  const ClassifiedSpectrum cls = classify_eigenvalues(spec);
  const auto darks = find_dark_states(m.hamiltonian, m.jumps);
  ASSERT_EQ(cls.oscillating.size(), 4u);
  EXPECT_TRUE(verify_theorem2_conclusion(spec, cls, darks).passed());
  ASSERT_FALSE(cls.decaying.empty());
  EXPECT_FALSE(verify_theorem2_modes(spec, {cls.decaying.back()}, darks).passed());
  EXPECT_THROW(verify_theorem2_modes(SpectrumResult{spec.eigenvalues, {}, {}}, {0}, darks), std::invalid_argument);
}

TEST(InvariantSearch, DampedQubitHasNone) {
  const HilbertSpace s(1, 2);
  const SparseOperator h = SparseOperator::zero(s);
  const LindbladSet ls{{site_operator(LocalOp::kSm, 1, s)}};
  const auto darks = find_dark_states(h, ls);
  const auto r = search_invariant_subspace(h, ls, darks, 8, 42, InvarianceSet::kJumpsOnly);
  EXPECT_FALSE(r.subspace.has_value());
  EXPECT_EQ(r.verdict, "not falsified");
  EXPECT_EQ(r.trials_run, 8);
}

TEST(InvariantSearch, DephasingEigenvectorIsFoundOnlyWithoutEffectiveOperator) {
  const HilbertSpace s(1, 2);
  const SparseOperator h = site_operator(LocalOp::kSx, 1, s);
  const LindbladSet ls{{site_operator(LocalOp::kSz, 1, s)}};
  const auto darks = find_dark_states(h, ls);
  ASSERT_TRUE(darks.empty());
  const auto found = search_invariant_subspace(h, ls, darks, 4, 1, InvarianceSet::kJumpsOnly);
  ASSERT_TRUE(found.subspace.has_value());
  EXPECT_EQ(found.subspace->cols(), 1);
  EXPECT_EQ(found.verdict, "found");
  EXPECT_LT(found.invariance_residual, 1e-8);
  const auto none = search_invariant_subspace(h, ls, darks, 4, 1, InvarianceSet::kJumpsAndEffective);
  EXPECT_FALSE(none.subspace.has_value());
}

TEST(InvariantSearch, XxzSingleLoss) {
  const XxzModel m = xxz(2.0, {1});
  const auto darks = find_dark_states(m.hamiltonian, m.jumps);
  const auto eff = search_invariant_subspace(m.hamiltonian, m.jumps, darks, 4, 42, InvarianceSet::kJumpsAndEffective);
  EXPECT_FALSE(eff.subspace.has_value());
  const auto jumps_only = search_invariant_subspace(m.hamiltonian, m.jumps, darks, 4, 42, InvarianceSet::kJumpsOnly);
  ASSERT_TRUE(jumps_only.subspace.has_value());
  // Kernel candidates are tried first, so the subspace found is annihilated by σ⁻₁.
  const DenseMatrix image = m.jumps.ops[0].dense() * *jumps_only.subspace;
  EXPECT_LT(image.norm(), 1e-8);
}

}  // namespace
}  // namespace opencoh
