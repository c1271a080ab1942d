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

#include <sstream>

#include <gtest/gtest.h>

#include "opencoh/spectral.hpp"

namespace opencoh {
namespace {

Superoperator xxz_superoperator(int n, double delta, std::vector<int> losses) {
  XxzRingParams p;
  p.n = n;
  p.delta = delta;
  p.gammas.assign(losses.size(), 1.0);
  p.loss_sites = std::move(losses);
  const XxzModel m = build_xxz_ring(p);
  return assemble_superoperator(m.hamiltonian, m.jumps);
}

bool contains(const std::vector<Complex>& ev, Complex z, double tol) {
  return std::any_of(ev.begin(), ev.end(), [&](Complex w) { return std::abs(w - z) < tol; });
}

TEST(FullSpectrum, SingleQubitDamping) {
  const HilbertSpace s(1, 2);
  const Superoperator sup = assemble_superoperator(SparseOperator::zero(s), {{site_operator(LocalOp::kSm, 1, s)}});
  const SpectrumResult r = full_spectrum(sup);
  ASSERT_EQ(r.size(), 4u);
  const Complex expected[] = {-2.0, -1.0, -1.0, 0.0};  // canonical (Re, Im) order
  for (int i = 0; i < 4; ++i) EXPECT_LT(std::abs(r.eigenvalues[static_cast<std::size_t>(i)] - expected[i]), 1e-10);
  ASSERT_TRUE(r.has_vectors());
  for (double res : r.residuals) EXPECT_LT(res, 1e-8);
}

TEST(FullSpectrum, ClosedQubitPrecession) {
  const HilbertSpace s(1, 2);
  const SpectrumResult r = full_spectrum(assemble_superoperator(site_operator(LocalOp::kSz, 1, s), {}));
  EXPECT_TRUE(contains(r.eigenvalues, Complex(0, -2), 1e-12));
  EXPECT_TRUE(contains(r.eigenvalues, Complex(0, 2), 1e-12));
  const ClassifiedSpectrum c = classify_eigenvalues(r);
  EXPECT_EQ(c.stationary.size(), 2u);
  EXPECT_EQ(c.oscillating.size(), 2u);
}

TEST(FullSpectrum, XxzSingleLossHasConjugatePairAtEight) {
  const SpectrumResult r = full_spectrum(xxz_superoperator(4, 2.0, {1}));
  EXPECT_EQ(r.size(), 256u);
  EXPECT_TRUE(contains(r.eigenvalues, Complex(0, 8), 1e-6));
  EXPECT_TRUE(contains(r.eigenvalues, Complex(0, -8), 1e-6));
  const ClassifiedSpectrum c = classify_eigenvalues(r);
  EXPECT_FALSE(c.stationary.empty());
  for (std::size_t i : c.oscillating) EXPECT_NEAR(std::abs(r.eigenvalues[i].imag()), 8.0, 1e-6);
  for (Complex z : r.eigenvalues) EXPECT_LE(z.real(), 1e-8 * c.scale);
  EXPECT_LT(conjugation_mismatch(r.eigenvalues), 1e-8 * c.scale);
}

TEST(FullSpectrum, TwoLossesRelax) {
  const SpectrumResult r = full_spectrum(xxz_superoperator(4, 1.1, {1, 2}));
  const ClassifiedSpectrum c = classify_eigenvalues(r);
  EXPECT_EQ(c.stationary.size(), 1u);
  EXPECT_TRUE(c.oscillating.empty());
}

TEST(FullSpectrum, NonInteractingPointHasNoOscillations) {
  const SpectrumResult r = full_spectrum(xxz_superoperator(4, 0.0, {1}));
  EXPECT_TRUE(classify_eigenvalues(r).oscillating.empty());
}

TEST(FullSpectrum, RefusesAboveDenseCap) {
  const Superoperator sup = xxz_superoperator(4, 1.0, {1});
  EXPECT_THROW(full_spectrum(sup, {.dense_cap = 100}), DimensionError);
  const Superoperator no_matrix = [] {
    XxzRingParams p;
    p.n = 3;
    const XxzModel m = build_xxz_ring(p);
    return assemble_superoperator(m.hamiltonian, m.jumps, {.explicit_dim_cap = 2});
  }();
  EXPECT_THROW(full_spectrum(no_matrix), std::logic_error);
}

TEST(Classify, Examples) {
  SpectrumResult r;
  r.eigenvalues = {Complex(0, 0), Complex(0, -8), Complex(-1, 0.5)};
  const ClassifiedSpectrum c = classify_eigenvalues(r);
  EXPECT_EQ(c.labels[0], ModeClass::kStationary);
  EXPECT_EQ(c.labels[1], ModeClass::kOscillating);
  EXPECT_EQ(c.labels[2], ModeClass::kDecaying);
  EXPECT_DOUBLE_EQ(c.scale, 8.0);
  const ClassifiedSpectrum empty = classify_eigenvalues(SpectrumResult{});
  EXPECT_TRUE(empty.labels.empty());
  EXPECT_DOUBLE_EQ(empty.scale, 1.0);
}

TEST(Classify, DistinctFrequenciesDeduplicate) {
  SpectrumResult r;
  r.eigenvalues = {Complex(0, -8), Complex(0, 8), Complex(0, 8.0 + 1e-9), Complex(0, 2), Complex(-1, 3)};
  const ClassifiedSpectrum c = classify_eigenvalues(r);
  const auto f = distinct_oscillation_frequencies(r, c);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_NEAR(f[0], 2.0, 1e-12);
  EXPECT_NEAR(f[1], 8.0, 1e-8);
}

TEST(Scan, CountsAndSkips) {
  const std::vector<int> ns{3, 4, 9};
  const auto entries = imaginary_count_scan(ns, 2.0, 1.0, 2);
  ASSERT_EQ(entries.size(), 3u);
  EXPECT_EQ(entries[0].n, 3);
  ASSERT_TRUE(entries[1].count.has_value());
  EXPECT_GT(*entries[1].count, 0u);
  EXPECT_FALSE(entries[2].count.has_value());
  EXPECT_FALSE(entries[2].note.empty());
  const std::vector<int> free{4};
  EXPECT_EQ(imaginary_count_scan(free, 0.0, 1.0).front().count.value(), 0u);
}

TEST(SpectrumCsv, HeaderAndRows) {
  const HilbertSpace s(1, 2);
  const Superoperator sup = assemble_superoperator(SparseOperator::zero(s), {{site_operator(LocalOp::kSm, 1, s)}});
  const SpectrumResult r = full_spectrum(sup, {.vectors = VectorRetention::kNever});
  std::ostringstream os;
  write_spectrum_csv(os, r, classify_eigenvalues(r));
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "re,im,class,residual");
  int rows = 0;
  while (std::getline(is, line)) {
    ++rows;
    EXPECT_EQ(line.back(), ',');  // residual column empty without vectors
  }
  EXPECT_EQ(rows, 4);
}

TEST(TargetedSpectrum, AgreesWithDenseNearShifts) {
  const Superoperator sup = xxz_superoperator(4, 2.0, {1});
  const SpectrumResult dense = full_spectrum(sup, {.vectors = VectorRetention::kNever});
  for (bool split : {true, false}) {
    TargetedOptions t;
    t.shifts = {Complex(0.0, 8.0), Complex(0.0, -8.0), Complex(0.0, 0.0)};
    t.nev = 6;
    t.krylov_dim = 30;
    t.split_blocks = split;
    t.dense_block_limit = 0;  // force the Krylov–Schur path
    const SpectrumResult r = targeted_spectrum(sup, t);
    ASSERT_FALSE(r.eigenvalues.empty());
    EXPECT_TRUE(contains(r.eigenvalues, Complex(0, 8), 1e-8));
    EXPECT_TRUE(contains(r.eigenvalues, Complex(0, -8), 1e-8));
    for (std::size_t i = 0; i < r.size(); ++i) {
      EXPECT_LT(std::abs(nearest_eigenvalue(dense.eigenvalues, r.eigenvalues[i]) - r.eigenvalues[i]), 1e-8);
      EXPECT_LE(r.residuals[i], t.tol);
    }
  }
}

}  // namespace
}  // namespace opencoh
